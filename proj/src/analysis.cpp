// Copyright 2026 The qcbm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcbm/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "qcbm/errors.hpp"

namespace qcbm {
namespace {

struct PublishedBounds {
    std::size_t n;
    std::uint64_t p_dc;
    std::uint64_t p_dla;
};

// Published depths needed to reach D_C and dim(g_HEA).
constexpr std::array<PublishedBounds, 5> kPublished{{
    {2, 1, 7},
    {3, 1, 7},
    {4, 2, 20},
    {6, 5, 204},
    {8, 17, 2340},
}};

double sample_variance(std::span<const double> v) {
    if (v.size() < 2) {
        return 0.0;
    }
    double mean = 0.0;
    for (double x : v) {
        mean += x;
    }
    mean /= static_cast<double>(v.size());
    double acc = 0.0;
    for (double x : v) {
        acc += (x - mean) * (x - mean);
    }
    return acc / static_cast<double>(v.size() - 1);
}

} // namespace

double quantile(std::span<const double> values, double q) {
    if (values.empty()) {
        throw DomainError("quantile of an empty sample");
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

Quartiles quartiles(std::span<const double> values) {
    return {quantile(values, 0.25), quantile(values, 0.5),
            quantile(values, 0.75)};
}

SweepRow summarize_depth(std::size_t n_qubits, std::size_t p,
                         std::span<const RunRecord> records) {
    if (records.empty()) {
        throw DomainError("summarize_depth: no records");
    }
    std::vector<double> finals;
    std::vector<double> times;
    std::size_t failures = 0;
    for (const auto &r : records) {
        finals.push_back(r.final_loss());
        times.push_back(static_cast<double>(r.tts));
        failures += r.failed ? 1 : 0;
    }
    return {p,           param_count(n_qubits, p), quartiles(finals),
            quartiles(times), records.size(),      failures};
}

std::optional<std::size_t> detect_pc(const SweepSummary &summary,
                                     double epsilon) {
    for (const auto &row : summary.rows) {
        if (row.loss.q3 <= epsilon) {
            return row.p;
        }
    }
    return std::nullopt;
}

std::uint64_t d_c(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > 62) {
        throw DomainError("d_c: qubit count out of range");
    }
    return (std::uint64_t{1} << (n_qubits + 1)) - 2;
}

std::uint64_t dla_dim(std::size_t n_qubits) {
    if (n_qubits < 2 || n_qubits > 31) {
        throw DomainError("dla_dim: qubit count out of range");
    }
    return std::uint64_t{1} << (2 * n_qubits);
}

std::uint64_t depth_to_bound(std::size_t n_qubits, std::uint64_t bound) {
    if (n_qubits < 2) {
        throw DomainError("depth_to_bound: need at least two qubits");
    }
    const std::uint64_t base = 2 * n_qubits;
    const std::uint64_t per_layer = 4 * (n_qubits - 1);
    if (bound <= base) {
        return 0;
    }
    return (bound - base + per_layer - 1) / per_layer;
}

BoundsReport bounds_report(std::size_t n_qubits) {
    BoundsReport rep{n_qubits,
                     d_c(n_qubits),
                     dla_dim(n_qubits),
                     {depth_to_bound(n_qubits, d_c(n_qubits)), std::nullopt},
                     {depth_to_bound(n_qubits, dla_dim(n_qubits)), std::nullopt},
                     {}};
    for (const auto &pub : kPublished) {
        if (pub.n == n_qubits) {
            rep.p_to_dc.published = pub.p_dc;
            rep.p_to_dla.published = pub.p_dla;
        }
    }
    auto flag = [&](const char *name, const BoundCell &cell) {
        if (cell.discrepant()) {
            rep.flags.push_back(std::string(name) + ": ceiling rule gives " +
                                std::to_string(cell.computed) +
                                ", published table lists " +
                                std::to_string(*cell.published));
        }
    };
    flag("p_to_dc", rep.p_to_dc);
    flag("p_to_dla", rep.p_to_dla);
    return rep;
}

GradientStudy summarize_gradients(std::span<const std::vector<double>> gradients) {
    if (gradients.empty()) {
        throw DomainError("summarize_gradients: no gradients");
    }
    std::vector<double> vars;
    std::vector<double> linfs;
    for (const auto &g : gradients) {
        vars.push_back(sample_variance(g));
        double m = 0.0;
        for (double x : g) {
            m = std::max(m, std::abs(x));
        }
        linfs.push_back(m);
    }
    const auto qv = quartiles(vars);
    const auto ql = quartiles(linfs);
    return {qv.median, qv.iqr(), ql.median, ql.iqr()};
}

GradientStudy gradient_variance_study(std::size_t n_qubits, std::size_t p,
                                      std::span<const double> target,
                                      std::size_t n_inits, Rng &rng) {
    if (n_inits < 2) {
        throw DomainError("gradient_variance_study: need at least two inits");
    }
    const auto layout = AnsatzLayout::build(n_qubits, p);
    std::vector<std::vector<double>> grads;
    grads.reserve(n_inits);
    for (std::size_t i = 0; i < n_inits; ++i) {
        const auto theta = init_params(layout, rng);
        grads.push_back(gradient_adjoint(layout, theta, target).values);
    }
    return summarize_gradients(grads);
}

SpectrumSummary hessian_spectrum_summary(const HessianMatrix &h,
                                         double zero_tol) {
    if (h.entries.rows() != h.entries.cols() || h.entries.rows() == 0) {
        throw NumericError("hessian_spectrum_summary: matrix must be square "
                           "and non-empty");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        h.entries, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("hessian_spectrum_summary: eigensolver failed");
    }
    const Eigen::VectorXd &ev = solver.eigenvalues();
    SpectrumSummary out;
    out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    out.n_zero = static_cast<std::size_t>(
        std::count_if(out.eigenvalues.begin(), out.eigenvalues.end(),
                      [&](double x) { return std::abs(x) <= zero_tol; }));
    out.e_min = out.eigenvalues.front();
    out.e_max = out.eigenvalues.back();
    if (out.e_min >= -zero_tol) {
        out.kind = CurvatureKind::Minimum;
    } else if (out.e_max > zero_tol) {
        out.kind = CurvatureKind::Saddle;
    } else {
        out.kind = CurvatureKind::Maximum;
    }
    return out;
}

const char *curvature_name(CurvatureKind kind) noexcept {
    switch (kind) {
    case CurvatureKind::Minimum:
        return "minimum";
    case CurvatureKind::Saddle:
        return "saddle";
    case CurvatureKind::Maximum:
        return "maximum";
    }
    return "unknown";
}

} // namespace qcbm
