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

#include "qcbm/diff.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcbm/divergence.hpp"
#include "qcbm/errors.hpp"
#include "qcbm/sampling.hpp"

namespace qcbm {
namespace {

constexpr double kShift = std::numbers::pi / 2.0;

void check_inputs(const AnsatzLayout &layout, std::span<const double> theta,
                  std::span<const double> target) {
    check_params(layout, theta);
    if (target.size() != (std::size_t{1} << layout.n_qubits())) {
        throw SizeError("target has " + std::to_string(target.size()) +
                        " entries, register needs " +
                        std::to_string(std::size_t{1} << layout.n_qubits()));
    }
}

// Born distribution at theta with up to two parameters displaced.
ProbVector shifted_distribution(const AnsatzLayout &layout,
                                std::vector<double> &scratch,
                                std::size_t i, double di,
                                std::size_t j = 0, double dj = 0.0) {
    const double oi = scratch[i];
    const double oj = scratch[j];
    scratch[i] += di;
    scratch[j] += dj;
    ProbVector q = born_distribution(layout, scratch);
    scratch[j] = oj;
    scratch[i] = oi;
    return q;
}

} // namespace

double loss(const AnsatzLayout &layout, std::span<const double> theta,
            std::span<const double> target) {
    check_inputs(layout, theta, target);
    return jsd(target, born_distribution(layout, theta));
}

GradientVector gradient_param_shift(const AnsatzLayout &layout,
                                    std::span<const double> theta,
                                    std::span<const double> target) {
    check_inputs(layout, theta, target);
    const auto g = jsd_grad_q(target, born_distribution(layout, theta));
    std::vector<double> scratch(theta.begin(), theta.end());
    std::vector<double> out(layout.n_params());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const auto qp = shifted_distribution(layout, scratch, k, kShift);
        const auto qm = shifted_distribution(layout, scratch, k, -kShift);
        double acc = 0.0;
        for (std::size_t x = 0; x < g.size(); ++x) {
            acc += g[x] * (qp[x] - qm[x]);
        }
        out[k] = 0.5 * acc;
    }
    return {std::move(out), GradientMethod::ParamShift};
}

GradientVector gradient_adjoint(const AnsatzLayout &layout,
                                std::span<const double> theta,
                                std::span<const double> target,
                                double *loss_out) {
    check_inputs(layout, theta, target);
    const std::size_t n = layout.n_qubits();
    StateVector psi = prepare_state(layout, theta);
    const ProbVector q = psi.probabilities();
    if (loss_out != nullptr) {
        *loss_out = jsd(target, q);
    }
    const auto g = jsd_grad_q(target, q);

    std::vector<Complex> phi(psi.amplitudes().begin(), psi.amplitudes().end());
    std::vector<Complex> lambda(phi.size());
    for (std::size_t x = 0; x < phi.size(); ++x) {
        lambda[x] = g[x] * phi[x];
    }

    std::vector<double> out(layout.n_params(), 0.0);
    const auto gates = layout.gates();
    for (std::size_t pos = gates.size(); pos-- > 0;) {
        const Gate &gate = gates[pos];
        if (const auto *r = std::get_if<RotationGate>(&gate)) {
            out[r->param_index] =
                2.0 * kernels::generator_expectation(lambda, phi, n, r->axis,
                                                     r->qubit)
                          .real();
        }
        if (pos == 0) {
            break;
        }
        apply_gate(phi, n, gate, theta, true);
        apply_gate(lambda, n, gate, theta, true);
    }
    return {std::move(out), GradientMethod::Adjoint};
}

GradientVector gradient_sampled(const AnsatzLayout &layout,
                                std::span<const double> theta,
                                std::span<const double> target,
                                std::size_t n_shots, Rng &rng) {
    check_inputs(layout, theta, target);
    if (n_shots == 0) {
        throw DomainError("gradient_sampled: n_shots must be >= 1");
    }
    const auto q0 =
        sample_histogram(born_distribution(layout, theta), n_shots, rng);
    const auto g = jsd_grad_q(target, q0);
    std::vector<double> scratch(theta.begin(), theta.end());
    std::vector<double> out(layout.n_params());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const auto qp = sample_histogram(
            shifted_distribution(layout, scratch, k, kShift), n_shots, rng);
        const auto qm = sample_histogram(
            shifted_distribution(layout, scratch, k, -kShift), n_shots, rng);
        double acc = 0.0;
        for (std::size_t x = 0; x < g.size(); ++x) {
            acc += g[x] * (qp[x] - qm[x]);
        }
        out[k] = 0.5 * acc;
    }
    return {std::move(out), GradientMethod::ParamShiftSampled};
}

Eigen::MatrixXd born_jacobian(const AnsatzLayout &layout,
                              std::span<const double> theta) {
    check_params(layout, theta);
    const std::size_t dim = std::size_t{1} << layout.n_qubits();
    std::vector<double> scratch(theta.begin(), theta.end());
    Eigen::MatrixXd jac(dim, layout.n_params());
    for (std::size_t k = 0; k < layout.n_params(); ++k) {
        const auto qp = shifted_distribution(layout, scratch, k, kShift);
        const auto qm = shifted_distribution(layout, scratch, k, -kShift);
        for (std::size_t x = 0; x < dim; ++x) {
            jac(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(k)) =
                0.5 * (qp[x] - qm[x]);
        }
    }
    return jac;
}

HessianMatrix hessian(const AnsatzLayout &layout, std::span<const double> theta,
                      std::span<const double> target, HessianOptions options) {
    check_inputs(layout, theta, target);
    const auto q = born_distribution(layout, theta);
    const auto g = jsd_grad_q(target, q);
    const auto h = jsd_hess_q(target, q);
    const Eigen::MatrixXd jac = born_jacobian(layout, theta);
    const Eigen::Map<const Eigen::VectorXd> hv(h.data(),
                                               static_cast<Eigen::Index>(h.size()));

    const auto np = static_cast<Eigen::Index>(layout.n_params());
    Eigen::MatrixXd out = jac.transpose() * hv.asDiagonal() * jac;

    std::vector<double> scratch(theta.begin(), theta.end());
    for (Eigen::Index i = 0; i < np; ++i) {
        for (Eigen::Index j = options.full ? 0 : i; j < np; ++j) {
            const auto ui = static_cast<std::size_t>(i);
            const auto uj = static_cast<std::size_t>(j);
            const auto pp = shifted_distribution(layout, scratch, ui, kShift, uj, kShift);
            const auto pm = shifted_distribution(layout, scratch, ui, kShift, uj, -kShift);
            const auto mp = shifted_distribution(layout, scratch, ui, -kShift, uj, kShift);
            const auto mm = shifted_distribution(layout, scratch, ui, -kShift, uj, -kShift);
            double acc = 0.0;
            for (std::size_t x = 0; x < g.size(); ++x) {
                acc += g[x] * (pp[x] - pm[x] - mp[x] + mm[x]);
            }
            out(i, j) += 0.25 * acc;
            if (!options.full && j != i) {
                out(j, i) = out(i, j);
            }
        }
    }
    if (options.full && options.symmetrize) {
        const Eigen::MatrixXd sym = 0.5 * (out + out.transpose());
        out = sym;
    }
    return {std::move(out)};
}

QfiMatrix qfi_matrix(const AnsatzLayout &layout, std::span<const double> theta) {
    check_params(layout, theta);
    const std::size_t n = layout.n_qubits();
    const std::size_t dim = std::size_t{1} << n;
    const auto gates = layout.gates();
    const auto np = static_cast<Eigen::Index>(layout.n_params());

    // Column k holds |d_k psi> = U_{>k} (-i/2) A_k U_{<=k} |0>.
    Eigen::MatrixXcd dpsi(static_cast<Eigen::Index>(dim), np);
    StateVector prefix = init_zero(n);
    std::vector<Complex> work(dim);
    for (std::size_t pos = 0; pos < gates.size(); ++pos) {
        apply_gate(prefix.amplitudes(), n, gates[pos], theta);
        const auto *r = std::get_if<RotationGate>(&gates[pos]);
        if (r == nullptr) {
            continue;
        }
        std::copy(prefix.amplitudes().begin(), prefix.amplitudes().end(),
                  work.begin());
        kernels::generator(work, n, r->axis, r->qubit);
        for (std::size_t rest = pos + 1; rest < gates.size(); ++rest) {
            apply_gate(work, n, gates[rest], theta);
        }
        dpsi.col(static_cast<Eigen::Index>(r->param_index)) =
            Eigen::Map<const Eigen::VectorXcd>(work.data(),
                                               static_cast<Eigen::Index>(dim));
    }
    const Eigen::Map<const Eigen::VectorXcd> psi(
        prefix.amplitudes().data(), static_cast<Eigen::Index>(dim));

    const Eigen::MatrixXcd gram = dpsi.adjoint() * dpsi;
    const Eigen::VectorXcd overlap = dpsi.adjoint() * psi; // <d_i psi|psi>
    const Eigen::MatrixXcd berry = overlap * overlap.adjoint();
    Eigen::MatrixXd f = 4.0 * (gram - berry).real();
    const Eigen::MatrixXd sym = 0.5 * (f + f.transpose());
    return {sym};
}

std::size_t qfi_rank(const QfiMatrix &qfi, double tau) {
    if (qfi.entries.size() == 0) {
        return 0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        qfi.entries, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("qfi_rank: eigendecomposition failed");
    }
    const Eigen::VectorXd &evals = solver.eigenvalues();
    const double lmax = evals.maxCoeff();
    if (lmax <= 1e-14) {
        return 0;
    }
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < evals.size(); ++i) {
        if (evals(i) > tau * lmax) {
            ++rank;
        }
    }
    return rank;
}

} // namespace qcbm
