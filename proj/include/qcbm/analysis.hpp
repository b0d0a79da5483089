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

/**
 * @file
 * Aggregation of training sweeps, critical-depth detection, analytic
 * overparameterization bounds and landscape diagnostics.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcbm/diff.hpp"
#include "qcbm/rng.hpp"
#include "qcbm/train.hpp"

namespace qcbm {

struct Quartiles {
    double q1;
    double median;
    double q3;

    [[nodiscard]] double iqr() const noexcept { return q3 - q1; }
};

/// Linear interpolation between order statistics at position (k - 1) q.
/// Throws DomainError on empty input.
[[nodiscard]] double quantile(std::span<const double> values, double q);
[[nodiscard]] Quartiles quartiles(std::span<const double> values);

struct SweepRow {
    std::size_t p;
    std::size_t n_params;
    Quartiles loss;
    Quartiles tts;
    std::size_t n_runs;
    std::size_t n_failures;
};

struct SweepSummary {
    std::size_t n_qubits;
    std::string target;
    std::vector<SweepRow> rows;
};

/// Final-loss and TTS quartiles over the records of a single depth. Failed
/// runs contribute their last recorded loss and are counted in n_failures.
[[nodiscard]] SweepRow summarize_depth(std::size_t n_qubits, std::size_t p,
                                       std::span<const RunRecord> records);

/// Smallest p whose 75th-percentile final loss is <= epsilon.
[[nodiscard]] std::optional<std::size_t> detect_pc(const SweepSummary &summary,
                                                   double epsilon = kDefaultEpsilon);

/// Parameter dimension of pure n-qubit states, 2^{n+1} - 2.
[[nodiscard]] std::uint64_t d_c(std::size_t n_qubits);

/// Dimension of the HEA dynamical Lie algebra, 4^n.
[[nodiscard]] std::uint64_t dla_dim(std::size_t n_qubits);

/// Smallest p >= 0 with 4(n-1)p + 2n >= bound.
[[nodiscard]] std::uint64_t depth_to_bound(std::size_t n_qubits,
                                           std::uint64_t bound);

/// A computed depth next to the published value it is compared with.
struct BoundCell {
    std::uint64_t computed;
    std::optional<std::uint64_t> published;

    [[nodiscard]] bool discrepant() const noexcept {
        return published && *published != computed;
    }
};

struct BoundsReport {
    std::size_t n_qubits;
    std::uint64_t d_c;
    std::uint64_t dla_dim;
    BoundCell p_to_dc;
    BoundCell p_to_dla;
    /// Human-readable notes, one per discrepant cell.
    std::vector<std::string> flags;
};

/// Published values exist for n in {2, 3, 4, 6, 8}.
[[nodiscard]] BoundsReport bounds_report(std::size_t n_qubits);

struct GradientStudy {
    double median_var;
    double iqr_var;
    double median_linf;
    double iqr_linf;
};

/// Per-gradient sample variance across components and max-abs component,
/// aggregated as median and IQR across gradients.
[[nodiscard]] GradientStudy summarize_gradients(
    std::span<const std::vector<double>> gradients);

/// Exact gradients at n_inits random initializations of the (n, p) HEA.
[[nodiscard]] GradientStudy gradient_variance_study(
    std::size_t n_qubits, std::size_t p, std::span<const double> target,
    std::size_t n_inits, Rng &rng);

enum class CurvatureKind { Minimum, Saddle, Maximum };

inline constexpr double kHessianZeroTolerance = 1e-8;

struct SpectrumSummary {
    std::vector<double> eigenvalues; // ascending
    std::size_t n_zero;
    double e_min;
    double e_max;
    CurvatureKind kind;
};

[[nodiscard]] SpectrumSummary hessian_spectrum_summary(
    const HessianMatrix &h, double zero_tol = kHessianZeroTolerance);

[[nodiscard]] const char *curvature_name(CurvatureKind kind) noexcept;

} // namespace qcbm
