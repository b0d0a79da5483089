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
 * Kullback-Leibler and Jensen-Shannon divergences on discrete
 * distributions, and the derivatives of JSD(P|Q) with respect to Q.
 *
 * All logarithms are natural, so 0 <= JSD <= ln 2. Zero-probability terms
 * follow 0 ln 0 = 0.
 */
#pragma once

#include <span>
#include <vector>

namespace qcbm {

/// Model probabilities below this floor are raised to it in gradient and
/// Hessian evaluations (never in the loss itself).
inline constexpr double kProbabilityFloor = 1e-300;

/// sum_i p_i ln(p_i / q_i). Returns +infinity when some p_i > 0 has q_i = 0.
[[nodiscard]] double kld(std::span<const double> p, std::span<const double> q);

/// Symmetrized divergence through the midpoint M = (P + Q) / 2. Always
/// finite; jsd(p, q) == jsd(q, p) bit for bit.
[[nodiscard]] double jsd(std::span<const double> p, std::span<const double> q);

/// dJSD/dq_x = 1/2 ln(2 q_x / (p_x + q_x)); 0 where p_x = q_x = 0.
[[nodiscard]] std::vector<double> jsd_grad_q(std::span<const double> p,
                                             std::span<const double> q);

/// Diagonal of d^2 JSD / dq^2, i.e. 1/2 p_x / (q_x (p_x + q_x)); the
/// off-diagonal entries vanish.
[[nodiscard]] std::vector<double> jsd_hess_q(std::span<const double> p,
                                             std::span<const double> q);

} // namespace qcbm
