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
 * Derivatives of the JSD training loss with respect to circuit parameters,
 * and the quantum Fisher information (QFI) of the prepared state.
 *
 * Every rotation in a layout is exp(-i theta A / 2) with an involutory
 * generator A, so the two-term parameter-shift rule with shift pi/2 is exact.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qcbm/ansatz.hpp"
#include "qcbm/rng.hpp"
#include "qcbm/types.hpp"

namespace qcbm {

enum class GradientMethod { Adjoint, ParamShift, ParamShiftSampled };

struct GradientVector {
    std::vector<double> values;
    GradientMethod method;
};

struct HessianMatrix {
    Eigen::MatrixXd entries;
};

struct QfiMatrix {
    Eigen::MatrixXd entries;
};

/// JSD(target | born_distribution(layout, theta)).
[[nodiscard]] double loss(const AnsatzLayout &layout,
                          std::span<const double> theta,
                          std::span<const double> target);

/**
 * @brief Exact gradient from 2 * n_params shifted circuit evaluations.
 *
 * Component k is sum_x dJSD/dq_x * [q(theta + pi/2 e_k) - q(theta - pi/2 e_k)]_x / 2
 * with dJSD/dq taken at the unshifted distribution.
 */
[[nodiscard]] GradientVector gradient_param_shift(const AnsatzLayout &layout,
                                                  std::span<const double> theta,
                                                  std::span<const double> target);

/**
 * @brief Exact gradient by reverse-mode (adjoint) differentiation.
 *
 * One forward pass prepares psi; the co-state w_x = dJSD/dq_x * psi_x is
 * then swept backwards through the inverse gates alongside psi, reading off
 * dL/dtheta_k = 2 Re <w_k| (-i/2) A_k |psi_k> at every rotation. Work is
 * O(n_gates * 2^n) with two extra state buffers.
 *
 * @param loss_out When non-null, receives the loss at theta.
 */
[[nodiscard]] GradientVector gradient_adjoint(const AnsatzLayout &layout,
                                              std::span<const double> theta,
                                              std::span<const double> target,
                                              double *loss_out = nullptr);

/// Parameter-shift gradient with every distribution (the unshifted one used
/// for dJSD/dq, and each shifted one) replaced by a fresh n_shots histogram.
[[nodiscard]] GradientVector gradient_sampled(const AnsatzLayout &layout,
                                              std::span<const double> theta,
                                              std::span<const double> target,
                                              std::size_t n_shots, Rng &rng);

/// Jacobian dq_x / dtheta_k (2^n rows, n_params columns) by parameter shift.
[[nodiscard]] Eigen::MatrixXd born_jacobian(const AnsatzLayout &layout,
                                            std::span<const double> theta);

struct HessianOptions {
    /// Evaluate every (i, j) pair instead of mirroring the upper triangle.
    bool full = false;
    /// Return (H + H^T) / 2. Only meaningful together with `full`.
    bool symmetrize = true;
};

/**
 * @brief Loss Hessian by the double parameter-shift rule:
 *
 *     H_ij = sum_x g_x d2q_x/dtheta_i dtheta_j + sum_x h_x dq_x/dtheta_i dq_x/dtheta_j
 *
 * with g = jsd_grad_q, h = jsd_hess_q and
 * d2q/dtheta_i dtheta_j = [q(+,+) - q(+,-) - q(-,+) + q(-,-)] / 4.
 */
[[nodiscard]] HessianMatrix hessian(const AnsatzLayout &layout,
                                    std::span<const double> theta,
                                    std::span<const double> target,
                                    HessianOptions options = {});

/// Pure-state QFI, F_ij = 4 Re[<d_i psi|d_j psi> - <d_i psi|psi><psi|d_j psi>],
/// from derivative states built by generator insertion.
[[nodiscard]] QfiMatrix qfi_matrix(const AnsatzLayout &layout,
                                   std::span<const double> theta);

/// Relative tolerance for qfi_rank.
inline constexpr double kQfiRankTolerance = 1e-10;

/// Number of eigenvalues above tau * lambda_max; 0 when lambda_max <= 1e-14.
[[nodiscard]] std::size_t qfi_rank(const QfiMatrix &qfi,
                                   double tau = kQfiRankTolerance);

} // namespace qcbm
