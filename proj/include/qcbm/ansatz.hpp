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
 * Hardware-efficient ansatz (HEA) programs and Born distributions.
 *
 * A depth-p layout on n wires is p repetitions of the block
 *
 *     for i in 0 .. n-2:  RX(i) RX(i+1) RY(i) RY(i+1) CNOT(i -> i+1)
 *
 * followed by a final RX, RY pair on every wire in ascending order.
 * Parameter indices follow gate order, giving 4(n-1)p + 2n parameters.
 */
#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "qcbm/statevec.hpp"
#include "qcbm/types.hpp"

namespace qcbm {

struct RotationGate {
    Axis axis;
    std::size_t qubit;
    std::size_t param_index;
};

struct EntanglerGate {
    std::size_t control;
    std::size_t target;
};

using Gate = std::variant<RotationGate, EntanglerGate>;

/// 4(n-1)p + 2n. Throws DomainError for n < 2.
[[nodiscard]] std::size_t param_count(std::size_t n_qubits, std::size_t n_layers);

/**
 * @brief Immutable gate program with parameter bookkeeping.
 *
 * Besides the HEA produced by build(), arbitrary programs can be assembled
 * with from_gates() (used for small analytic test circuits); those report
 * n_layers() == 0 and are not bound by the HEA parameter formula.
 */
class AnsatzLayout {
  public:
    [[nodiscard]] static AnsatzLayout build(std::size_t n_qubits,
                                            std::size_t n_layers);

    /// Validates wires and requires every parameter index in [0, n_params)
    /// to be used by exactly one rotation.
    [[nodiscard]] static AnsatzLayout from_gates(std::size_t n_qubits,
                                                 std::vector<Gate> gates);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t n_layers() const noexcept { return n_layers_; }
    [[nodiscard]] std::size_t n_params() const noexcept { return n_params_; }
    [[nodiscard]] std::span<const Gate> gates() const noexcept { return gates_; }

  private:
    AnsatzLayout(std::size_t n_qubits, std::size_t n_layers,
                 std::vector<Gate> gates, std::size_t n_params)
        : n_qubits_(n_qubits), n_layers_(n_layers), gates_(std::move(gates)),
          n_params_(n_params) {}

    std::size_t n_qubits_;
    std::size_t n_layers_;
    std::vector<Gate> gates_;
    std::size_t n_params_;
};

/// Applies one gate to a raw buffer; `inverse` applies its adjoint.
void apply_gate(std::span<Complex> amps, std::size_t n_qubits, const Gate &gate,
                std::span<const double> theta, bool inverse = false) noexcept;

/// U(theta)|0...0>. Throws SizeError when theta does not match the layout.
[[nodiscard]] StateVector prepare_state(const AnsatzLayout &layout,
                                        std::span<const double> theta);

[[nodiscard]] ProbVector born_distribution(const AnsatzLayout &layout,
                                           std::span<const double> theta);

/// Throws SizeError unless theta.size() == layout.n_params().
void check_params(const AnsatzLayout &layout, std::span<const double> theta);

} // namespace qcbm
