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
 * Dense pure-state simulation of n-qubit registers.
 *
 * Basis index x encodes a bitstring with qubit 0 as the most significant
 * bit: for n = 3, index 1 is |001> (only qubit 2 set) and index 4 is |100>.
 * Rotations follow R_A(theta) = exp(-i theta A / 2).
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qcbm/types.hpp"

namespace qcbm {

/// Largest register accepted by StateVector (2^24 amplitudes, 256 MiB).
inline constexpr std::size_t kMaxQubits = 24;

namespace kernels {

// In-place gate kernels over a raw amplitude buffer of length 2^n_qubits.
// They do not check normalization, so the adjoint sweep can reuse them on
// co-state buffers. Wire indices are validated by the StateVector wrappers.

void rotation(std::span<Complex> amps, std::size_t n_qubits, Axis axis,
              std::size_t qubit, double angle) noexcept;

void cnot(std::span<Complex> amps, std::size_t n_qubits, std::size_t control,
          std::size_t target) noexcept;

/// Multiplies the wire by the rotation generator (-i/2) A.
void generator(std::span<Complex> amps, std::size_t n_qubits, Axis axis,
               std::size_t qubit) noexcept;

/// <bra| (-i/2) A_qubit |ket> without materializing the product state.
[[nodiscard]] Complex generator_expectation(std::span<const Complex> bra,
                                            std::span<const Complex> ket,
                                            std::size_t n_qubits, Axis axis,
                                            std::size_t qubit) noexcept;

} // namespace kernels

class StateVector {
  public:
    /// Wraps caller-provided amplitudes; the length must be 2^n_qubits and
    /// the norm 1 within 1e-10.
    StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }

    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }

    StateVector &apply_rotation(Axis axis, std::size_t qubit, double angle);
    StateVector &apply_entangler(std::size_t control, std::size_t target);

    [[nodiscard]] ProbVector probabilities() const;
    [[nodiscard]] double norm() const noexcept;

  private:
    StateVector() = default;
    void check_wire(std::size_t qubit) const;

    std::size_t n_qubits_{0};
    std::vector<Complex> amps_;

    friend StateVector init_zero(std::size_t n_qubits);
};

/// |0...0> on n qubits; throws SizeError outside 1 <= n <= kMaxQubits.
[[nodiscard]] StateVector init_zero(std::size_t n_qubits);

/// <a|b>; throws SizeError when the registers differ in width.
[[nodiscard]] Complex inner_product(const StateVector &a, const StateVector &b);

} // namespace qcbm
