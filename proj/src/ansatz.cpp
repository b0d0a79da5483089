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

#include "qcbm/ansatz.hpp"

#include <string>

#include "qcbm/errors.hpp"

namespace qcbm {

std::size_t param_count(std::size_t n_qubits, std::size_t n_layers) {
    if (n_qubits < 2) {
        throw DomainError("HEA needs at least two qubits");
    }
    return 4 * (n_qubits - 1) * n_layers + 2 * n_qubits;
}

AnsatzLayout AnsatzLayout::build(std::size_t n_qubits, std::size_t n_layers) {
    const std::size_t n_params = param_count(n_qubits, n_layers);
    if (n_qubits > kMaxQubits) {
        throw SizeError("HEA: qubit count " + std::to_string(n_qubits) +
                        " exceeds " + std::to_string(kMaxQubits));
    }
    std::vector<Gate> gates;
    gates.reserve(n_params + (n_qubits - 1) * n_layers);
    std::size_t next = 0;
    for (std::size_t layer = 0; layer < n_layers; ++layer) {
        for (std::size_t i = 0; i + 1 < n_qubits; ++i) {
            gates.emplace_back(RotationGate{Axis::X, i, next++});
            gates.emplace_back(RotationGate{Axis::X, i + 1, next++});
            gates.emplace_back(RotationGate{Axis::Y, i, next++});
            gates.emplace_back(RotationGate{Axis::Y, i + 1, next++});
            gates.emplace_back(EntanglerGate{i, i + 1});
        }
    }
    for (std::size_t q = 0; q < n_qubits; ++q) {
        gates.emplace_back(RotationGate{Axis::X, q, next++});
        gates.emplace_back(RotationGate{Axis::Y, q, next++});
    }
    return {n_qubits, n_layers, std::move(gates), n_params};
}

AnsatzLayout AnsatzLayout::from_gates(std::size_t n_qubits,
                                      std::vector<Gate> gates) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw SizeError("layout: qubit count out of range");
    }
    std::vector<int> seen;
    for (const auto &g : gates) {
        if (const auto *r = std::get_if<RotationGate>(&g)) {
            if (r->qubit >= n_qubits) {
                throw IndexError("layout: rotation wire out of range");
            }
            if (r->param_index >= seen.size()) {
                seen.resize(r->param_index + 1, 0);
            }
            ++seen[r->param_index];
        } else {
            const auto &e = std::get<EntanglerGate>(g);
            if (e.control >= n_qubits || e.target >= n_qubits ||
                e.control == e.target) {
                throw IndexError("layout: invalid entangler wires");
            }
        }
    }
    for (std::size_t k = 0; k < seen.size(); ++k) {
        if (seen[k] != 1) {
            throw DomainError("layout: parameter index " + std::to_string(k) +
                              " used " + std::to_string(seen[k]) + " times");
        }
    }
    return {n_qubits, 0, std::move(gates), seen.size()};
}

void apply_gate(std::span<Complex> amps, std::size_t n_qubits, const Gate &gate,
                std::span<const double> theta, bool inverse) noexcept {
    if (const auto *r = std::get_if<RotationGate>(&gate)) {
        const double angle = theta[r->param_index];
        kernels::rotation(amps, n_qubits, r->axis, r->qubit,
                          inverse ? -angle : angle);
    } else {
        const auto &e = std::get<EntanglerGate>(gate);
        kernels::cnot(amps, n_qubits, e.control, e.target);
    }
}

void check_params(const AnsatzLayout &layout, std::span<const double> theta) {
    if (theta.size() != layout.n_params()) {
        throw SizeError("expected " + std::to_string(layout.n_params()) +
                        " parameters, got " + std::to_string(theta.size()));
    }
}

StateVector prepare_state(const AnsatzLayout &layout,
                          std::span<const double> theta) {
    check_params(layout, theta);
    StateVector psi = init_zero(layout.n_qubits());
    for (const auto &g : layout.gates()) {
        apply_gate(psi.amplitudes(), layout.n_qubits(), g, theta);
    }
    return psi;
}

ProbVector born_distribution(const AnsatzLayout &layout,
                             std::span<const double> theta) {
    return prepare_state(layout, theta).probabilities();
}

} // namespace qcbm
