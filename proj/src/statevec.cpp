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

#include "qcbm/statevec.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qcbm/errors.hpp"

namespace qcbm {
namespace kernels {
namespace {

constexpr std::size_t stride_of(std::size_t n_qubits, std::size_t qubit) {
    return std::size_t{1} << (n_qubits - 1 - qubit);
}

// Calls f(i0, i1) for every amplitude pair differing only in `qubit`,
// i0 having the bit clear.
template <class F>
void for_each_pair(std::size_t dim, std::size_t stride, F &&f) {
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            f(i, i + stride);
        }
    }
}

} // namespace

void rotation(std::span<Complex> amps, std::size_t n_qubits, Axis axis,
              std::size_t qubit, double angle) noexcept {
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    const std::size_t stride = stride_of(n_qubits, qubit);
    if (axis == Axis::X) {
        // [[c, -is], [-is, c]]
        const Complex mis{0.0, -s};
        for_each_pair(amps.size(), stride, [&](std::size_t i0, std::size_t i1) {
            const Complex a = amps[i0];
            const Complex b = amps[i1];
            amps[i0] = c * a + mis * b;
            amps[i1] = mis * a + c * b;
        });
    } else {
        // [[c, -s], [s, c]]
        for_each_pair(amps.size(), stride, [&](std::size_t i0, std::size_t i1) {
            const Complex a = amps[i0];
            const Complex b = amps[i1];
            amps[i0] = c * a - s * b;
            amps[i1] = s * a + c * b;
        });
    }
}

void cnot(std::span<Complex> amps, std::size_t n_qubits, std::size_t control,
          std::size_t target) noexcept {
    const std::size_t cmask = stride_of(n_qubits, control);
    const std::size_t tmask = stride_of(n_qubits, target);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cmask) != 0 && (i & tmask) == 0) {
            std::swap(amps[i], amps[i | tmask]);
        }
    }
}

void generator(std::span<Complex> amps, std::size_t n_qubits, Axis axis,
               std::size_t qubit) noexcept {
    const std::size_t stride = stride_of(n_qubits, qubit);
    if (axis == Axis::X) {
        const Complex mhalf_i{0.0, -0.5};
        for_each_pair(amps.size(), stride, [&](std::size_t i0, std::size_t i1) {
            const Complex a = amps[i0];
            amps[i0] = mhalf_i * amps[i1];
            amps[i1] = mhalf_i * a;
        });
    } else {
        // (-i/2) Y = [[0, -1/2], [1/2, 0]]
        for_each_pair(amps.size(), stride, [&](std::size_t i0, std::size_t i1) {
            const Complex a = amps[i0];
            amps[i0] = -0.5 * amps[i1];
            amps[i1] = 0.5 * a;
        });
    }
}

Complex generator_expectation(std::span<const Complex> bra,
                              std::span<const Complex> ket,
                              std::size_t n_qubits, Axis axis,
                              std::size_t qubit) noexcept {
    const std::size_t stride = stride_of(n_qubits, qubit);
    Complex acc{0.0, 0.0};
    if (axis == Axis::X) {
        for_each_pair(ket.size(), stride, [&](std::size_t i0, std::size_t i1) {
            acc += std::conj(bra[i0]) * ket[i1] + std::conj(bra[i1]) * ket[i0];
        });
        return acc * Complex{0.0, -0.5};
    }
    for_each_pair(ket.size(), stride, [&](std::size_t i0, std::size_t i1) {
        acc += std::conj(bra[i1]) * ket[i0] - std::conj(bra[i0]) * ket[i1];
    });
    return 0.5 * acc;
}

} // namespace kernels

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw SizeError("StateVector: qubit count " + std::to_string(n_qubits) +
                        " outside [1, 24]");
    }
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw SizeError("StateVector: expected " +
                        std::to_string(std::size_t{1} << n_qubits) +
                        " amplitudes, got " + std::to_string(amps_.size()));
    }
    if (std::abs(norm() - 1.0) > 1e-10) {
        throw DomainError("StateVector: amplitudes are not normalized");
    }
}

void StateVector::check_wire(std::size_t qubit) const {
    if (qubit >= n_qubits_) {
        throw IndexError("qubit " + std::to_string(qubit) +
                         " out of range for a " + std::to_string(n_qubits_) +
                         "-qubit register");
    }
}

StateVector &StateVector::apply_rotation(Axis axis, std::size_t qubit,
                                         double angle) {
    check_wire(qubit);
    if (!std::isfinite(angle)) {
        throw DomainError("rotation angle must be finite");
    }
    kernels::rotation(amps_, n_qubits_, axis, qubit, angle);
    return *this;
}

StateVector &StateVector::apply_entangler(std::size_t control,
                                          std::size_t target) {
    check_wire(control);
    check_wire(target);
    if (control == target) {
        throw IndexError("CNOT control and target must differ");
    }
    kernels::cnot(amps_, n_qubits_, control, target);
    return *this;
}

ProbVector StateVector::probabilities() const {
    ProbVector out(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        out[i] = std::norm(amps_[i]);
    }
    return out;
}

double StateVector::norm() const noexcept {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

StateVector init_zero(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw SizeError("init_zero: qubit count " + std::to_string(n_qubits) +
                        " outside [1, 24]");
    }
    StateVector sv;
    sv.n_qubits_ = n_qubits;
    sv.amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    sv.amps_[0] = 1.0;
    return sv;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw SizeError("inner_product: register widths differ");
    }
    Complex acc{0.0, 0.0};
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

} // namespace qcbm
