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

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include <catch_amalgamated.hpp>

#include "qcbm/errors.hpp"
#include "qcbm/rng.hpp"
#include "qcbm/statevec.hpp"
#include "support.hpp"

using namespace qcbm;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = std::numbers::pi;

StateVector random_state(Rng &rng, std::size_t n) {
    std::vector<Complex> amps(std::size_t{1} << n);
    double norm2 = 0.0;
    for (auto &a : amps) {
        a = {rng.uniform() - 0.5, rng.uniform() - 0.5};
        norm2 += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm2);
    }
    return {n, std::move(amps)};
}

StateVector basis_state(std::size_t n, std::size_t index) {
    std::vector<Complex> amps(std::size_t{1} << n);
    amps[index] = 1.0;
    return {n, std::move(amps)};
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

} // namespace

TEST_CASE("init_zero prepares the all-zeros basis state", "[statevec]") {
    for (std::size_t n : {1, 2, 3}) {
        const auto s = init_zero(n);
        REQUIRE(s.num_qubits() == n);
        REQUIRE(s.size() == (std::size_t{1} << n));
        CHECK(s.amplitudes()[0] == Complex{1.0, 0.0});
        for (std::size_t x = 1; x < s.size(); ++x) {
            CHECK(s.amplitudes()[x] == Complex{0.0, 0.0});
        }
        CHECK_THAT(s.norm(), WithinAbs(1.0, 1e-15));
    }
    const auto p = init_zero(3).probabilities();
    CHECK(p == ProbVector{1, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("init_zero rejects widths outside the memory guard", "[statevec]") {
    CHECK_THROWS_AS(init_zero(0), SizeError);
    CHECK_THROWS_AS(init_zero(kMaxQubits + 1), SizeError);
}

TEST_CASE("StateVector validates length and normalization", "[statevec]") {
    CHECK_THROWS_AS(StateVector(2, std::vector<Complex>(3)), SizeError);
    CHECK_THROWS_AS(StateVector(1, {Complex{1.0}, Complex{1.0}}), DomainError);
    CHECK_NOTHROW(StateVector(1, {Complex{0.6}, Complex{0.0, 0.8}}));
}

TEST_CASE("single-qubit rotations match their closed forms", "[statevec]") {
    SECTION("RY(pi)|0> = |1>") {
        auto s = init_zero(1);
        s.apply_rotation(Axis::Y, 0, kPi);
        CHECK_THAT(std::abs(s.amplitudes()[0]), WithinAbs(0.0, 1e-15));
        CHECK_THAT(s.amplitudes()[1].real(), WithinAbs(1.0, 1e-15));
        CHECK_THAT(s.amplitudes()[1].imag(), WithinAbs(0.0, 1e-15));
    }
    SECTION("RX(pi)|0> = -i|1>") {
        auto s = init_zero(1);
        s.apply_rotation(Axis::X, 0, kPi);
        CHECK_THAT(std::abs(s.amplitudes()[0]), WithinAbs(0.0, 1e-15));
        CHECK_THAT(s.amplitudes()[1].real(), WithinAbs(0.0, 1e-15));
        CHECK_THAT(s.amplitudes()[1].imag(), WithinAbs(-1.0, 1e-15));
    }
    SECTION("P(0) after RY(theta) is cos^2(theta/2)") {
        for (double theta : {0.3, 1.1, 2.7}) {
            auto s = init_zero(1);
            s.apply_rotation(Axis::Y, 0, theta);
            const double c = std::cos(theta / 2);
            CHECK_THAT(s.probabilities()[0], WithinAbs(c * c, 1e-15));
        }
    }
}

TEST_CASE("rotations address qubit 0 as the most significant bit",
          "[statevec]") {
    auto s = init_zero(3);
    s.apply_rotation(Axis::Y, 2, kPi);
    CHECK_THAT(s.probabilities()[1], WithinAbs(1.0, 1e-15));
    auto t = init_zero(3);
    t.apply_rotation(Axis::Y, 0, kPi);
    CHECK_THAT(t.probabilities()[4], WithinAbs(1.0, 1e-15));
}

TEST_CASE("CNOT truth table and Bell preparation", "[statevec]") {
    {
        auto s = basis_state(2, 0b10);
        s.apply_entangler(0, 1);
        CHECK(s.probabilities() == ProbVector{0, 0, 0, 1});
    }
    {
        auto s = basis_state(2, 0b00);
        s.apply_entangler(0, 1);
        CHECK(s.probabilities() == ProbVector{1, 0, 0, 0});
    }
    {
        const double r = 1.0 / std::sqrt(2.0);
        StateVector s(2, {Complex{r}, Complex{0}, Complex{r}, Complex{0}});
        s.apply_entangler(0, 1);
        CHECK_THAT(s.amplitudes()[0].real(), WithinAbs(r, 1e-15));
        CHECK_THAT(std::abs(s.amplitudes()[1]), WithinAbs(0.0, 1e-15));
        CHECK_THAT(std::abs(s.amplitudes()[2]), WithinAbs(0.0, 1e-15));
        CHECK_THAT(s.amplitudes()[3].real(), WithinAbs(r, 1e-15));
    }
    {
        // Reversed orientation: control 1 flips qubit 0.
        auto s = basis_state(2, 0b01);
        s.apply_entangler(1, 0);
        CHECK(s.probabilities() == ProbVector{0, 0, 0, 1});
    }
}

TEST_CASE("gate wrappers reject invalid wires and angles", "[statevec]") {
    auto s = init_zero(2);
    CHECK_THROWS_AS(s.apply_rotation(Axis::X, 2, 0.1), IndexError);
    CHECK_THROWS_AS(s.apply_entangler(0, 0), IndexError);
    CHECK_THROWS_AS(s.apply_entangler(0, 5), IndexError);
    CHECK_THROWS_AS(s.apply_rotation(Axis::Y, 0,
                                     std::numeric_limits<double>::infinity()),
                    DomainError);
    CHECK_THROWS_AS(s.apply_rotation(Axis::Y, 0,
                                     std::numeric_limits<double>::quiet_NaN()),
                    DomainError);
}

TEST_CASE("probabilities are squared moduli", "[statevec]") {
    StateVector s(1, {Complex{0.5, 0.5}, Complex{0.5, -0.5}});
    const auto p = s.probabilities();
    CHECK_THAT(p[0], WithinAbs(0.5, 1e-15));
    CHECK_THAT(p[1], WithinAbs(0.5, 1e-15));

    Rng rng(11);
    const auto r = random_state(rng, 3);
    double total = 0.0;
    for (double x : r.probabilities()) {
        CHECK(x >= 0.0);
        total += x;
    }
    CHECK_THAT(total, WithinAbs(1.0, 1e-10));
}

TEST_CASE("inner products", "[statevec]") {
    Rng rng(5);
    const auto psi = random_state(rng, 3);
    const Complex self = inner_product(psi, psi);
    CHECK_THAT(self.real(), WithinAbs(1.0, 1e-12));
    CHECK_THAT(self.imag(), WithinAbs(0.0, 1e-12));

    CHECK(inner_product(basis_state(2, 0), basis_state(2, 3)) == Complex{0.0});

    auto ry = init_zero(1);
    ry.apply_rotation(Axis::Y, 0, 1.2);
    const Complex overlap = inner_product(init_zero(1), ry);
    CHECK_THAT(overlap.real(), WithinAbs(std::cos(0.6), 1e-15));
    CHECK_THAT(overlap.imag(), WithinAbs(0.0, 1e-15));

    CHECK_THROWS_AS(inner_product(init_zero(1), init_zero(2)), SizeError);
}

TEST_CASE("norm is preserved over long random gate sequences",
          "[statevec][property]") {
    Rng rng(1234);
    for (std::size_t n : {1, 3, 5}) {
        auto s = random_state(rng, n);
        for (int g = 0; g < 10000; ++g) {
            const auto q = static_cast<std::size_t>(rng.below(n));
            if (n > 1 && rng.uniform() < 0.3) {
                auto t = static_cast<std::size_t>(rng.below(n - 1));
                if (t >= q) {
                    ++t;
                }
                s.apply_entangler(q, t);
            } else {
                const Axis axis = rng.uniform() < 0.5 ? Axis::X : Axis::Y;
                s.apply_rotation(axis, q, 2 * kPi * rng.uniform());
            }
        }
        CHECK(std::abs(s.norm() - 1.0) <= 1e-10);
    }
}

TEST_CASE("rotation by theta then -theta is the identity",
          "[statevec][property]") {
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        const auto psi = random_state(rng, n);
        auto s = psi;
        const auto q = static_cast<std::size_t>(rng.below(n));
        const Axis axis = trial % 2 ? Axis::X : Axis::Y;
        const double theta = 2 * kPi * rng.uniform();
        s.apply_rotation(axis, q, theta).apply_rotation(axis, q, -theta);
        CHECK(max_abs_diff(s.amplitudes(), psi.amplitudes()) <= 1e-12);
    }
}

TEST_CASE("CNOT is an involution", "[statevec][property]") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng.below(3);
        const auto psi = random_state(rng, n);
        auto s = psi;
        const auto c = static_cast<std::size_t>(rng.below(n));
        const auto t = (c + 1 + rng.below(n - 1)) % n;
        s.apply_entangler(c, t).apply_entangler(c, t);
        CHECK(max_abs_diff(s.amplitudes(), psi.amplitudes()) <= 1e-15);
    }
}

TEST_CASE("a rotation leaves the marginal of the other wires unchanged",
          "[statevec][property]") {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng.below(3);
        auto s = random_state(rng, n);
        const auto q = static_cast<std::size_t>(rng.below(n));
        const std::size_t bit = std::size_t{1} << (n - 1 - q);
        auto marginal = [&](const ProbVector &p) {
            std::vector<double> m(p.size() / 2, 0.0);
            for (std::size_t x = 0; x < p.size(); ++x) {
                const std::size_t hi = (x >> 1) & ~(bit - 1); // drop bit q
                const std::size_t lo = x & (bit - 1);
                m[hi | lo] += p[x];
            }
            return m;
        };
        const auto before = marginal(s.probabilities());
        s.apply_rotation(trial % 2 ? Axis::X : Axis::Y, q,
                         2 * kPi * rng.uniform());
        const auto after = marginal(s.probabilities());
        for (std::size_t i = 0; i < before.size(); ++i) {
            CHECK_THAT(after[i], WithinAbs(before[i], 1e-14));
        }
    }
}

TEST_CASE("generator_expectation matches an explicit product",
          "[statevec]") {
    Rng rng(3);
    for (std::size_t n : {1, 2, 3}) {
        const auto a = random_state(rng, n);
        const auto b = random_state(rng, n);
        for (std::size_t q = 0; q < n; ++q) {
            for (Axis axis : {Axis::X, Axis::Y}) {
                std::vector<Complex> gb(b.amplitudes().begin(),
                                        b.amplitudes().end());
                kernels::generator(gb, n, axis, q);
                Complex explicit_value{0.0};
                for (std::size_t x = 0; x < gb.size(); ++x) {
                    explicit_value += std::conj(a.amplitudes()[x]) * gb[x];
                }
                const Complex fused = kernels::generator_expectation(
                    a.amplitudes(), b.amplitudes(), n, axis, q);
                CHECK(std::abs(fused - explicit_value) <= 1e-15);
            }
        }
    }
}
