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
 * Helpers shared by the qcbm test suites: random inputs drawn from the
 * library's own seeded Rng and finite-difference oracles.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

#include "qcbm/rng.hpp"
#include "qcbm/types.hpp"

namespace qcbm::testing {

/// Strictly positive random distribution of the given length.
inline ProbVector random_distribution(Rng &rng, std::size_t size) {
    ProbVector p(size);
    double total = 0.0;
    for (auto &x : p) {
        x = 0.05 + rng.uniform();
        total += x;
    }
    for (auto &x : p) {
        x /= total;
    }
    return p;
}

/// Random distribution in which roughly `zero_fraction` of the entries are 0.
inline ProbVector random_sparse_distribution(Rng &rng, std::size_t size,
                                             double zero_fraction) {
    ProbVector p(size, 0.0);
    double total = 0.0;
    for (auto &x : p) {
        if (rng.uniform() >= zero_fraction) {
            x = rng.uniform() + 1e-3;
            total += x;
        }
    }
    if (total == 0.0) {
        p[rng.below(size)] = 1.0;
        return p;
    }
    for (auto &x : p) {
        x /= total;
    }
    return p;
}

inline std::vector<double> random_angles(Rng &rng, std::size_t count) {
    std::vector<double> theta(count);
    for (auto &t : theta) {
        t = 2.0 * std::numbers::pi * rng.uniform();
    }
    return theta;
}

/// Central difference of f along coordinate k.
inline double central_difference(
    const std::function<double(const std::vector<double> &)> &f,
    std::vector<double> x, std::size_t k, double h) {
    const double x0 = x[k];
    x[k] = x0 + h;
    const double fp = f(x);
    x[k] = x0 - h;
    const double fm = f(x);
    return (fp - fm) / (2.0 * h);
}

/// |a - b| / max(|a|, |b|, floor); the floor keeps near-zero pairs from
/// inflating the ratio.
inline double relative_error(double a, double b, double floor = 1e-6) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

} // namespace qcbm::testing
