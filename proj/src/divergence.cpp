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

#include "qcbm/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qcbm/errors.hpp"

namespace qcbm {
namespace {

void check_sizes(std::span<const double> p, std::span<const double> q,
                 const char *op) {
    if (p.size() != q.size()) {
        throw SizeError(std::string(op) + ": distribution lengths differ (" +
                        std::to_string(p.size()) + " vs " +
                        std::to_string(q.size()) + ")");
    }
}

// x ln(x / m) with 0 ln 0 = 0; m >= x / 2 > 0 whenever x > 0.
double midpoint_term(double x, double m) {
    return x > 0.0 ? x * std::log(x / m) : 0.0;
}

} // namespace

double kld(std::span<const double> p, std::span<const double> q) {
    check_sizes(p, q, "kld");
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) {
            continue;
        }
        if (q[i] <= 0.0) {
            return std::numeric_limits<double>::infinity();
        }
        acc += p[i] * std::log(p[i] / q[i]);
    }
    return acc;
}

double jsd(std::span<const double> p, std::span<const double> q) {
    check_sizes(p, q, "jsd");
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        // p + q and q + p round identically, and the two terms are added in
        // a canonical order so the result is exactly symmetric.
        const double m = 0.5 * (p[i] + q[i]);
        const double a = midpoint_term(p[i], m);
        const double b = midpoint_term(q[i], m);
        acc += std::min(a, b) + std::max(a, b);
    }
    return std::max(0.0, 0.5 * acc);
}

std::vector<double> jsd_grad_q(std::span<const double> p,
                               std::span<const double> q) {
    check_sizes(p, q, "jsd_grad_q");
    std::vector<double> g(p.size(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0 && q[i] <= 0.0) {
            continue;
        }
        const double qx = std::max(q[i], kProbabilityFloor);
        g[i] = 0.5 * std::log(2.0 * qx / (p[i] + qx));
    }
    return g;
}

std::vector<double> jsd_hess_q(std::span<const double> p,
                               std::span<const double> q) {
    check_sizes(p, q, "jsd_hess_q");
    std::vector<double> h(p.size(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) {
            continue;
        }
        const double qx = std::max(q[i], kProbabilityFloor);
        h[i] = 0.5 * p[i] / (qx * (p[i] + qx));
    }
    return h;
}

} // namespace qcbm
