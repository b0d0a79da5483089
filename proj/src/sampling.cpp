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

#include "qcbm/sampling.hpp"

#include <algorithm>
#include <vector>

#include "qcbm/errors.hpp"

namespace qcbm {

ProbVector sample_histogram(std::span<const double> q, std::size_t n_shots,
                            Rng &rng) {
    if (n_shots == 0) {
        throw DomainError("sample_histogram: n_shots must be >= 1");
    }
    std::vector<double> cdf(q.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        acc += std::max(q[i], 0.0);
        cdf[i] = acc;
    }
    // Draws land on the last outcome with nonzero weight when rounding leaves
    // u * total just past cdf.back().
    std::size_t last = q.size();
    while (last > 0 && q[last - 1] <= 0.0) {
        --last;
    }
    if (last == 0) {
        throw DomainError("sample_histogram: distribution has no mass");
    }

    std::vector<std::size_t> counts(q.size(), 0);
    for (std::size_t s = 0; s < n_shots; ++s) {
        const double u = rng.uniform() * acc;
        auto idx = static_cast<std::size_t>(
            std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        if (idx >= last) {
            idx = last - 1;
        }
        ++counts[idx];
    }
    ProbVector out(q.size());
    const double inv = 1.0 / static_cast<double>(n_shots);
    for (std::size_t i = 0; i < q.size(); ++i) {
        out[i] = static_cast<double>(counts[i]) * inv;
    }
    return out;
}

} // namespace qcbm
