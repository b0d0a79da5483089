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
 * Seeded random streams. Every stochastic operation in qcbm draws from an
 * explicit Rng so experiments are reproducible from their seeds alone.
 */
#pragma once

#include <cstdint>

namespace qcbm {

/// SplitMix64 finalizer. Bijective on 64-bit words.
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31U);
}

/// Per-run seed: the base seed XOR a hash of the run index.
[[nodiscard]] constexpr std::uint64_t run_seed(std::uint64_t base_seed,
                                               std::uint64_t run_index) noexcept {
    return base_seed ^ splitmix64(run_index);
}

/**
 * @brief Counter-based 64-bit generator: word k of the stream is
 * splitmix64(seed + k * golden_gamma). Output depends only on the seed and
 * the number of draws, so streams are identical on every platform.
 */
class Rng {
  public:
    explicit constexpr Rng(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        const std::uint64_t out = splitmix64(state_);
        state_ += 0x9E3779B97F4A7C15ULL;
        return out;
    }

    /// Uniform double on [0, 1) carrying 53 random bits.
    constexpr double uniform() noexcept {
        return static_cast<double>(next() >> 11U) * 0x1.0p-53;
    }

    /// Unbiased integer on [0, bound) by rejection. bound must be > 0.
    constexpr std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = -bound % bound; // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (r >= limit) {
                return r % bound;
            }
        }
    }

  private:
    std::uint64_t state_;
};

} // namespace qcbm
