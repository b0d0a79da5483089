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

#pragma once

#include <cstddef>
#include <span>

#include "qcbm/rng.hpp"
#include "qcbm/types.hpp"

namespace qcbm {

/// Empirical distribution of n_shots independent draws from q (a
/// multinomial sample divided by n_shots). Throws DomainError if n_shots == 0.
[[nodiscard]] ProbVector sample_histogram(std::span<const double> q,
                                          std::size_t n_shots, Rng &rng);

} // namespace qcbm
