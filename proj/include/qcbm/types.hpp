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

#include <complex>
#include <vector>

namespace qcbm {

using Complex = std::complex<double>;

/// Probability distribution over the 2^n computational-basis bitstrings.
using ProbVector = std::vector<double>;

/// Circuit parameters in radians, indexed by AnsatzLayout parameter index.
using ParameterVector = std::vector<double>;

enum class Axis { X, Y };

} // namespace qcbm
