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
 * Exception types shared by all qcbm modules.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcbm {

/// Sizes that do not agree, or a register outside the supported range.
class SizeError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Wire index outside the register, or an invalid wire pair.
class IndexError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Eigensolver failures and non-finite intermediate values.
class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/**
 * @brief Malformed sample file. Carries the 1-based line number of the
 * offending row (0 when the error concerns the file as a whole).
 */
class IngestionError : public std::runtime_error {
  public:
    IngestionError(const std::string &path, std::size_t line,
                   const std::string &what)
        : std::runtime_error(path + (line ? ":" + std::to_string(line) : "") +
                             ": " + what),
          line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace qcbm
