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
 * Target distributions for QCBM training and the sparsity measure
 * s(P) = |{x : P(x) > 0}| / 2^n.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qcbm/types.hpp"

namespace qcbm {

enum class TargetKind { Uniform, Sparse, Bell, Ghz, W, Hep };

/// Lower-case name used in file names and configs ("uniform", "ghz", ...).
[[nodiscard]] std::string_view target_name(TargetKind kind) noexcept;

/// Inverse of target_name; throws DomainError for unknown names.
[[nodiscard]] TargetKind parse_target_kind(std::string_view name);

struct TargetSpec {
    TargetKind kind;
    std::size_t n_qubits;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> source_path;
    ProbVector distribution;

    [[nodiscard]] std::string_view name() const noexcept {
        return target_name(kind);
    }
};

[[nodiscard]] TargetSpec uniform_target(std::size_t n_qubits);

/// 2^{n/2} distinct bitstrings of weight 2^{-n/2}, chosen by a partial
/// Fisher-Yates shuffle driven by Rng(seed). n must be even.
[[nodiscard]] TargetSpec sparse_target(std::size_t n_qubits, std::uint64_t seed);

/// Weight 1/2 on |0..0> and |1..1>. Named Bell for n = 2, GHZ otherwise.
[[nodiscard]] TargetSpec bell_ghz_target(std::size_t n_qubits);

/// Three-qubit W projection: 1/3 on 001, 010 and 100.
[[nodiscard]] TargetSpec w_target();

/**
 * @brief Joint histogram of a two-column sample file.
 *
 * Each column is binned into 2^{n/2} equal-width bins spanning its sample
 * range, with the top edge inclusive. The first column fills the high bits
 * of the basis index. Rows are whitespace- or comma-separated; blank lines
 * and lines starting with '#' are skipped; extra columns are ignored.
 *
 * Throws IngestionError (with line number) for unreadable or malformed
 * files and DomainError for odd n.
 */
[[nodiscard]] TargetSpec hep_target_from_samples(const std::string &path,
                                                 std::size_t n_qubits);

[[nodiscard]] double sparsity(const ProbVector &p);

/// Builds any target by kind. `seed` is required for Sparse and `path` for
/// Hep; W requires n_qubits == 3.
[[nodiscard]] TargetSpec make_target(TargetKind kind, std::size_t n_qubits,
                                     std::optional<std::uint64_t> seed = {},
                                     std::optional<std::string> path = {});

} // namespace qcbm
