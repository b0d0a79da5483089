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

#include "qcbm/targets.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <vector>

#include "qcbm/errors.hpp"
#include "qcbm/rng.hpp"

namespace qcbm {
namespace {

constexpr std::array<std::pair<TargetKind, std::string_view>, 6> kNames{{
    {TargetKind::Uniform, "uniform"},
    {TargetKind::Sparse, "sparse"},
    {TargetKind::Bell, "bell"},
    {TargetKind::Ghz, "ghz"},
    {TargetKind::W, "w"},
    {TargetKind::Hep, "hep"},
}};

std::size_t dim_of(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > 24) {
        throw SizeError("target: qubit count " + std::to_string(n_qubits) +
                        " outside [1, 24]");
    }
    return std::size_t{1} << n_qubits;
}

void require_even(std::size_t n_qubits, const char *what) {
    if (n_qubits < 2 || n_qubits % 2 != 0) {
        throw DomainError(std::string(what) +
                          " target needs an even qubit count >= 2, got " +
                          std::to_string(n_qubits));
    }
}

bool is_separator(char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\r';
}

// Splits a row into fields on commas and whitespace runs.
std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_separator(line[i])) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && !is_separator(line[j])) {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::size_t bin_index(double x, double lo, double hi, std::size_t n_bins) {
    if (!(hi > lo)) {
        return 0;
    }
    const double scaled = (x - lo) / (hi - lo) * static_cast<double>(n_bins);
    const auto bin = static_cast<std::size_t>(std::floor(scaled));
    return std::min(bin, n_bins - 1);
}

} // namespace

std::string_view target_name(TargetKind kind) noexcept {
    for (const auto &[k, name] : kNames) {
        if (k == kind) {
            return name;
        }
    }
    return "unknown";
}

TargetKind parse_target_kind(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    for (const auto &[k, n] : kNames) {
        if (n == lower) {
            return k;
        }
    }
    throw DomainError("unknown target '" + std::string(name) + "'");
}

TargetSpec uniform_target(std::size_t n_qubits) {
    const std::size_t dim = dim_of(n_qubits);
    return {TargetKind::Uniform, n_qubits, std::nullopt, std::nullopt,
            ProbVector(dim, 1.0 / static_cast<double>(dim))};
}

TargetSpec sparse_target(std::size_t n_qubits, std::uint64_t seed) {
    require_even(n_qubits, "sparse");
    const std::size_t dim = dim_of(n_qubits);
    const std::size_t support = std::size_t{1} << (n_qubits / 2);

    std::vector<std::size_t> order(dim);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(seed);
    for (std::size_t i = 0; i < support; ++i) {
        const std::size_t j = i + rng.below(dim - i);
        std::swap(order[i], order[j]);
    }
    ProbVector p(dim, 0.0);
    const double w = 1.0 / static_cast<double>(support);
    for (std::size_t i = 0; i < support; ++i) {
        p[order[i]] = w;
    }
    return {TargetKind::Sparse, n_qubits, seed, std::nullopt, std::move(p)};
}

TargetSpec bell_ghz_target(std::size_t n_qubits) {
    if (n_qubits < 2) {
        throw DomainError("Bell/GHZ target needs at least two qubits");
    }
    const std::size_t dim = dim_of(n_qubits);
    ProbVector p(dim, 0.0);
    p.front() = 0.5;
    p.back() = 0.5;
    return {n_qubits == 2 ? TargetKind::Bell : TargetKind::Ghz, n_qubits,
            std::nullopt, std::nullopt, std::move(p)};
}

TargetSpec w_target() {
    ProbVector p(8, 0.0);
    p[1] = p[2] = p[4] = 1.0 / 3.0;
    return {TargetKind::W, 3, std::nullopt, std::nullopt, std::move(p)};
}

TargetSpec hep_target_from_samples(const std::string &path,
                                   std::size_t n_qubits) {
    require_even(n_qubits, "HEP");
    const std::size_t dim = dim_of(n_qubits);
    std::ifstream in(path);
    if (!in) {
        throw IngestionError(path, 0, "cannot open sample file");
    }

    std::vector<std::array<double, 2>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() < 2) {
            throw IngestionError(path, line_no, "expected two columns");
        }
        std::array<double, 2> row{};
        for (std::size_t c = 0; c < 2; ++c) {
            const auto f = fields[c];
            const auto [ptr, ec] =
                std::from_chars(f.data(), f.data() + f.size(), row[c]);
            if (ec != std::errc{} || ptr != f.data() + f.size() ||
                !std::isfinite(row[c])) {
                throw IngestionError(path, line_no,
                                     "non-numeric value '" + std::string(f) +
                                         "'");
            }
        }
        rows.push_back(row);
    }
    if (rows.empty()) {
        throw IngestionError(path, 0, "no samples");
    }

    std::array<double, 2> lo{rows[0][0], rows[0][1]};
    std::array<double, 2> hi = lo;
    for (const auto &r : rows) {
        for (std::size_t c = 0; c < 2; ++c) {
            lo[c] = std::min(lo[c], r[c]);
            hi[c] = std::max(hi[c], r[c]);
        }
    }
    const std::size_t half = n_qubits / 2;
    const std::size_t n_bins = std::size_t{1} << half;
    std::vector<std::size_t> counts(dim, 0);
    for (const auto &r : rows) {
        const std::size_t b1 = bin_index(r[0], lo[0], hi[0], n_bins);
        const std::size_t b2 = bin_index(r[1], lo[1], hi[1], n_bins);
        ++counts[(b1 << half) | b2];
    }
    ProbVector p(dim);
    const double total = static_cast<double>(rows.size());
    for (std::size_t i = 0; i < dim; ++i) {
        p[i] = static_cast<double>(counts[i]) / total;
    }
    return {TargetKind::Hep, n_qubits, std::nullopt, path, std::move(p)};
}

double sparsity(const ProbVector &p) {
    const auto support = std::count_if(p.begin(), p.end(),
                                       [](double x) { return x > 0.0; });
    return static_cast<double>(support) / static_cast<double>(p.size());
}

TargetSpec make_target(TargetKind kind, std::size_t n_qubits,
                       std::optional<std::uint64_t> seed,
                       std::optional<std::string> path) {
    switch (kind) {
    case TargetKind::Uniform:
        return uniform_target(n_qubits);
    case TargetKind::Sparse:
        if (!seed) {
            throw DomainError("sparse target needs a seed");
        }
        return sparse_target(n_qubits, *seed);
    case TargetKind::Bell:
    case TargetKind::Ghz:
        return bell_ghz_target(n_qubits);
    case TargetKind::W:
        if (n_qubits != 3) {
            throw DomainError("W target is defined for three qubits only");
        }
        return w_target();
    case TargetKind::Hep:
        if (!path) {
            throw DomainError("HEP target needs a sample file");
        }
        return hep_target_from_samples(*path, n_qubits);
    }
    throw DomainError("unknown target kind");
}

} // namespace qcbm
