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
 * JSON and CSV encodings of layouts, run records, sweep summaries, bounds
 * reports and Hessian spectra.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qcbm/analysis.hpp"
#include "qcbm/ansatz.hpp"
#include "qcbm/train.hpp"

namespace qcbm::io {

using nlohmann::json;

inline constexpr std::string_view kRunRecordSchema = "qcbm.run_record.v1";

// Column orders are part of the output contract (see share/csv_headers.txt).
inline constexpr std::string_view kSweepHeader =
    "p,n_params,loss_q1,loss_med,loss_q3,tts_q1,tts_med,tts_q3,n_runs,n_failures";
inline constexpr std::string_view kBoundsHeader =
    "n_qubits,d_c,dla_dim,p_to_dc,p_to_dc_published,p_to_dc_flag,p_to_dla,"
    "p_to_dla_published,p_to_dla_flag";
inline constexpr std::string_view kQfiHeader = "p,n_params,rank,d_c";
inline constexpr std::string_view kGradvarHeader =
    "n_qubits,target,p,n_params,n_inits,median_var,iqr_var,median_linf,iqr_linf";
inline constexpr std::string_view kSpectrumHeader = "index,eigenvalue";

[[nodiscard]] json layout_to_json(const AnsatzLayout &layout);
[[nodiscard]] json target_to_json(const TargetSpec &target);
[[nodiscard]] TargetSpec target_from_json(const json &j);

/// Serializes a run. wall_time is written only when include_wall_time is
/// set, so that default record files are reproducible byte for byte.
[[nodiscard]] json record_to_json(const RunRecord &rec,
                                  bool include_wall_time = false);

/// Inverse of record_to_json. Throws nlohmann::json::exception or
/// DomainError on malformed input.
[[nodiscard]] RunRecord record_from_json(const json &j);

[[nodiscard]] json summary_to_json(const SweepSummary &s);
[[nodiscard]] json bounds_to_json(const BoundsReport &b);
[[nodiscard]] json spectrum_to_json(const SpectrumSummary &s);

/// Round-trip decimal formatting used in every CSV cell.
[[nodiscard]] std::string format_double(double x);

void write_sweep_csv(std::ostream &out, const SweepSummary &s);
void write_bounds_csv(std::ostream &out, const BoundsReport &b);

} // namespace qcbm::io
