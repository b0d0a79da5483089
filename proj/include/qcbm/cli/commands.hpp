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
 * Front end of the `qcbm` tool: experiment configuration and the train,
 * sweep, bounds, qfi, gradvar and hessian subcommands.
 *
 * Exit codes: 0 success, 1 runtime or I/O failure (including aborted
 * training runs), 2 usage or configuration error.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcbm/targets.hpp"
#include "qcbm/train.hpp"

namespace qcbm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Bad flags, config keys or values. Maps to exit code 2.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    // [experiment]
    std::size_t n_qubits = 2;
    std::vector<std::size_t> depths{0};
    std::string target = "uniform";
    std::optional<std::uint64_t> target_seed;
    std::optional<std::string> hep_file;
    std::size_t n_runs = 100;
    std::size_t n_steps = 200;
    double epsilon = kDefaultEpsilon;
    std::optional<std::size_t> n_shots;
    std::uint64_t seed = 0;
    bool write_records = true;
    bool wall_time = false;
    // [optimizer]
    AdamHyperparameters adam;
    // [qfi]
    std::size_t qfi_samples = 5;
    // [gradvar]
    std::vector<std::size_t> gradvar_qubits{2, 4, 6};
    std::size_t gradvar_depth = 10;
    std::vector<std::string> gradvar_targets{"ghz"};
    std::size_t n_inits = 30;
    // [hessian]
    std::string record_path;
    double zero_tol = 1e-8;

    // Execution settings; they never change results and are not echoed.
    std::size_t workers = 1;
    std::string out_dir = ".";
};

/// Parses "0..6", "1,3,5" or mixtures such as "0..3,8".
[[nodiscard]] std::vector<std::size_t> parse_index_list(std::string_view text);

/// Reads a sectioned key = value file over `base`. Unknown keys are errors.
[[nodiscard]] ExperimentConfig load_config_file(const std::string &path,
                                                ExperimentConfig base = {});

/// Effective configuration as a config file for `command`. Loading the text
/// back and re-running the command reproduces its outputs exactly.
[[nodiscard]] std::string render_config(const ExperimentConfig &config,
                                        std::string_view command);

/// Target for `n_qubits` resolved from the config (seed defaults to the
/// base seed for Sparse targets).
[[nodiscard]] TargetSpec resolve_target(const ExperimentConfig &config,
                                        std::string_view name,
                                        std::size_t n_qubits);

// Each command writes its artifacts under config.out_dir, reports progress on
// `out` and diagnostics on `err`, and returns an exit code. None of them throw.
int cmd_train(const ExperimentConfig &config, std::ostream &out, std::ostream &err);
int cmd_sweep(const ExperimentConfig &config, std::ostream &out, std::ostream &err);
int cmd_bounds(const ExperimentConfig &config, std::ostream &out, std::ostream &err);
int cmd_qfi(const ExperimentConfig &config, std::ostream &out, std::ostream &err);
int cmd_gradvar(const ExperimentConfig &config, std::ostream &out, std::ostream &err);
int cmd_hessian(const ExperimentConfig &config, std::ostream &out, std::ostream &err);

/// Full command-line entry point; never throws.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace qcbm::cli
