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
 * Adam training of HEA Born machines against a target distribution, in the
 * analytic (infinite-shot) limit or with finite-shot sampling.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcbm/ansatz.hpp"
#include "qcbm/rng.hpp"
#include "qcbm/targets.hpp"
#include "qcbm/types.hpp"

namespace qcbm {

/// Loss level at which a run counts as solved, for TTS and p_c.
inline constexpr double kDefaultEpsilon = 1e-8;

struct AdamHyperparameters {
    double learning_rate = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

struct TrainConfig {
    std::size_t n_qubits = 2;
    std::size_t n_layers = 0;
    TargetSpec target = uniform_target(2);
    std::size_t n_steps = 200;
    AdamHyperparameters adam;
    /// Absent: exact probabilities. Present: every evaluation is sampled.
    std::optional<std::size_t> n_shots;
    /// Base seed shared by all runs of an experiment.
    std::uint64_t seed = 0;
    std::size_t run_index = 0;
    /// Threshold for the recorded TTS.
    double tts_epsilon = kDefaultEpsilon;
};

/// Throws DomainError describing the first invalid field.
void validate(const TrainConfig &config);

struct AdamState {
    std::vector<double> first_moment;
    std::vector<double> second_moment;
    std::size_t step_count = 0;

    [[nodiscard]] static AdamState zeros(std::size_t n_params) {
        return {std::vector<double>(n_params, 0.0),
                std::vector<double>(n_params, 0.0), 0};
    }
};

/// Raised by adam_step for NaN or infinite gradient components.
class NonFiniteGradient : public std::runtime_error {
  public:
    NonFiniteGradient(std::size_t component, double value);
    [[nodiscard]] std::size_t component() const noexcept { return component_; }

  private:
    std::size_t component_;
};

/**
 * @brief Advances the optimizer one bias-corrected Adam step in place:
 * m <- b1 m + (1 - b1) g, v <- b2 v + (1 - b2) g^2,
 * theta <- theta - lr * m_hat / (sqrt(v_hat) + eps).
 *
 * Leaves state and theta untouched when g has a non-finite component.
 */
void adam_step(AdamState &state, std::span<double> theta,
               std::span<const double> grad, const AdamHyperparameters &hp);

/// I.i.d. uniform angles on [0, 2 pi).
[[nodiscard]] ParameterVector init_params(const AnsatzLayout &layout, Rng &rng);

/// First index t with trajectory[t] <= epsilon, else n_steps.
[[nodiscard]] std::size_t tts(std::span<const double> trajectory, double epsilon,
                              std::size_t n_steps);

struct RunRecord {
    TrainConfig config;
    std::uint64_t run_seed = 0;
    ParameterVector initial_theta;
    ParameterVector final_theta;
    /// Loss before the first step, then after each step (n_steps + 1 entries
    /// unless the run failed).
    std::vector<double> loss_trajectory;
    std::size_t tts = 0;
    double wall_time = 0.0;
    bool failed = false;
    std::string failure_message;

    [[nodiscard]] double final_loss() const { return loss_trajectory.back(); }
};

/// One training run. Never throws for numerical failures; those are
/// reflected in RunRecord::failed.
[[nodiscard]] RunRecord train_run(const TrainConfig &config);

/**
 * @brief Runs indices [0, n_runs) of `config` on up to `workers` threads.
 * Results are ordered by run index and independent of the worker count.
 */
[[nodiscard]] std::vector<RunRecord> train_runs(const TrainConfig &config,
                                                std::size_t n_runs,
                                                std::size_t workers);

} // namespace qcbm
