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

#include "qcbm/train.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <thread>

#include "qcbm/diff.hpp"
#include "qcbm/divergence.hpp"
#include "qcbm/errors.hpp"
#include "qcbm/sampling.hpp"

namespace qcbm {

NonFiniteGradient::NonFiniteGradient(std::size_t component, double value)
    : std::runtime_error("non-finite gradient component " +
                         std::to_string(component) + " (" +
                         std::to_string(value) + ")"),
      component_(component) {}

void validate(const TrainConfig &config) {
    if (config.n_qubits < 2) {
        throw DomainError("train: need at least two qubits");
    }
    if (config.target.n_qubits != config.n_qubits ||
        config.target.distribution.size() != (std::size_t{1} << config.n_qubits)) {
        throw DomainError("train: target width does not match the circuit");
    }
    if (config.n_steps < 1) {
        throw DomainError("train: n_steps must be >= 1");
    }
    if (config.n_shots && *config.n_shots < 1) {
        throw DomainError("train: n_shots must be >= 1");
    }
    const auto &a = config.adam;
    if (!(a.learning_rate > 0.0) || !(a.beta1 >= 0.0 && a.beta1 < 1.0) ||
        !(a.beta2 >= 0.0 && a.beta2 < 1.0) || !(a.epsilon > 0.0)) {
        throw DomainError("train: invalid Adam hyper-parameters");
    }
    if (!(config.tts_epsilon > 0.0)) {
        throw DomainError("train: tts epsilon must be positive");
    }
}

void adam_step(AdamState &state, std::span<double> theta,
               std::span<const double> grad, const AdamHyperparameters &hp) {
    if (theta.size() != grad.size() ||
        state.first_moment.size() != theta.size() ||
        state.second_moment.size() != theta.size()) {
        throw SizeError("adam_step: parameter, gradient and moment sizes differ");
    }
    for (std::size_t k = 0; k < grad.size(); ++k) {
        if (!std::isfinite(grad[k])) {
            throw NonFiniteGradient(k, grad[k]);
        }
    }
    ++state.step_count;
    const auto t = static_cast<double>(state.step_count);
    const double c1 = 1.0 - std::pow(hp.beta1, t);
    const double c2 = 1.0 - std::pow(hp.beta2, t);
    for (std::size_t k = 0; k < grad.size(); ++k) {
        auto &m = state.first_moment[k];
        auto &v = state.second_moment[k];
        m = hp.beta1 * m + (1.0 - hp.beta1) * grad[k];
        v = hp.beta2 * v + (1.0 - hp.beta2) * grad[k] * grad[k];
        const double m_hat = m / c1;
        const double v_hat = v / c2;
        theta[k] -= hp.learning_rate * m_hat / (std::sqrt(v_hat) + hp.epsilon);
    }
}

ParameterVector init_params(const AnsatzLayout &layout, Rng &rng) {
    ParameterVector theta(layout.n_params());
    for (auto &t : theta) {
        t = 2.0 * std::numbers::pi * rng.uniform();
    }
    return theta;
}

std::size_t tts(std::span<const double> trajectory, double epsilon,
                std::size_t n_steps) {
    if (!(epsilon > 0.0)) {
        throw DomainError("tts: epsilon must be positive");
    }
    const std::size_t limit = std::min(trajectory.size(), n_steps + 1);
    for (std::size_t t = 0; t < limit; ++t) {
        if (trajectory[t] <= epsilon) {
            return std::min(t, n_steps);
        }
    }
    return n_steps;
}

RunRecord train_run(const TrainConfig &config) {
    validate(config);
    const auto start = std::chrono::steady_clock::now();
    const auto layout = AnsatzLayout::build(config.n_qubits, config.n_layers);
    const auto &target = config.target.distribution;

    RunRecord rec;
    rec.config = config;
    rec.run_seed = run_seed(config.seed, config.run_index);
    Rng rng(rec.run_seed);
    ParameterVector theta = init_params(layout, rng);
    rec.initial_theta = theta;
    rec.loss_trajectory.reserve(config.n_steps + 1);

    AdamState adam = AdamState::zeros(layout.n_params());
    for (std::size_t step = 0; step <= config.n_steps; ++step) {
        const bool last = step == config.n_steps;
        double current = 0.0;
        std::vector<double> grad;
        if (config.n_shots) {
            const auto q = born_distribution(layout, theta);
            current = jsd(target, sample_histogram(q, *config.n_shots, rng));
            if (!last) {
                grad = gradient_sampled(layout, theta, target, *config.n_shots,
                                        rng).values;
            }
        } else if (last) {
            current = loss(layout, theta, target);
        } else {
            grad = gradient_adjoint(layout, theta, target, &current).values;
        }
        rec.loss_trajectory.push_back(current);
        if (last) {
            break;
        }
        try {
            adam_step(adam, theta, grad, config.adam);
        } catch (const NonFiniteGradient &e) {
            rec.failed = true;
            rec.failure_message =
                "step " + std::to_string(step) + ": " + e.what();
            break;
        }
    }
    rec.final_theta = theta;
    rec.tts = tts(rec.loss_trajectory, config.tts_epsilon, config.n_steps);
    rec.wall_time = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return rec;
}

std::vector<RunRecord> train_runs(const TrainConfig &config, std::size_t n_runs,
                                  std::size_t workers) {
    validate(config);
    std::vector<RunRecord> out(n_runs);
    auto job = [&](std::size_t r) {
        TrainConfig c = config;
        c.run_index = r;
        out[r] = train_run(c);
    };
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n_runs, 1));
    if (workers == 1) {
        for (std::size_t r = 0; r < n_runs; ++r) {
            job(r);
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t r = next++; r < n_runs; r = next++) {
                    job(r);
                }
            });
        }
    }
    return out;
}

} // namespace qcbm
