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

#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "qcbm/cli/commands.hpp"

namespace qcbm::cli {
namespace {

// Raw flag values; an option only overrides the config when it was given.
struct Flags {
    std::string config_path;
    std::uint64_t seed = 0;
    std::size_t workers = 1;
    std::string out_dir;

    std::size_t qubits = 0;
    std::string depths;
    std::string target;
    std::uint64_t target_seed = 0;
    std::string hep_file;
    std::size_t runs = 0;
    std::size_t steps = 0;
    double epsilon = 0.0;
    std::size_t shots = 0;
    double learning_rate = 0.0;
    bool no_records = false;
    bool wall_time = false;

    std::size_t samples = 0;
    std::string qubit_list;
    std::size_t depth = 0;
    std::string targets;
    std::size_t inits = 0;

    std::string record;
    double zero_tol = 0.0;
};

bool was_given(const CLI::App &app, const char *name) {
    const CLI::Option *opt = app.get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
}

template <class T>
void override_if(const CLI::App &app, const char *name, T &dst, const T &src) {
    if (was_given(app, name)) {
        dst = src;
    }
}

void add_training_options(CLI::App &sub, Flags &f, bool single_depth) {
    sub.add_option("--qubits,-n", f.qubits, "Number of qubits");
    if (single_depth) {
        sub.add_option("--depth,-p", f.depths, "Circuit depth p");
    } else {
        sub.add_option("--depths", f.depths, "Depth grid, e.g. 0..6 or 1,2,4");
    }
    sub.add_option("--target,-t", f.target, "uniform|sparse|bell|ghz|w|hep");
    sub.add_option("--target-seed", f.target_seed, "Seed for the sparse target");
    sub.add_option("--hep-file", f.hep_file, "Two-column sample file for hep");
    sub.add_option("--runs", f.runs, "Independent training runs");
    sub.add_option("--steps", f.steps, "Adam steps per run");
    sub.add_option("--epsilon", f.epsilon, "Solved-loss threshold for TTS and p_c");
    sub.add_option("--shots", f.shots, "Finite-shot mode with N samples");
    sub.add_option("--lr", f.learning_rate, "Adam learning rate");
    sub.add_flag("--no-records", f.no_records, "Skip per-run JSON records");
    sub.add_flag("--wall-time", f.wall_time, "Store wall times in run records");
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum circuit Born machine overparameterization experiments", "qcbm"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags f;
    app.add_option("--config", f.config_path, "Sectioned key = value config file");
    app.add_option("--seed", f.seed, "Base seed (U64)");
    app.add_option("--workers", f.workers, "Worker threads for training runs")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", f.out_dir, "Output directory");

    auto *train = app.add_subcommand("train", "Train runs at a single depth");
    add_training_options(*train, f, true);
    auto *sweep = app.add_subcommand("sweep", "Train runs over a depth grid");
    add_training_options(*sweep, f, false);

    auto *bounds = app.add_subcommand("bounds", "Analytic bound table");
    bounds->add_option("--qubits,-n", f.qubits, "Number of qubits");

    auto *qfi = app.add_subcommand("qfi", "QFI rank versus depth");
    qfi->add_option("--qubits,-n", f.qubits, "Number of qubits");
    qfi->add_option("--depths", f.depths, "Depth grid");
    qfi->add_option("--samples", f.samples, "Random parameter points per depth");

    auto *gradvar = app.add_subcommand("gradvar", "Gradient variance study");
    gradvar->add_option("--qubits-list", f.qubit_list, "Widths, e.g. 2,4,6");
    gradvar->add_option("--depth,-p", f.depth, "Circuit depth");
    gradvar->add_option("--targets", f.targets, "Comma-separated target names");
    gradvar->add_option("--inits", f.inits, "Random initializations per row");
    gradvar->add_option("--target-seed", f.target_seed, "Seed for the sparse target");

    auto *hess = app.add_subcommand("hessian", "Hessian spectrum of a trained run");
    hess->add_option("--record", f.record, "Run record JSON");
    hess->add_option("--zero-tol", f.zero_tol, "Zero-eigenvalue tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    ExperimentConfig cfg;
    cfg.workers = std::max(1U, std::thread::hardware_concurrency());
    try {
        if (!f.config_path.empty()) {
            cfg = load_config_file(f.config_path, cfg);
        }
        override_if(app, "--seed", cfg.seed, f.seed);
        override_if(app, "--workers", cfg.workers, f.workers);
        override_if(app, "--out", cfg.out_dir, f.out_dir);

        CLI::App *sub = app.get_subcommands().front();
        const auto given = [&](const char *name) { return was_given(*sub, name); };
        override_if(*sub, "--qubits", cfg.n_qubits, f.qubits);
        if (given("--depth") && sub != gradvar) {
            cfg.depths = parse_index_list(f.depths);
        }
        if (given("--depths")) {
            cfg.depths = parse_index_list(f.depths);
        }
        override_if(*sub, "--target", cfg.target, f.target);
        if (given("--target-seed")) {
            cfg.target_seed = f.target_seed;
        }
        if (given("--hep-file")) {
            cfg.hep_file = f.hep_file;
        }
        override_if(*sub, "--runs", cfg.n_runs, f.runs);
        override_if(*sub, "--steps", cfg.n_steps, f.steps);
        override_if(*sub, "--epsilon", cfg.epsilon, f.epsilon);
        if (given("--shots")) {
            cfg.n_shots = f.shots;
        }
        override_if(*sub, "--lr", cfg.adam.learning_rate, f.learning_rate);
        if (f.no_records) {
            cfg.write_records = false;
        }
        if (f.wall_time) {
            cfg.wall_time = true;
        }
        override_if(*sub, "--samples", cfg.qfi_samples, f.samples);
        if (given("--qubits-list")) {
            cfg.gradvar_qubits = parse_index_list(f.qubit_list);
        }
        if (sub == gradvar) {
            override_if(*sub, "--depth", cfg.gradvar_depth, f.depth);
        }
        if (given("--targets")) {
            cfg.gradvar_targets.clear();
            std::stringstream ss(f.targets);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (!item.empty()) {
                    cfg.gradvar_targets.push_back(item);
                }
            }
        }
        override_if(*sub, "--inits", cfg.n_inits, f.inits);
        override_if(*sub, "--record", cfg.record_path, f.record);
        override_if(*sub, "--zero-tol", cfg.zero_tol, f.zero_tol);

        if (sub == train) {
            return cmd_train(cfg, out, err);
        }
        if (sub == sweep) {
            return cmd_sweep(cfg, out, err);
        }
        if (sub == bounds) {
            return cmd_bounds(cfg, out, err);
        }
        if (sub == qfi) {
            return cmd_qfi(cfg, out, err);
        }
        if (sub == gradvar) {
            return cmd_gradvar(cfg, out, err);
        }
        return cmd_hessian(cfg, out, err);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

} // namespace qcbm::cli
