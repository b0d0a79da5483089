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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "qcbm/analysis.hpp"
#include "qcbm/ansatz.hpp"
#include "qcbm/cli/commands.hpp"
#include "qcbm/diff.hpp"
#include "qcbm/errors.hpp"
#include "qcbm/io.hpp"

namespace qcbm::cli {
namespace {

namespace fs = std::filesystem;
using io::json;

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

fs::path output_path(const ExperimentConfig &c, const std::string &name) {
    std::error_code ec;
    fs::create_directories(c.out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + c.out_dir + ": " +
                      ec.message());
    }
    return fs::path(c.out_dir) / name;
}

void write_file(const fs::path &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << content;
    f.close();
    if (!f) {
        throw IoError("cannot write " + path.string());
    }
}

// Config echo as '#'-prefixed lines, placed above the CSV header.
std::string csv_preamble(const ExperimentConfig &c, std::string_view command) {
    std::ostringstream o;
    o << "# qcbm " << command << '\n';
    std::istringstream lines(render_config(c, command));
    std::string line;
    while (std::getline(lines, line)) {
        o << (line.empty() ? "#" : "# " + line) << '\n';
    }
    return o.str();
}

json with_config(json body, const ExperimentConfig &c, std::string_view command) {
    body["command"] = command;
    body["config"] = render_config(c, command);
    return body;
}

std::vector<std::size_t> sorted_depths(const ExperimentConfig &c) {
    auto d = c.depths;
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

void require(bool ok, const std::string &message) {
    if (!ok) {
        throw UsageError(message);
    }
}

// Runs `body` and maps exceptions onto the exit-code contract.
int guarded(std::ostream &err, const std::function<int()> &body) {
    try {
        return body();
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

TrainConfig train_config(const ExperimentConfig &c, std::size_t p,
                         const TargetSpec &target) {
    TrainConfig t;
    t.n_qubits = c.n_qubits;
    t.n_layers = p;
    t.target = target;
    t.n_steps = c.n_steps;
    t.adam = c.adam;
    t.n_shots = c.n_shots;
    t.seed = c.seed;
    t.tts_epsilon = c.epsilon;
    try {
        validate(t);
    } catch (const std::logic_error &e) {
        throw UsageError(e.what());
    }
    return t;
}

void check_training(const ExperimentConfig &c) {
    require(c.n_qubits >= 2 && c.n_qubits <= kMaxQubits,
            "qubits must be in [2, 24]");
    require(c.n_runs >= 1, "runs must be >= 1");
    require(c.n_steps >= 1, "steps must be >= 1");
    require(c.epsilon > 0.0, "epsilon must be positive");
    require(!c.n_shots || *c.n_shots >= 1, "shots must be >= 1");
}

std::string record_name(const TrainConfig &t, std::size_t index) {
    std::ostringstream o;
    o << "run_" << t.n_qubits << "q_" << t.n_layers << "p_" << t.target.name()
      << '_' << index << ".json";
    return o.str();
}

// Trains every run at depth p and writes the record files in index order.
std::vector<RunRecord> run_depth(const ExperimentConfig &c, std::string_view command,
                                 std::size_t p, const TargetSpec &target) {
    const TrainConfig t = train_config(c, p, target);
    auto records = train_runs(t, c.n_runs, c.workers);
    if (c.write_records) {
        const std::string echo = render_config(c, command);
        for (const auto &rec : records) {
            json j = io::record_to_json(rec, c.wall_time);
            j["experiment"] = echo;
            write_file(output_path(c, record_name(t, rec.config.run_index)),
                       j.dump(1) + "\n");
        }
    }
    return records;
}

void print_row(std::ostream &out, const SweepRow &r) {
    out << "p=" << r.p << " n_params=" << r.n_params
        << " loss[q1,med,q3]=" << io::format_double(r.loss.q1) << ','
        << io::format_double(r.loss.median) << ',' << io::format_double(r.loss.q3)
        << " tts_med=" << r.tts.median << " failures=" << r.n_failures << '\n';
}

} // namespace

int cmd_train(const ExperimentConfig &c, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        check_training(c);
        require(c.depths.size() == 1, "train takes exactly one depth");
        const std::size_t p = c.depths.front();
        const TargetSpec target = resolve_target(c, c.target, c.n_qubits);
        const auto records = run_depth(c, "train", p, target);

        SweepSummary summary{c.n_qubits, std::string(target.name()),
                             {summarize_depth(c.n_qubits, p, records)}};
        std::ostringstream csv;
        csv << csv_preamble(c, "train");
        io::write_sweep_csv(csv, summary);
        std::ostringstream name;
        name << "summary_" << c.n_qubits << "q_" << p << "p_" << target.name()
             << ".csv";
        write_file(output_path(c, name.str()), csv.str());
        print_row(out, summary.rows.front());

        if (summary.rows.front().n_failures > 0) {
            for (const auto &r : records) {
                if (r.failed) {
                    err << "run " << r.config.run_index << " aborted: "
                        << r.failure_message << '\n';
                }
            }
            return kExitRuntime;
        }
        return kExitOk;
    });
}

int cmd_sweep(const ExperimentConfig &c, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        check_training(c);
        const TargetSpec target = resolve_target(c, c.target, c.n_qubits);
        SweepSummary summary{c.n_qubits, std::string(target.name()), {}};
        std::size_t failures = 0;
        for (const std::size_t p : sorted_depths(c)) {
            const auto records = run_depth(c, "sweep", p, target);
            summary.rows.push_back(summarize_depth(c.n_qubits, p, records));
            failures += summary.rows.back().n_failures;
            print_row(out, summary.rows.back());
        }
        const auto pc = detect_pc(summary, c.epsilon);
        const std::string pc_line =
            "p_c = " + (pc ? std::to_string(*pc) : std::string("none")) +
            " (epsilon = " + io::format_double(c.epsilon) + ")";

        std::ostringstream stem;
        stem << c.n_qubits << "q_" << target.name();
        std::ostringstream csv;
        csv << csv_preamble(c, "sweep");
        io::write_sweep_csv(csv, summary);
        write_file(output_path(c, "sweep_" + stem.str() + ".csv"), csv.str());

        json j = io::summary_to_json(summary);
        j["epsilon"] = c.epsilon;
        j["p_c"] = pc ? json(*pc) : json(nullptr);
        write_file(output_path(c, "sweep_" + stem.str() + ".json"),
                   with_config(std::move(j), c, "sweep").dump(1) + "\n");
        write_file(output_path(c, "pc_" + stem.str() + ".txt"),
                   csv_preamble(c, "sweep") + pc_line + "\n");
        out << pc_line << '\n';
        return failures > 0 ? kExitRuntime : kExitOk;
    });
}

int cmd_bounds(const ExperimentConfig &c, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        require(c.n_qubits >= 2 && c.n_qubits <= 31, "qubits must be in [2, 31]");
        const BoundsReport rep = bounds_report(c.n_qubits);
        const std::string stem = "bounds_" + std::to_string(c.n_qubits) + "q";
        std::ostringstream csv;
        csv << csv_preamble(c, "bounds");
        io::write_bounds_csv(csv, rep);
        write_file(output_path(c, stem + ".csv"), csv.str());
        write_file(output_path(c, stem + ".json"),
                   with_config(io::bounds_to_json(rep), c, "bounds").dump(1) + "\n");
        out << "n=" << rep.n_qubits << " d_c=" << rep.d_c << " p_to_dc="
            << rep.p_to_dc.computed << " dla=" << rep.dla_dim
            << " p_to_dla=" << rep.p_to_dla.computed << '\n';
        for (const auto &f : rep.flags) {
            out << "flag: " << f << '\n';
        }
        return kExitOk;
    });
}

int cmd_qfi(const ExperimentConfig &c, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        require(c.n_qubits >= 2 && c.n_qubits <= 6,
                "qfi supports 2 <= qubits <= 6 (matrix size guard)");
        require(c.qfi_samples >= 1, "samples must be >= 1");
        const std::uint64_t dc = d_c(c.n_qubits);
        std::ostringstream csv;
        csv << csv_preamble(c, "qfi") << io::kQfiHeader << '\n';
        for (const std::size_t p : sorted_depths(c)) {
            const auto layout = AnsatzLayout::build(c.n_qubits, p);
            std::size_t rank = 0;
            for (std::size_t s = 0; s < c.qfi_samples; ++s) {
                Rng rng(run_seed(c.seed, s));
                const auto theta = init_params(layout, rng);
                rank = std::max(rank, qfi_rank(qfi_matrix(layout, theta)));
            }
            csv << p << ',' << layout.n_params() << ',' << rank << ',' << dc << '\n';
            out << "p=" << p << " n_params=" << layout.n_params() << " rank=" << rank
                << " d_c=" << dc << '\n';
        }
        write_file(output_path(c, "qfi_" + std::to_string(c.n_qubits) + "q.csv"),
                   csv.str());
        return kExitOk;
    });
}

int cmd_gradvar(const ExperimentConfig &c, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        require(c.n_inits >= 2, "inits must be >= 2");
        require(!c.gradvar_targets.empty(), "gradvar needs at least one target");
        std::ostringstream csv;
        csv << csv_preamble(c, "gradvar") << io::kGradvarHeader << '\n';
        for (const std::size_t n : c.gradvar_qubits) {
            require(n >= 2 && n <= 16, "gradvar qubits must be in [2, 16]");
            for (const auto &name : c.gradvar_targets) {
                const TargetSpec target = resolve_target(c, name, n);
                // Shared per-width stream: every target sees the same inits.
                Rng rng(run_seed(c.seed, n));
                const auto s = gradient_variance_study(n, c.gradvar_depth,
                                                       target.distribution,
                                                       c.n_inits, rng);
                csv << n << ',' << target.name() << ',' << c.gradvar_depth << ','
                    << param_count(n, c.gradvar_depth) << ',' << c.n_inits << ','
                    << io::format_double(s.median_var) << ','
                    << io::format_double(s.iqr_var) << ','
                    << io::format_double(s.median_linf) << ','
                    << io::format_double(s.iqr_linf) << '\n';
                out << "n=" << n << " target=" << target.name()
                    << " median_var=" << io::format_double(s.median_var)
                    << " median_linf=" << io::format_double(s.median_linf) << '\n';
            }
        }
        write_file(output_path(c, "gradvar.csv"), csv.str());
        return kExitOk;
    });
}

int cmd_hessian(const ExperimentConfig &c, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        require(!c.record_path.empty(), "hessian needs --record PATH");
        require(c.zero_tol >= 0.0, "zero_tol must be non-negative");
        RunRecord rec;
        try {
            std::ifstream f(c.record_path);
            if (!f) {
                throw IoError("cannot open " + c.record_path);
            }
            rec = io::record_from_json(json::parse(f));
        } catch (const IoError &) {
            throw;
        } catch (const std::exception &e) {
            throw IoError("malformed run record " + c.record_path + ": " + e.what());
        }
        const auto layout = AnsatzLayout::build(rec.config.n_qubits, rec.config.n_layers);
        const auto h = hessian(layout, rec.final_theta, rec.config.target.distribution);
        const auto spec = hessian_spectrum_summary(h, c.zero_tol);

        json j = io::spectrum_to_json(spec);
        j["record"] = c.record_path;
        j["n_qubits"] = rec.config.n_qubits;
        j["n_layers"] = rec.config.n_layers;
        j["n_params"] = layout.n_params();
        j["target"] = rec.config.target.name();
        j["final_loss"] =
            loss(layout, rec.final_theta, rec.config.target.distribution);
        j["zero_tol"] = c.zero_tol;
        const std::string stem =
            "hessian_" + fs::path(c.record_path).stem().string();
        write_file(output_path(c, stem + ".json"),
                   with_config(std::move(j), c, "hessian").dump(1) + "\n");

        std::ostringstream csv;
        csv << csv_preamble(c, "hessian") << io::kSpectrumHeader << '\n';
        for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
            csv << i << ',' << io::format_double(spec.eigenvalues[i]) << '\n';
        }
        write_file(output_path(c, stem + ".csv"), csv.str());
        out << "n_params=" << layout.n_params() << " n_zero=" << spec.n_zero
            << " e_min=" << io::format_double(spec.e_min)
            << " e_max=" << io::format_double(spec.e_max) << " ("
            << curvature_name(spec.kind) << ")\n";
        return kExitOk;
    });
}

} // namespace qcbm::cli
