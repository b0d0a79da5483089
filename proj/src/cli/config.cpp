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
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "qcbm/cli/commands.hpp"
#include "qcbm/errors.hpp"
#include "qcbm/io.hpp"

namespace qcbm::cli {
namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

template <class T> T parse_number(std::string_view key, const std::string &raw) {
    const std::string s = trim(raw);
    T value{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw UsageError("invalid value '" + raw + "' for " + std::string(key));
    }
    return value;
}

bool parse_bool(std::string_view key, const std::string &raw) {
    const std::string s = trim(raw);
    if (s == "true" || s == "1" || s == "yes") {
        return true;
    }
    if (s == "false" || s == "0" || s == "no") {
        return false;
    }
    throw UsageError("invalid boolean '" + raw + "' for " + std::string(key));
}

std::vector<std::string> split_names(const std::string &raw) {
    std::vector<std::string> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::string join(const std::vector<std::size_t> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s;
}

std::string join(const std::vector<std::string> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + v[i];
    }
    return s;
}

using Setter = std::function<void(ExperimentConfig &, const std::string &)>;

const std::map<std::string, Setter, std::less<>> &setters() {
    static const std::map<std::string, Setter, std::less<>> table{
        {"experiment.qubits",
         [](auto &c, const auto &v) { c.n_qubits = parse_number<std::size_t>("qubits", v); }},
        {"experiment.depths", [](auto &c, const auto &v) { c.depths = parse_index_list(v); }},
        {"experiment.target", [](auto &c, const auto &v) { c.target = trim(v); }},
        {"experiment.target_seed",
         [](auto &c, const auto &v) { c.target_seed = parse_number<std::uint64_t>("target_seed", v); }},
        {"experiment.hep_file", [](auto &c, const auto &v) { c.hep_file = trim(v); }},
        {"experiment.runs",
         [](auto &c, const auto &v) { c.n_runs = parse_number<std::size_t>("runs", v); }},
        {"experiment.steps",
         [](auto &c, const auto &v) { c.n_steps = parse_number<std::size_t>("steps", v); }},
        {"experiment.epsilon",
         [](auto &c, const auto &v) { c.epsilon = parse_number<double>("epsilon", v); }},
        {"experiment.shots",
         [](auto &c, const auto &v) { c.n_shots = parse_number<std::size_t>("shots", v); }},
        {"experiment.seed",
         [](auto &c, const auto &v) { c.seed = parse_number<std::uint64_t>("seed", v); }},
        {"experiment.records",
         [](auto &c, const auto &v) { c.write_records = parse_bool("records", v); }},
        {"experiment.wall_time",
         [](auto &c, const auto &v) { c.wall_time = parse_bool("wall_time", v); }},
        {"optimizer.learning_rate",
         [](auto &c, const auto &v) { c.adam.learning_rate = parse_number<double>("learning_rate", v); }},
        {"optimizer.beta1",
         [](auto &c, const auto &v) { c.adam.beta1 = parse_number<double>("beta1", v); }},
        {"optimizer.beta2",
         [](auto &c, const auto &v) { c.adam.beta2 = parse_number<double>("beta2", v); }},
        {"optimizer.epsilon",
         [](auto &c, const auto &v) { c.adam.epsilon = parse_number<double>("epsilon", v); }},
        {"qfi.samples",
         [](auto &c, const auto &v) { c.qfi_samples = parse_number<std::size_t>("samples", v); }},
        {"gradvar.qubits",
         [](auto &c, const auto &v) { c.gradvar_qubits = parse_index_list(v); }},
        {"gradvar.depth",
         [](auto &c, const auto &v) { c.gradvar_depth = parse_number<std::size_t>("depth", v); }},
        {"gradvar.targets", [](auto &c, const auto &v) { c.gradvar_targets = split_names(v); }},
        {"gradvar.inits",
         [](auto &c, const auto &v) { c.n_inits = parse_number<std::size_t>("inits", v); }},
        {"hessian.record", [](auto &c, const auto &v) { c.record_path = trim(v); }},
        {"hessian.zero_tol",
         [](auto &c, const auto &v) { c.zero_tol = parse_number<double>("zero_tol", v); }},
    };
    return table;
}

} // namespace

std::vector<std::size_t> parse_index_list(std::string_view text) {
    std::vector<std::size_t> out;
    for (const auto &item : split_names(std::string(text))) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_number<std::size_t>("index list", item));
            continue;
        }
        const auto lo = parse_number<std::size_t>("index list", item.substr(0, dots));
        const auto hi = parse_number<std::size_t>("index list", item.substr(dots + 2));
        if (hi < lo) {
            throw UsageError("empty range '" + item + "'");
        }
        for (std::size_t v = lo; v <= hi; ++v) {
            out.push_back(v);
        }
    }
    if (out.empty()) {
        throw UsageError("empty index list '" + std::string(text) + "'");
    }
    return out;
}

ExperimentConfig load_config_file(const std::string &path, ExperimentConfig base) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::read_ini(path, tree);
    } catch (const boost::property_tree::ini_parser_error &e) {
        throw UsageError("cannot read config " + path + ": " + e.message());
    }
    const auto &table = setters();
    for (const auto &[section, keys] : tree) {
        if (keys.empty()) {
            throw UsageError(path + ": key '" + section + "' outside a section");
        }
        for (const auto &[key, value] : keys) {
            const std::string full = section + "." + key;
            const auto it = table.find(full);
            if (it == table.end()) {
                throw UsageError(path + ": unknown key '" + full + "'");
            }
            it->second(base, value.data());
        }
    }
    return base;
}

std::string render_config(const ExperimentConfig &c, std::string_view command) {
    using io::format_double;
    std::ostringstream o;
    const bool training = command == "train" || command == "sweep";
    if (command != "hessian") {
        o << "[experiment]\n";
        if (command != "gradvar") {
            o << "qubits = " << c.n_qubits << '\n';
        }
        if (training || command == "qfi") {
            o << "depths = " << join(c.depths) << '\n';
        }
        if (training) {
            o << "target = " << c.target << '\n';
        }
        if (training || command == "gradvar") {
            if (c.target_seed) {
                o << "target_seed = " << *c.target_seed << '\n';
            }
            if (c.hep_file) {
                o << "hep_file = " << *c.hep_file << '\n';
            }
        }
        if (training) {
            o << "runs = " << c.n_runs << '\n'
              << "steps = " << c.n_steps << '\n'
              << "epsilon = " << format_double(c.epsilon) << '\n';
            if (c.n_shots) {
                o << "shots = " << *c.n_shots << '\n';
            }
        }
        if (command != "bounds") {
            o << "seed = " << c.seed << '\n';
        }
        if (training) {
            o << "records = " << (c.write_records ? "true" : "false") << '\n'
              << "wall_time = " << (c.wall_time ? "true" : "false") << '\n'
              << "\n[optimizer]\n"
              << "learning_rate = " << format_double(c.adam.learning_rate) << '\n'
              << "beta1 = " << format_double(c.adam.beta1) << '\n'
              << "beta2 = " << format_double(c.adam.beta2) << '\n'
              << "epsilon = " << format_double(c.adam.epsilon) << '\n';
        }
    }
    if (command == "qfi") {
        o << "\n[qfi]\nsamples = " << c.qfi_samples << '\n';
    }
    if (command == "gradvar") {
        o << "\n[gradvar]\n"
          << "qubits = " << join(c.gradvar_qubits) << '\n'
          << "depth = " << c.gradvar_depth << '\n'
          << "targets = " << join(c.gradvar_targets) << '\n'
          << "inits = " << c.n_inits << '\n';
    }
    if (command == "hessian") {
        o << "[hessian]\n"
          << "record = " << c.record_path << '\n'
          << "zero_tol = " << format_double(c.zero_tol) << '\n';
    }
    return o.str();
}

TargetSpec resolve_target(const ExperimentConfig &config, std::string_view name,
                          std::size_t n_qubits) {
    TargetKind kind{};
    try {
        kind = parse_target_kind(name);
    } catch (const DomainError &e) {
        throw UsageError(e.what());
    }
    try {
        return make_target(kind, n_qubits, config.target_seed.value_or(config.seed),
                           config.hep_file);
    } catch (const IngestionError &e) {
        throw UsageError(std::string("HEP sample file: ") + e.what());
    } catch (const std::logic_error &e) {
        throw UsageError(std::string("target '") + std::string(name) + "': " + e.what());
    }
}

} // namespace qcbm::cli
