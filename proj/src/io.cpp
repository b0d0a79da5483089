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

#include "qcbm/io.hpp"

#include <cstdio>
#include <ostream>

#include "qcbm/errors.hpp"

namespace qcbm::io {
namespace {

const char *axis_gate(Axis a) { return a == Axis::X ? "rx" : "ry"; }

json quartiles_to_json(const Quartiles &q) {
    return {{"q1", q.q1}, {"median", q.median}, {"q3", q.q3}};
}

json optional_u64(const std::optional<std::uint64_t> &v) {
    return v ? json(*v) : json(nullptr);
}

} // namespace

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json layout_to_json(const AnsatzLayout &layout) {
    json gates = json::array();
    for (const auto &g : layout.gates()) {
        if (const auto *r = std::get_if<RotationGate>(&g)) {
            gates.push_back({{"gate", axis_gate(r->axis)},
                             {"qubit", r->qubit},
                             {"param", r->param_index}});
        } else {
            const auto &e = std::get<EntanglerGate>(g);
            gates.push_back(
                {{"gate", "cnot"}, {"control", e.control}, {"target", e.target}});
        }
    }
    return {{"ansatz", "hea"},
            {"n_qubits", layout.n_qubits()},
            {"n_layers", layout.n_layers()},
            {"n_params", layout.n_params()},
            {"gates", std::move(gates)}};
}

json target_to_json(const TargetSpec &t) {
    return {{"name", t.name()},
            {"n_qubits", t.n_qubits},
            {"seed", optional_u64(t.seed)},
            {"source_path", t.source_path ? json(*t.source_path) : json(nullptr)},
            {"distribution", t.distribution}};
}

TargetSpec target_from_json(const json &j) {
    TargetSpec t{parse_target_kind(j.at("name").get<std::string>()),
                 j.at("n_qubits").get<std::size_t>(),
                 std::nullopt,
                 std::nullopt,
                 j.at("distribution").get<ProbVector>()};
    if (!j.at("seed").is_null()) {
        t.seed = j.at("seed").get<std::uint64_t>();
    }
    if (!j.at("source_path").is_null()) {
        t.source_path = j.at("source_path").get<std::string>();
    }
    if (t.distribution.size() != (std::size_t{1} << t.n_qubits)) {
        throw DomainError("target distribution length does not match n_qubits");
    }
    return t;
}

json record_to_json(const RunRecord &rec, bool include_wall_time) {
    const auto &c = rec.config;
    json j = {
        {"schema", kRunRecordSchema},
        {"config",
         {{"n_qubits", c.n_qubits},
          {"n_layers", c.n_layers},
          {"n_steps", c.n_steps},
          {"learning_rate", c.adam.learning_rate},
          {"beta1", c.adam.beta1},
          {"beta2", c.adam.beta2},
          {"adam_epsilon", c.adam.epsilon},
          {"n_shots", c.n_shots ? json(*c.n_shots) : json(nullptr)},
          {"tts_epsilon", c.tts_epsilon}}},
        {"target", target_to_json(c.target)},
        {"seeds",
         {{"base_seed", c.seed}, {"run_index", c.run_index}, {"run_seed", rec.run_seed}}},
        {"layout", layout_to_json(AnsatzLayout::build(c.n_qubits, c.n_layers))},
        {"initial_theta", rec.initial_theta},
        {"final_theta", rec.final_theta},
        {"loss_trajectory", rec.loss_trajectory},
        {"final_loss", rec.final_loss()},
        {"tts", rec.tts},
        {"failed", rec.failed},
        {"failure", rec.failure_message},
    };
    if (include_wall_time) {
        j["wall_time_s"] = rec.wall_time;
    }
    return j;
}

RunRecord record_from_json(const json &j) {
    if (j.at("schema").get<std::string>() != kRunRecordSchema) {
        throw DomainError("unsupported run record schema");
    }
    const auto &c = j.at("config");
    RunRecord rec;
    rec.config.n_qubits = c.at("n_qubits").get<std::size_t>();
    rec.config.n_layers = c.at("n_layers").get<std::size_t>();
    rec.config.n_steps = c.at("n_steps").get<std::size_t>();
    rec.config.adam.learning_rate = c.at("learning_rate").get<double>();
    rec.config.adam.beta1 = c.at("beta1").get<double>();
    rec.config.adam.beta2 = c.at("beta2").get<double>();
    rec.config.adam.epsilon = c.at("adam_epsilon").get<double>();
    if (!c.at("n_shots").is_null()) {
        rec.config.n_shots = c.at("n_shots").get<std::size_t>();
    }
    rec.config.tts_epsilon = c.at("tts_epsilon").get<double>();
    rec.config.target = target_from_json(j.at("target"));
    const auto &s = j.at("seeds");
    rec.config.seed = s.at("base_seed").get<std::uint64_t>();
    rec.config.run_index = s.at("run_index").get<std::size_t>();
    rec.run_seed = s.at("run_seed").get<std::uint64_t>();
    rec.initial_theta = j.at("initial_theta").get<ParameterVector>();
    rec.final_theta = j.at("final_theta").get<ParameterVector>();
    rec.loss_trajectory = j.at("loss_trajectory").get<std::vector<double>>();
    rec.tts = j.at("tts").get<std::size_t>();
    rec.failed = j.at("failed").get<bool>();
    rec.failure_message = j.at("failure").get<std::string>();
    if (j.contains("wall_time_s")) {
        rec.wall_time = j.at("wall_time_s").get<double>();
    }
    validate(rec.config);
    if (rec.final_theta.size() !=
        param_count(rec.config.n_qubits, rec.config.n_layers)) {
        throw DomainError("final_theta length does not match the layout");
    }
    if (rec.loss_trajectory.empty()) {
        throw DomainError("run record has an empty loss trajectory");
    }
    return rec;
}

json summary_to_json(const SweepSummary &s) {
    json rows = json::array();
    for (const auto &r : s.rows) {
        rows.push_back({{"p", r.p},
                        {"n_params", r.n_params},
                        {"loss", quartiles_to_json(r.loss)},
                        {"tts", quartiles_to_json(r.tts)},
                        {"n_runs", r.n_runs},
                        {"n_failures", r.n_failures}});
    }
    return {{"n_qubits", s.n_qubits}, {"target", s.target}, {"rows", std::move(rows)}};
}

json bounds_to_json(const BoundsReport &b) {
    auto cell = [](const BoundCell &c) {
        return json{{"computed", c.computed},
                    {"published", optional_u64(c.published)},
                    {"discrepant", c.discrepant()}};
    };
    return {{"n_qubits", b.n_qubits},
            {"d_c", b.d_c},
            {"dla_dim", b.dla_dim},
            {"p_to_dc", cell(b.p_to_dc)},
            {"p_to_dla", cell(b.p_to_dla)},
            {"flags", b.flags}};
}

json spectrum_to_json(const SpectrumSummary &s) {
    return {{"n_eigenvalues", s.eigenvalues.size()},
            {"n_zero", s.n_zero},
            {"e_min", s.e_min},
            {"e_max", s.e_max},
            {"classification", curvature_name(s.kind)},
            {"eigenvalues", s.eigenvalues}};
}

void write_sweep_csv(std::ostream &out, const SweepSummary &s) {
    out << kSweepHeader << '\n';
    for (const auto &r : s.rows) {
        out << r.p << ',' << r.n_params << ',' << format_double(r.loss.q1) << ','
            << format_double(r.loss.median) << ',' << format_double(r.loss.q3)
            << ',' << format_double(r.tts.q1) << ','
            << format_double(r.tts.median) << ',' << format_double(r.tts.q3)
            << ',' << r.n_runs << ',' << r.n_failures << '\n';
    }
}

void write_bounds_csv(std::ostream &out, const BoundsReport &b) {
    auto pub = [](const BoundCell &c) {
        return c.published ? std::to_string(*c.published) : std::string();
    };
    out << kBoundsHeader << '\n'
        << b.n_qubits << ',' << b.d_c << ',' << b.dla_dim << ','
        << b.p_to_dc.computed << ',' << pub(b.p_to_dc) << ','
        << (b.p_to_dc.discrepant() ? 1 : 0) << ',' << b.p_to_dla.computed << ','
        << pub(b.p_to_dla) << ',' << (b.p_to_dla.discrepant() ? 1 : 0) << '\n';
}

} // namespace qcbm::io
