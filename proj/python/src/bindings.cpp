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
 * Python bindings for the qcbm core: ansatz construction, Born
 * distributions, divergences, targets, gradients, curvature, training
 * and the analytic bounds.
 */

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcbm/analysis.hpp"
#include "qcbm/ansatz.hpp"
#include "qcbm/diff.hpp"
#include "qcbm/divergence.hpp"
#include "qcbm/errors.hpp"
#include "qcbm/io.hpp"
#include "qcbm/rng.hpp"
#include "qcbm/targets.hpp"
#include "qcbm/train.hpp"

namespace py = pybind11;
using namespace qcbm;

namespace {

GradientVector gradient(const AnsatzLayout &layout, const std::vector<double> &theta,
                        const std::vector<double> &target, const std::string &method,
                        std::size_t n_shots, std::uint64_t seed) {
    if (method == "adjoint") {
        return gradient_adjoint(layout, theta, target);
    }
    if (method == "shift") {
        return gradient_param_shift(layout, theta, target);
    }
    if (method == "sampled") {
        Rng rng(seed);
        return gradient_sampled(layout, theta, target, n_shots, rng);
    }
    throw DomainError("unknown gradient method '" + method + "'");
}

py::dict bounds_dict(const BoundsReport &r) {
    const auto cell = [](const BoundCell &c) {
        py::dict d;
        d["computed"] = c.computed;
        d["published"] = c.published;
        d["discrepant"] = c.discrepant();
        return d;
    };
    py::dict d;
    d["n_qubits"] = r.n_qubits;
    d["d_c"] = r.d_c;
    d["dla_dim"] = r.dla_dim;
    d["p_to_dc"] = cell(r.p_to_dc);
    d["p_to_dla"] = cell(r.p_to_dla);
    d["flags"] = r.flags;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum circuit Born machine simulation and training core";

    py::register_exception<IngestionError>(m, "IngestionError", PyExc_ValueError);
    py::register_exception<NonFiniteGradient>(m, "NonFiniteGradient", PyExc_ArithmeticError);

    py::enum_<TargetKind>(m, "TargetKind")
        .value("UNIFORM", TargetKind::Uniform)
        .value("SPARSE", TargetKind::Sparse)
        .value("BELL", TargetKind::Bell)
        .value("GHZ", TargetKind::Ghz)
        .value("W", TargetKind::W)
        .value("HEP", TargetKind::Hep);

    py::class_<TargetSpec>(m, "Target")
        .def_readonly("kind", &TargetSpec::kind)
        .def_readonly("n_qubits", &TargetSpec::n_qubits)
        .def_readonly("seed", &TargetSpec::seed)
        .def_readonly("source_path", &TargetSpec::source_path)
        .def_readonly("distribution", &TargetSpec::distribution)
        .def_property_readonly("name", [](const TargetSpec &t) { return std::string(t.name()); })
        .def("__repr__", [](const TargetSpec &t) {
            return "<Target " + std::string(t.name()) + " n=" + std::to_string(t.n_qubits) + ">";
        });

    m.def(
        "make_target",
        [](const std::string &name, std::size_t n_qubits, std::optional<std::uint64_t> seed,
           std::optional<std::string> path) {
            return make_target(parse_target_kind(name), n_qubits, seed, path);
        },
        py::arg("name"), py::arg("n_qubits"), py::arg("seed") = py::none(),
        py::arg("path") = py::none(),
        "Target by name: uniform, sparse (needs seed), bell, ghz, w, hep (needs path).");
    m.def("sparsity", &sparsity, py::arg("p"));

    py::class_<AnsatzLayout>(m, "Layout")
        .def_static("build", &AnsatzLayout::build, py::arg("n_qubits"), py::arg("n_layers"))
        .def_property_readonly("n_qubits", &AnsatzLayout::n_qubits)
        .def_property_readonly("n_layers", &AnsatzLayout::n_layers)
        .def_property_readonly("n_params", &AnsatzLayout::n_params)
        .def("__repr__", [](const AnsatzLayout &l) {
            return "<Layout n=" + std::to_string(l.n_qubits()) + " p=" +
                   std::to_string(l.n_layers()) + " params=" + std::to_string(l.n_params()) +
                   ">";
        });

    m.def("param_count", &param_count, py::arg("n_qubits"), py::arg("n_layers"));
    m.def(
        "born_distribution",
        [](const AnsatzLayout &l, const std::vector<double> &theta) {
            return born_distribution(l, theta);
        },
        py::arg("layout"), py::arg("theta"));

    m.def(
        "kld", [](const std::vector<double> &p, const std::vector<double> &q) { return kld(p, q); },
        py::arg("p"), py::arg("q"));
    m.def(
        "jsd", [](const std::vector<double> &p, const std::vector<double> &q) { return jsd(p, q); },
        py::arg("p"), py::arg("q"));
    m.def(
        "jsd_grad_q",
        [](const std::vector<double> &p, const std::vector<double> &q) { return jsd_grad_q(p, q); },
        py::arg("p"), py::arg("q"));

    m.def(
        "loss",
        [](const AnsatzLayout &l, const std::vector<double> &theta,
           const std::vector<double> &target) { return loss(l, theta, target); },
        py::arg("layout"), py::arg("theta"), py::arg("target"));
    m.def(
        "gradient",
        [](const AnsatzLayout &l, const std::vector<double> &theta,
           const std::vector<double> &target, const std::string &method, std::size_t n_shots,
           std::uint64_t seed) { return gradient(l, theta, target, method, n_shots, seed).values; },
        py::arg("layout"), py::arg("theta"), py::arg("target"), py::arg("method") = "adjoint",
        py::arg("n_shots") = 1000, py::arg("seed") = 0,
        "Loss gradient by 'adjoint', 'shift' or 'sampled' (finite-shot) evaluation.");
    m.def(
        "hessian",
        [](const AnsatzLayout &l, const std::vector<double> &theta,
           const std::vector<double> &target) { return hessian(l, theta, target).entries; },
        py::arg("layout"), py::arg("theta"), py::arg("target"));
    m.def(
        "qfi_matrix",
        [](const AnsatzLayout &l, const std::vector<double> &theta) {
            return qfi_matrix(l, theta).entries;
        },
        py::arg("layout"), py::arg("theta"));
    m.def(
        "qfi_rank",
        [](const Eigen::MatrixXd &f, double tau) { return qfi_rank(QfiMatrix{f}, tau); },
        py::arg("qfi"), py::arg("tau") = kQfiRankTolerance);

    py::class_<SpectrumSummary>(m, "Spectrum")
        .def_readonly("eigenvalues", &SpectrumSummary::eigenvalues)
        .def_readonly("n_zero", &SpectrumSummary::n_zero)
        .def_readonly("e_min", &SpectrumSummary::e_min)
        .def_readonly("e_max", &SpectrumSummary::e_max)
        .def_property_readonly("kind",
                               [](const SpectrumSummary &s) { return curvature_name(s.kind); });
    m.def(
        "hessian_spectrum",
        [](const Eigen::MatrixXd &h, double zero_tol) {
            return hessian_spectrum_summary(HessianMatrix{h}, zero_tol);
        },
        py::arg("hessian"), py::arg("zero_tol") = kHessianZeroTolerance);

    py::class_<RunRecord>(m, "RunRecord")
        .def_readonly("run_seed", &RunRecord::run_seed)
        .def_readonly("initial_theta", &RunRecord::initial_theta)
        .def_readonly("final_theta", &RunRecord::final_theta)
        .def_readonly("loss_trajectory", &RunRecord::loss_trajectory)
        .def_readonly("tts", &RunRecord::tts)
        .def_readonly("failed", &RunRecord::failed)
        .def_readonly("failure_message", &RunRecord::failure_message)
        .def_property_readonly("final_loss", &RunRecord::final_loss)
        .def_property_readonly("run_index", [](const RunRecord &r) { return r.config.run_index; })
        .def("to_json", [](const RunRecord &r) { return io::record_to_json(r).dump(1); });

    m.def(
        "train",
        [](const TargetSpec &target, std::size_t n_layers, std::size_t n_runs,
           std::size_t n_steps, double learning_rate, std::optional<std::size_t> n_shots,
           std::uint64_t seed, double epsilon, std::size_t workers) {
            TrainConfig c;
            c.n_qubits = target.n_qubits;
            c.n_layers = n_layers;
            c.target = target;
            c.n_steps = n_steps;
            c.adam.learning_rate = learning_rate;
            c.n_shots = n_shots;
            c.seed = seed;
            c.tts_epsilon = epsilon;
            py::gil_scoped_release release;
            return train_runs(c, n_runs, workers);
        },
        py::arg("target"), py::arg("n_layers"), py::arg("n_runs") = 1, py::arg("n_steps") = 200,
        py::arg("learning_rate") = 0.01, py::arg("n_shots") = py::none(), py::arg("seed") = 0,
        py::arg("epsilon") = kDefaultEpsilon, py::arg("workers") = 1,
        "Independent Adam training runs; run r uses seed derived from (seed, r).");

    m.def(
        "quartiles",
        [](const std::vector<double> &v) {
            const auto q = quartiles(v);
            return py::make_tuple(q.q1, q.median, q.q3);
        },
        py::arg("values"));
    m.def("d_c", &d_c, py::arg("n_qubits"));
    m.def("dla_dim", &dla_dim, py::arg("n_qubits"));
    m.def("depth_to_bound", &depth_to_bound, py::arg("n_qubits"), py::arg("bound"));
    m.def(
        "bounds_report", [](std::size_t n) { return bounds_dict(bounds_report(n)); },
        py::arg("n_qubits"));
}
