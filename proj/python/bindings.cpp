// Copyright 2026 The symrestore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <bit>
#include <numbers>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symrestore/asymmetry.hpp"
#include "symrestore/experiment.hpp"
#include "symrestore/initial_states.hpp"
#include "symrestore/io.hpp"
#include "symrestore/oracle.hpp"

namespace py = pybind11;
using namespace symrestore;

namespace {

py::dict summary_to_dict(const EnsembleSummary &s) {
    std::vector<size_t> t;
    std::vector<double> mean, err, pa, paq;
    for (const auto &r : s.rows) {
        t.push_back(r.t);
        mean.push_back(r.mean_ds);
        err.push_back(r.stderr_ds);
        pa.push_back(r.mean_purity_a);
        paq.push_back(r.mean_purity_aq);
    }
    py::dict d;
    d["t"] = t;
    d["mean_dS"] = mean;
    d["stderr"] = err;
    d["mean_purity_A"] = pa;
    d["mean_purity_AQ"] = paq;
    d["n_shots"] = s.rows.empty() ? 0 : s.rows.front().n_shots;
    d["N"] = s.num_qubits;
    d["a"] = s.subsystem_size;
    d["theta"] = s.theta;
    d["symmetry"] = s.symmetry;
    d["mode"] = s.mode;
    d["init"] = s.init;
    d["seed"] = s.seed;
    d["csv"] = emit_summary(s, OutputFormat::Csv);
    return d;
}

ExperimentConfig make_config(size_t n, const std::string &symmetry, const std::string &mode,
                             const std::optional<std::string> &subsystem, const std::string &init, double theta,
                             double tilt_width, std::optional<size_t> depth, size_t shots, uint64_t seed,
                             bool renyi2, size_t workers) {
    ExperimentConfig c;
    c.circuit.num_qubits = n;
    c.circuit.depth = depth.value_or(4 * n);
    c.circuit.symmetry = parse_gate_symmetry(symmetry);
    c.circuit.mode = parse_translation_mode(mode);
    c.circuit.master_seed = seed;
    c.initial = {parse_initial_kind(init), theta, tilt_width, seed};
    c.subsystem = parse_subsystem(subsystem.value_or("0.." + std::to_string(std::max<size_t>(1, n / 4))), n);
    c.realizations = shots;
    c.measurement = renyi2 ? MeasurementKind::Renyi2 : MeasurementKind::VonNeumann;
    c.workers = workers;
    return c;
}

}  // namespace

PYBIND11_MODULE(_symrestore, m) {
    m.doc() = "Entanglement asymmetry in symmetric random circuits";

    m.def("parse_angle", &parse_angle, py::arg("text"));
    m.def(
        "parse_subsystem", [](const std::string &text, size_t n) { return parse_subsystem(text, n).qubits(); },
        py::arg("text"), py::arg("num_qubits"));

    m.def(
        "initial_state",
        [](const std::string &kind, size_t n, double theta, double tilt_width, uint64_t tilt_seed) {
            PureState s = build_initial_state({parse_initial_kind(kind), theta, tilt_width, tilt_seed}, n);
            return Eigen::VectorXcd(Eigen::Map<const Eigen::VectorXcd>(s.amplitudes().data(),
                                                                       static_cast<Eigen::Index>(s.dim())));
        },
        py::arg("kind"), py::arg("num_qubits"), py::arg("theta") = 0.0, py::arg("tilt_width") = 0.0,
        py::arg("tilt_seed") = 0);

    m.def(
        "reduced_density_matrix",
        [](const Eigen::VectorXcd &amps, const std::vector<size_t> &qubits) {
            std::vector<complex> v(amps.data(), amps.data() + amps.size());
            PureState s = PureState::from_amplitudes(std::move(v));
            return partial_trace(s, SubsystemSpec(qubits, s.num_qubits())).entries();
        },
        py::arg("state"), py::arg("qubits"));

    m.def(
        "asymmetry",
        [](const ComplexMatrix &rho, const std::string &symmetry, bool renyi2) {
            auto n = static_cast<size_t>(std::countr_zero(static_cast<size_t>(rho.rows())));
            auto res = symrestore::asymmetry(DensityMatrix(rho), sectors_for(parse_gate_symmetry(symmetry), n),
                                             renyi2 ? EntropyKind::Renyi2 : EntropyKind::VonNeumann);
            py::dict d;
            d["delta"] = res.delta;
            d["entropy"] = res.entropy_original;
            d["entropy_pruned"] = res.entropy_pruned;
            d["purity"] = res.purity_original;
            d["purity_pruned"] = res.purity_pruned;
            return d;
        },
        py::arg("rho"), py::arg("symmetry") = "u1", py::arg("renyi2") = false);

    m.def(
        "run_dynamics",
        [](size_t n, const std::string &symmetry, const std::string &mode, std::optional<std::string> subsystem,
           const std::string &init, double theta, double tilt_width, std::optional<size_t> depth, size_t shots,
           uint64_t seed, bool renyi2, size_t workers) {
            auto c = make_config(n, symmetry, mode, subsystem, init, theta, tilt_width, depth, shots, seed, renyi2,
                                 workers);
            EnsembleSummary s;
            {
                py::gil_scoped_release release;
                s = run_ensemble(c);
            }
            return summary_to_dict(s);
        },
        py::arg("n") = 12, py::arg("symmetry") = "u1", py::arg("mode") = "iid", py::arg("subsystem") = py::none(),
        py::arg("init") = "ferro", py::arg("theta") = 0.0, py::arg("tilt_width") = 0.0,
        py::arg("depth") = py::none(), py::arg("shots") = 100, py::arg("seed") = 1, py::arg("renyi2") = false,
        py::arg("workers") = kDefaultWorkers);

    py::module_ o = m.def_submodule("oracle", "Late-time Renyi-2 predictions");
    o.def(
        "nonsym_late_asymmetry",
        [](long n, long a) {
            auto r = oracle::nonsym_late_asymmetry(n, a);
            return py::make_tuple(r.exact, r.stirling);
        },
        py::arg("n"), py::arg("a"), "(exact, stirling)");
    o.def("nonsym_late_purity", &oracle::nonsym_late_purity, py::arg("n"), py::arg("a"));
    o.def(
        "u1_late_purities",
        [](long n, long a, std::optional<double> theta, std::vector<double> weights) {
            auto p = oracle::u1_late_purities({n, a, theta, std::move(weights)});
            py::dict d;
            d["purity_A"] = p.purity_a;
            d["purity_AQ"] = p.purity_aq;
            d["excess"] = p.excess;
            d["dS2"] = p.renyi2_asymmetry();
            return d;
        },
        py::arg("n"), py::arg("a"), py::arg("theta") = py::none(), py::arg("weights") = std::vector<double>{});
    o.def(
        "u1_late_asymmetry_exact",
        [](long n, long a, double theta) { return oracle::u1_late_asymmetry_exact({n, a, theta, {}}); },
        py::arg("n"), py::arg("a"), py::arg("theta"));
    o.def(
        "u1_late_asymmetry_gaussian",
        [](long n, long a, double theta) {
            auto g = oracle::u1_late_asymmetry_gaussian(n, a, theta);
            return py::make_tuple(g.value, g.valid);
        },
        py::arg("n"), py::arg("a"), py::arg("theta"), "(value, valid)");
    o.def(
        "theta_scan",
        [](long n, double a_fraction, double step, double max_theta) {
            auto r = oracle::theta_scan(n, a_fraction, oracle::uniform_theta_grid(step, max_theta));
            py::dict d;
            d["N"] = r.num_qubits;
            d["a"] = r.subsystem_size;
            d["theta_max"] = r.theta_max;
            d["theta_c"] = r.theta_c;
            d["peak"] = r.peak;
            d["thetas"] = r.thetas;
            d["curve"] = r.curve;
            d["not_unimodal"] = r.not_unimodal;
            return d;
        },
        py::arg("n"), py::arg("a_fraction") = 0.25, py::arg("step") = 0.002 * std::numbers::pi,
        py::arg("max_theta") = 0.5 * std::numbers::pi);
    o.def(
        "fit_power_law",
        [](const std::vector<double> &xs, const std::vector<double> &ys) {
            auto f = oracle::fit_power_law(xs, ys);
            return py::make_tuple(f.prefactor, f.exponent);
        },
        py::arg("xs"), py::arg("ys"), "(prefactor, exponent) of y = prefactor * x^-exponent");

    m.def(
        "read_rdm_dump",
        [](const std::string &path) {
            RdmDump dump = read_rdm_dump(path);
            py::list records;
            for (const auto &r : dump.records) {
                py::dict d;
                d["t"] = r.t;
                d["pruned"] = r.pruned;
                d["matrix"] = r.matrix;
                records.append(d);
            }
            py::list sectors;
            for (const auto &s : dump.sectors) {
                sectors.append(py::make_tuple(s.label, s.indices));
            }
            py::dict d;
            d["num_qubits"] = dump.num_qubits;
            d["symmetry"] = dump.symmetry;
            d["sectors"] = sectors;
            d["has_basis_change"] = dump.has_basis_change;
            d["records"] = records;
            return d;
        },
        py::arg("path"));

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const std::length_error &e) {
            PyErr_SetString(PyExc_MemoryError, e.what());
        }
    });
}
