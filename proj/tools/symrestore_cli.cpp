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


#include <cmath>
#include <cstdint>
#include <exception>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "symrestore/experiment.hpp"
#include "symrestore/oracle.hpp"

namespace {

using namespace symrestore;

struct CircuitArgs {
    size_t n = 12;
    std::string symmetry = "u1";
    std::string mode = "iid";
    std::string subsystem;
    std::string init = "ferro";
    std::string theta = "0";
    std::string tilt_width = "0";
    bool freeze_tilts = false;
    std::optional<size_t> depth;
    size_t shots = 100;
    uint64_t seed = 1;
    bool renyi2 = false;
    std::string measure;
    size_t workers = kDefaultWorkers;
    double memory_gib = 4.0;
    std::string out = "-";
    std::string format = "csv";
};

struct OutputArgs {
    std::string out = "-";
    std::string format = "csv";
};

void add_output_options(CLI::App *app, std::string &out, std::string &format) {
    app->add_option("--out", out, "Output file ('-' for stdout)");
    app->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

void add_circuit_options(CLI::App *app, CircuitArgs &a) {
    app->add_option("--n", a.n, "Number of qubits (even)");
    app->add_option("--symmetry", a.symmetry, "Gate symmetry")->check(CLI::IsMember({"none", "u1", "z2", "su2"}));
    app->add_option("--mode", a.mode, "Gate sharing: iid, t (spatial), f (Floquet), ft")
        ->check(CLI::IsMember({"iid", "t", "f", "ft"}));
    app->add_option("--subsystem", a.subsystem, "Subsystem qubits, range 'b..e' (end exclusive) or list '0,2,5'");
    app->add_option("--init", a.init, "Initial state")
        ->check(CLI::IsMember({"ferro", "neel", "domain-wall", "random-ferro", "random-neel", "ghz", "staggered-ferro"}));
    app->add_option("--theta", a.theta, "Tilt angle in radians or as a multiple of pi, e.g. 0.2pi");
    app->add_option("--tilt-width", a.tilt_width, "Half-width W of random tilts (radians or 'pi' multiple)");
    app->add_flag("--freeze-tilts", a.freeze_tilts, "Use the same random tilts for every realization");
    app->add_option("--depth", a.depth, "Circuit depth in steps");
    app->add_option("--shots", a.shots, "Number of circuit realizations");
    app->add_option("--seed", a.seed, "Master seed");
    app->add_flag("--renyi2", a.renyi2, "Measure the Renyi-2 asymmetry instead of von Neumann");
    app->add_option("--measure-symmetry", a.measure, "Symmetry used for the asymmetry (default: u1 for none/u1 circuits)")
        ->check(CLI::IsMember({"none", "u1", "z2", "su2"}));
    app->add_option("--workers", a.workers, "Worker threads");
    app->add_option("--memory-limit-gib", a.memory_gib, "Refuse runs whose estimated footprint exceeds this");
    add_output_options(app, a.out, a.format);
}

ExperimentConfig to_config(const CircuitArgs &a, size_t default_depth) {
    ExperimentConfig c;
    c.circuit.num_qubits = a.n;
    c.circuit.depth = a.depth.value_or(default_depth);
    c.circuit.symmetry = parse_gate_symmetry(a.symmetry);
    c.circuit.mode = parse_translation_mode(a.mode);
    c.circuit.master_seed = a.seed;
    c.initial.kind = parse_initial_kind(a.init);
    c.initial.theta = parse_angle(a.theta);
    c.initial.tilt_width = parse_angle(a.tilt_width);
    c.initial.tilt_seed = a.seed;
    c.freeze_tilts = a.freeze_tilts;
    c.subsystem = a.subsystem.empty() ? SubsystemSpec::range(0, std::max<size_t>(1, a.n / 4), a.n)
                                      : parse_subsystem(a.subsystem, a.n);
    c.realizations = a.shots;
    c.measurement = a.renyi2 ? MeasurementKind::Renyi2 : MeasurementKind::VonNeumann;
    if (!a.measure.empty()) {
        c.measured_symmetry = parse_gate_symmetry(a.measure);
    }
    c.workers = a.workers;
    if (!(a.memory_gib > 0.0)) {
        throw std::invalid_argument("memory limit must be positive");
    }
    c.memory_limit_bytes = static_cast<uint64_t>(a.memory_gib * double(uint64_t{1} << 30));
    return c;
}

std::vector<double> parse_angle_list(const std::vector<std::string> &items) {
    std::vector<double> out;
    for (const auto &s : items) {
        out.push_back(parse_angle(s));
    }
    return out;
}

// "1..5" (inclusive of both ends) or single integers.
std::vector<size_t> parse_size_list(const std::vector<std::string> &items) {
    std::vector<size_t> out;
    for (const auto &s : items) {
        if (auto pos = s.find(".."); pos != std::string::npos) {
            size_t lo = std::stoul(s.substr(0, pos));
            size_t hi = std::stoul(s.substr(pos + 2));
            for (size_t k = lo; k <= hi; k++) {
                out.push_back(k);
            }
        } else {
            out.push_back(std::stoul(s));
        }
    }
    return out;
}

int run_dynamics(const CircuitArgs &a, const std::string &dump_path) {
    ExperimentConfig c = to_config(a, 4 * a.n);
    auto summary = run_ensemble(c);
    write_output(a.out, emit_summary(summary, parse_output_format(a.format)));
    if (!dump_path.empty()) {
        write_rdm_dump(dump_path, dump_realization(c, 0));
    }
    return 0;
}

int run_latetime(const CircuitArgs &a, const std::vector<std::string> &sizes, const std::vector<std::string> &thetas,
                 bool check) {
    LatetimeSweep sweep;
    sweep.base = to_config(a, default_late_depth(a.n));
    sweep.subsystem_sizes = parse_size_list(sizes);
    sweep.thetas = parse_angle_list(thetas);
    sweep.check_convergence = check;
    auto rows = run_latetime_sweep(sweep);
    EnsembleSummary meta;
    meta.num_qubits = a.n;
    meta.symmetry = a.symmetry;
    meta.mode = a.mode;
    meta.init = a.init;
    meta.seed = a.seed;
    for (const auto &r : rows) {
        if (!r.converged) {
            std::cerr << fmt::format("warning: a={} theta={} not converged (depth {} vs {})\n", r.subsystem_size,
                                     format_double(r.theta), sweep.base.circuit.depth, 2 * sweep.base.circuit.depth);
        }
    }
    write_output(a.out, emit_latetime(meta, rows, parse_output_format(a.format)));
    return 0;
}

int run_oracle(long n, const std::vector<std::string> &sizes, const std::vector<std::string> &thetas,
               const OutputArgs &o) {
    std::vector<size_t> as = sizes.empty() ? std::vector<size_t>{} : parse_size_list(sizes);
    if (as.empty()) {
        for (long k = 0; k <= n; k++) {
            as.push_back(static_cast<size_t>(k));
        }
    }
    std::vector<double> ts = thetas.empty() ? std::vector<double>{std::numbers::pi / 2} : parse_angle_list(thetas);
    std::vector<OracleRow> rows;
    for (size_t a : as) {
        for (double t : ts) {
            rows.push_back(oracle_row(n, static_cast<long>(a), t));
        }
    }
    write_output(o.out, emit_oracle(rows, parse_output_format(o.format)));
    return 0;
}

int run_scan(const std::vector<long> &ns, double fraction, const std::string &step, const std::string &hi,
             const OutputArgs &o, const std::string &summary_path) {
    auto grid = oracle::uniform_theta_grid(parse_angle(step), parse_angle(hi));
    std::vector<oracle::ThetaScanResult> scans;
    std::vector<double> xs;
    std::vector<double> ys;
    for (long n : ns) {
        scans.push_back(oracle::theta_scan(n, fraction, grid));
        xs.push_back(static_cast<double>(n));
        ys.push_back(scans.back().theta_c);
        if (scans.back().not_unimodal) {
            std::cerr << "warning: N=" << n << " curve is not unimodal\n";
        }
    }
    std::optional<oracle::PowerLawFit> fit;
    if (ns.size() >= 2) {
        fit = oracle::fit_power_law(xs, ys);
        std::cerr << fmt::format("fit: theta_c = {} pi * N^-{}\n", format_double(fit->prefactor / std::numbers::pi),
                                 format_double(fit->exponent));
    }
    auto format = parse_output_format(o.format);
    std::string curve;
    std::string summary;
    if (format == OutputFormat::Json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto &s : scans) {
            nlohmann::ordered_json j;
            j["N"] = s.num_qubits;
            j["a"] = s.subsystem_size;
            j["theta_max"] = s.theta_max;
            j["theta_c"] = s.theta_c;
            j["peak"] = s.peak;
            j["not_unimodal"] = s.not_unimodal;
            j["theta"] = s.thetas;
            j["dS2_exact"] = s.curve;
            arr.push_back(std::move(j));
        }
        nlohmann::ordered_json doc;
        doc["scans"] = std::move(arr);
        if (fit) {
            doc["fit"] = {{"prefactor", fit->prefactor}, {"exponent", fit->exponent}};
        }
        curve = doc.dump(2) + "\n";
    } else {
        curve = "N,a,theta,dS2_exact\n";
        summary = "N,a,theta_max,theta_c,peak,not_unimodal\n";
        for (const auto &s : scans) {
            for (size_t k = 0; k < s.thetas.size(); k++) {
                curve += fmt::format("{},{},{},{}\n", s.num_qubits, s.subsystem_size, format_double(s.thetas[k]),
                                     format_double(s.curve[k]));
            }
            summary += fmt::format("{},{},{},{},{},{}\n", s.num_qubits, s.subsystem_size, format_double(s.theta_max),
                                   format_double(s.theta_c), format_double(s.peak), s.not_unimodal ? 1 : 0);
        }
    }
    write_output(o.out, curve);
    if (!summary_path.empty()) {
        write_output(summary_path, summary.empty() ? curve : summary);
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Symmetry restoration in random circuits: simulator and late-time oracle"};
    app.set_config("--config", "", "TOML/INI file with option values; command-line flags take precedence");
    app.require_subcommand(1);

    CircuitArgs dyn;
    std::string dump_path;
    auto *dynamics = app.add_subcommand("dynamics", "Ensemble-averaged asymmetry versus time");
    add_circuit_options(dynamics, dyn);
    dynamics->add_option("--dump-rdm", dump_path, "Write reduced and pruned density matrices of realization 0");

    CircuitArgs late;
    late.renyi2 = true;
    std::vector<std::string> late_sizes;
    std::vector<std::string> late_thetas;
    bool late_check = false;
    auto *latetime = app.add_subcommand("latetime", "Late-time asymmetry sweep with oracle comparison");
    add_circuit_options(latetime, late);
    latetime->add_option("--sizes", late_sizes, "Subsystem sizes (first a qubits), e.g. 1..11 or 2,3,4")
        ->delimiter(',');
    latetime->add_option("--thetas", late_thetas, "Tilt angles, e.g. 0.1pi,0.3pi")->delimiter(',');
    latetime->add_flag("--check-convergence", late_check, "Also run at twice the depth and flag differences > 1 stderr");

    long oracle_n = 16;
    std::vector<std::string> oracle_sizes;
    std::vector<std::string> oracle_thetas;
    OutputArgs oracle_out;
    auto *oracle_cmd = app.add_subcommand("oracle", "Exact and Gaussian late-time Renyi-2 asymmetry (U(1))");
    oracle_cmd->add_option("--n", oracle_n, "Number of qubits")->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--sizes,--a", oracle_sizes, "Subsystem sizes (default 0..N)")->delimiter(',');
    oracle_cmd->add_option("--theta,--thetas", oracle_thetas, "Tilt angles (default 0.5pi)")->delimiter(',');
    add_output_options(oracle_cmd, oracle_out.out, oracle_out.format);

    std::vector<long> scan_ns{16, 24, 36, 52, 76, 100};
    double scan_fraction = 0.25;
    std::string scan_step = "0.002pi";
    std::string scan_hi = "0.5pi";
    std::string scan_summary;
    OutputArgs scan_out;
    auto *scan = app.add_subcommand("scan-theta", "Locate the asymmetry peak theta_max and theta_c = 2 theta_max");
    scan->add_option("--n", scan_ns, "System sizes")->delimiter(',');
    scan->add_option("--a-fraction", scan_fraction, "Subsystem fraction |A|/N");
    scan->add_option("--step", scan_step, "Grid spacing (at most 0.002pi)");
    scan->add_option("--max-theta", scan_hi, "Largest grid angle");
    scan->add_option("--summary-out", scan_summary, "Write per-N theta_max / theta_c table here");
    add_output_options(scan, scan_out.out, scan_out.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        if (*dynamics) {
            return run_dynamics(dyn, dump_path);
        }
        if (*latetime) {
            return run_latetime(late, late_sizes, late_thetas, late_check);
        }
        if (*oracle_cmd) {
            return run_oracle(oracle_n, oracle_sizes, oracle_thetas, oracle_out);
        }
        if (*scan) {
            return run_scan(scan_ns, scan_fraction, scan_step, scan_hi, scan_out, scan_summary);
        }
    } catch (const std::length_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
