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


#include "symrestore/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "json.hpp"
#include "symrestore/oracle.hpp"

namespace symrestore {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_number(std::string_view s, std::string_view context) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("cannot parse '" + std::string(s) + "' in " + std::string(context));
    }
    return v;
}

size_t parse_index(std::string_view s, std::string_view context) {
    s = trim(s);
    size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("cannot parse '" + std::string(s) + "' in " + std::string(context));
    }
    return v;
}

double pairwise_sum(const double *v, size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (size_t i = 0; i < n; i++) {
            s += v[i];
        }
        return s;
    }
    size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

double pairwise_mean(const std::vector<double> &v) {
    return pairwise_sum(v.data(), v.size()) / static_cast<double>(v.size());
}

uint64_t tilt_seed_for(const ExperimentConfig &config, uint64_t realization) {
    if (config.freeze_tilts) {
        return config.initial.tilt_seed;
    }
    return RandomSource(config.initial.tilt_seed).split(realization).next_u64();
}

bool is_random_kind(InitialKind k) {
    return k == InitialKind::RandomTiltFerro || k == InitialKind::RandomTiltNeel;
}

TrajectoryObserver make_observer(const ExperimentConfig &config) {
    return TrajectoryObserver(config.observation_times(), config.subsystem, config.measurement,
                              config.effective_measured_symmetry());
}

template <typename Task>
void run_pool(size_t count, size_t workers, const Task &task) {
    std::vector<std::exception_ptr> errors(count);
    std::atomic<size_t> next{0};
    auto body = [&]() {
        for (size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) {
            try {
                task(k);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    size_t n = std::max<size_t>(1, std::min(workers, count));
    if (n == 1) {
        body();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (size_t w = 0; w < n; w++) {
            pool.emplace_back(body);
        }
    }
    // Lowest failing realization wins so the reported error is reproducible.
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

EnsembleSummary summary_metadata(const ExperimentConfig &config) {
    EnsembleSummary s;
    s.num_qubits = config.circuit.num_qubits;
    s.subsystem_size = config.subsystem.size();
    s.theta = config.initial.theta;
    s.symmetry = std::string(to_string(config.circuit.symmetry));
    s.mode = std::string(to_string(config.circuit.mode));
    s.init = std::string(to_string(config.initial.kind));
    s.seed = config.circuit.master_seed;
    return s;
}

// Late-time Renyi-2 oracle for the measured symmetry, averaged over tilt disorder.
double oracle_for(const ExperimentConfig &config) {
    GateSymmetry measured = config.effective_measured_symmetry();
    if (measured != GateSymmetry::U1) {
        return kNaN;
    }
    long n = static_cast<long>(config.circuit.num_qubits);
    long a = static_cast<long>(config.subsystem.size());
    if (config.circuit.symmetry == GateSymmetry::None) {
        return oracle::nonsym_late_asymmetry(n, a).exact;
    }
    if (config.circuit.symmetry != GateSymmetry::U1) {
        return kNaN;
    }
    oracle::U1SecondMoment moment(n, a);
    size_t draws = is_random_kind(config.initial.kind) && !config.freeze_tilts ? config.realizations : 1;
    std::vector<double> pa(draws);
    std::vector<double> paq(draws);
    std::vector<double> excess(draws);
    for (size_t k = 0; k < draws; k++) {
        auto w = charge_weights(initial_state_for(config, k));
        double total = 0.0;
        for (double x : w) {
            total += x;
        }
        for (double &x : w) {
            x /= total;
        }
        auto p = moment.purities(w);
        pa[k] = p.purity_a;
        paq[k] = p.purity_aq;
        excess[k] = p.excess;
    }
    return oracle::PurityPair{pairwise_mean(pa), pairwise_mean(paq), pairwise_mean(excess)}.renyi2_asymmetry();
}

template <typename Json>
Json summary_row_json(const EnsembleSummary &m, const SummaryRow &r, double theta, size_t a) {
    Json j;
    j["t"] = r.t;
    j["mean_dS"] = r.mean_ds;
    j["stderr"] = r.stderr_ds;
    j["n_shots"] = r.n_shots;
    j["N"] = m.num_qubits;
    j["a"] = a;
    j["theta"] = theta;
    j["symmetry"] = m.symmetry;
    j["mode"] = m.mode;
    j["init"] = m.init;
    j["seed"] = m.seed;
    return j;
}

std::string summary_row_csv(const EnsembleSummary &m, const SummaryRow &r, double theta, size_t a) {
    return fmt::format("{},{},{},{},{},{},{},{},{},{},{}", r.t, format_double(r.mean_ds), format_double(r.stderr_ds),
                       r.n_shots, m.num_qubits, a, format_double(theta), m.symmetry, m.mode, m.init, m.seed);
}

// JSON has no NaN; non-finite values become null.
nlohmann::ordered_json json_number(double v) {
    if (std::isfinite(v)) {
        return v;
    }
    return nullptr;
}

}  // namespace

double parse_angle(std::string_view text) {
    std::string_view s = trim(text);
    auto pos = s.find("pi");
    if (pos == std::string_view::npos) {
        return parse_number(s, "angle");
    }
    std::string_view coef = trim(s.substr(0, pos));
    std::string_view rest = trim(s.substr(pos + 2));
    double c = 1.0;
    if (coef == "-") {
        c = -1.0;
    } else if (!coef.empty()) {
        if (coef.back() == '*') {
            coef = trim(coef.substr(0, coef.size() - 1));
        }
        c = parse_number(coef, "angle '" + std::string(text) + "'");
    }
    double den = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw std::invalid_argument("cannot parse angle '" + std::string(text) + "'");
        }
        den = parse_number(trim(rest.substr(1)), "angle '" + std::string(text) + "'");
        if (den == 0.0) {
            throw std::invalid_argument("zero denominator in angle '" + std::string(text) + "'");
        }
    }
    return c * std::numbers::pi / den;
}

SubsystemSpec parse_subsystem(std::string_view text, size_t num_qubits) {
    std::string_view s = trim(text);
    if (auto pos = s.find(".."); pos != std::string_view::npos) {
        size_t b = parse_index(s.substr(0, pos), "subsystem range");
        size_t e = parse_index(s.substr(pos + 2), "subsystem range");
        if (e <= b) {
            throw std::invalid_argument("empty subsystem range '" + std::string(text) + "'");
        }
        return SubsystemSpec::range(b, e, num_qubits);
    }
    std::vector<size_t> qubits;
    while (!s.empty()) {
        auto comma = s.find(',');
        qubits.push_back(parse_index(s.substr(0, comma), "subsystem list"));
        s = comma == std::string_view::npos ? std::string_view{} : s.substr(comma + 1);
    }
    return SubsystemSpec(std::move(qubits), num_qubits);
}

void ExperimentConfig::validate() const {
    circuit.validate();
    symrestore::validate(initial);
    if (realizations < 1) {
        throw std::invalid_argument("realizations must be >= 1");
    }
    if (workers < 1) {
        throw std::invalid_argument("workers must be >= 1");
    }
    if (subsystem.empty() || subsystem.num_qubits() != circuit.num_qubits) {
        throw std::invalid_argument("subsystem must be a non-empty subset of the " +
                                    std::to_string(circuit.num_qubits) + " circuit qubits");
    }
    for (size_t t : times) {
        if (t > circuit.depth) {
            throw std::out_of_range("observation time " + std::to_string(t) + " beyond depth " +
                                    std::to_string(circuit.depth));
        }
    }
}

std::vector<size_t> ExperimentConfig::observation_times() const {
    if (!times.empty()) {
        return times;
    }
    std::vector<size_t> all(circuit.depth + 1);
    for (size_t t = 0; t <= circuit.depth; t++) {
        all[t] = t;
    }
    return all;
}

GateSymmetry ExperimentConfig::effective_measured_symmetry() const {
    return measured_symmetry.value_or(default_measured_symmetry(circuit.symmetry));
}

uint64_t estimate_memory_bytes(const ExperimentConfig &config) {
    const double amp = 16.0;
    double n = static_cast<double>(config.circuit.num_qubits);
    double a = static_cast<double>(config.subsystem.size());
    double workers = static_cast<double>(std::max<size_t>(1, std::min(config.workers, config.realizations)));
    double bytes = amp * std::exp2(n) + workers * (2.0 * amp * std::exp2(n) + 3.0 * amp * std::exp2(2.0 * a));
    return bytes >= 1.8e19 ? std::numeric_limits<uint64_t>::max() : static_cast<uint64_t>(bytes);
}

void check_memory(const ExperimentConfig &config) {
    uint64_t need = estimate_memory_bytes(config);
    if (need > config.memory_limit_bytes) {
        throw std::length_error(fmt::format(
            "refusing N={} |A|={} with {} workers: estimated {:.3f} GiB exceeds the {:.3f} GiB memory bound",
            config.circuit.num_qubits, config.subsystem.size(), config.workers,
            static_cast<double>(need) / double(1ull << 30),
            static_cast<double>(config.memory_limit_bytes) / double(1ull << 30)));
    }
}

PureState initial_state_for(const ExperimentConfig &config, uint64_t realization) {
    InitialStateSpec spec = config.initial;
    if (is_random_kind(spec.kind)) {
        spec.tilt_seed = tilt_seed_for(config, realization);
    }
    return build_initial_state(spec, config.circuit.num_qubits);
}

MeanStderr mean_and_stderr(const std::vector<double> &values) {
    if (values.empty()) {
        throw std::invalid_argument("mean of an empty sample");
    }
    MeanStderr out;
    out.mean = pairwise_mean(values);
    if (values.size() > 1) {
        std::vector<double> sq(values.size());
        for (size_t i = 0; i < values.size(); i++) {
            double d = values[i] - out.mean;
            sq[i] = d * d;
        }
        double var = pairwise_sum(sq.data(), sq.size()) / static_cast<double>(values.size() - 1);
        out.stderr_mean = std::sqrt(var / static_cast<double>(values.size()));
    }
    return out;
}

EnsembleSummary run_ensemble(const ExperimentConfig &config) {
    return run_ensemble(config, nullptr);
}

EnsembleSummary run_ensemble(const ExperimentConfig &config, std::vector<std::vector<Observation>> *trajectories) {
    config.validate();
    check_memory(config);
    TrajectoryObserver observer = make_observer(config);
    std::optional<PureState> shared_initial;
    if (!is_random_kind(config.initial.kind)) {
        shared_initial = initial_state_for(config, 0);
    }

    std::vector<std::vector<Observation>> results(config.realizations);
    run_pool(config.realizations, config.workers, [&](size_t k) {
        if (shared_initial) {
            results[k] = evolve(*shared_initial, config.circuit, observer, k);
        } else {
            results[k] = evolve(initial_state_for(config, k), config.circuit, observer, k);
        }
    });

    EnsembleSummary summary = summary_metadata(config);
    const auto &times = observer.times();
    std::vector<double> ds(config.realizations);
    std::vector<double> pa(config.realizations);
    std::vector<double> paq(config.realizations);
    for (size_t i = 0; i < times.size(); i++) {
        for (size_t k = 0; k < config.realizations; k++) {
            const auto &obs = results[k][i].asymmetry;
            ds[k] = obs.delta;
            pa[k] = obs.purity_original;
            paq[k] = obs.purity_pruned;
        }
        auto ms = mean_and_stderr(ds);
        summary.rows.push_back(SummaryRow{times[i], ms.mean, ms.stderr_mean, config.realizations,
                                          pairwise_mean(pa), pairwise_mean(paq)});
    }
    if (trajectories) {
        *trajectories = std::move(results);
    }
    return summary;
}

RdmDump dump_realization(const ExperimentConfig &config, uint64_t realization) {
    ExperimentConfig c = config;
    c.measurement = MeasurementKind::DensityMatrixDump;
    c.validate();
    check_memory(c);
    TrajectoryObserver observer = make_observer(c);
    RdmDump dump = make_rdm_dump(observer.sectors());
    for (auto &obs : evolve(initial_state_for(c, realization), c.circuit, observer, realization)) {
        DensityMatrix pruned = prune(*obs.rho, observer.sectors());
        dump.records.push_back(RdmRecord{obs.t, false, obs.rho->entries()});
        dump.records.push_back(RdmRecord{obs.t, true, pruned.entries()});
    }
    return dump;
}

size_t default_late_depth(size_t num_qubits) {
    return 4 * num_qubits;
}

std::vector<LatetimeRow> run_latetime_sweep(const LatetimeSweep &sweep) {
    std::vector<size_t> sizes = sweep.subsystem_sizes;
    if (sizes.empty()) {
        sizes.push_back(sweep.base.subsystem.size());
    }
    std::vector<double> thetas = sweep.thetas;
    if (thetas.empty()) {
        thetas.push_back(sweep.base.initial.theta);
    }
    const size_t n = sweep.base.circuit.num_qubits;
    std::vector<LatetimeRow> rows;
    for (size_t a : sizes) {
        if (a < 1 || a > n) {
            throw std::invalid_argument("sweep subsystem size " + std::to_string(a) + " outside [1, N]");
        }
        for (double theta : thetas) {
            ExperimentConfig c = sweep.base;
            c.subsystem = SubsystemSpec::range(0, a, n);
            c.initial.theta = theta;
            c.times = {0, c.circuit.depth};
            if (c.circuit.depth == 0) {
                c.times = {0};
            }
            EnsembleSummary s = run_ensemble(c);
            LatetimeRow row;
            row.summary = s.rows.back();
            row.subsystem_size = a;
            row.theta = theta;
            row.initial_ds = s.rows.front().mean_ds;
            row.oracle_ds2 = oracle_for(c);
            if (sweep.check_convergence) {
                ExperimentConfig d = c;
                d.circuit.depth = 2 * c.circuit.depth;
                d.times = {d.circuit.depth};
                auto s2 = run_ensemble(d);
                MeanStderr m2{s2.rows.back().mean_ds, s2.rows.back().stderr_ds};
                row.doubled = m2;
                double band = std::hypot(row.summary.stderr_ds, m2.stderr_mean);
                row.converged = std::abs(m2.mean - row.summary.mean_ds) <= band;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

OutputFormat parse_output_format(std::string_view name) {
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    throw std::invalid_argument("unknown output format '" + std::string(name) + "' (expected csv|json)");
}

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return fmt::format("{:.17g}", v);
}

std::string emit_summary(const EnsembleSummary &summary, OutputFormat format) {
    if (format == OutputFormat::Json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto &r : summary.rows) {
            arr.push_back(summary_row_json<nlohmann::ordered_json>(summary, r, summary.theta, summary.subsystem_size));
        }
        return arr.dump(2) + "\n";
    }
    std::string out(kSummaryHeader);
    out += "\n";
    for (const auto &r : summary.rows) {
        out += summary_row_csv(summary, r, summary.theta, summary.subsystem_size);
        out += "\n";
    }
    return out;
}

std::string emit_latetime(const EnsembleSummary &meta, const std::vector<LatetimeRow> &rows, OutputFormat format) {
    if (format == OutputFormat::Json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto &r : rows) {
            auto j = summary_row_json<nlohmann::ordered_json>(meta, r.summary, r.theta, r.subsystem_size);
            j["oracle_dS2"] = json_number(r.oracle_ds2);
            j["initial_dS"] = r.initial_ds;
            j["mean_dS_2x"] = r.doubled ? json_number(r.doubled->mean) : nullptr;
            j["stderr_2x"] = r.doubled ? json_number(r.doubled->stderr_mean) : nullptr;
            j["converged"] = r.converged;
            arr.push_back(std::move(j));
        }
        return arr.dump(2) + "\n";
    }
    std::string out(kSummaryHeader);
    out += ",oracle_dS2,initial_dS,mean_dS_2x,stderr_2x,converged\n";
    for (const auto &r : rows) {
        out += summary_row_csv(meta, r.summary, r.theta, r.subsystem_size);
        out += fmt::format(",{},{},{},{},{}\n", format_double(r.oracle_ds2), format_double(r.initial_ds),
                           format_double(r.doubled ? r.doubled->mean : kNaN),
                           format_double(r.doubled ? r.doubled->stderr_mean : kNaN), r.converged ? 1 : 0);
    }
    return out;
}

OracleRow oracle_row(long num_qubits, long subsystem_size, double theta) {
    OracleRow r;
    r.num_qubits = num_qubits;
    r.subsystem_size = subsystem_size;
    r.theta = theta;
    oracle::LateTimeQuery q{num_qubits, subsystem_size, theta, {}};
    auto p = oracle::u1_late_purities(q);
    r.purity_a = p.purity_a;
    r.purity_aq = p.purity_aq;
    r.ds2_exact = p.renyi2_asymmetry();
    if (theta > 0.0 && theta < std::numbers::pi) {
        auto g = oracle::u1_late_asymmetry_gaussian(num_qubits, subsystem_size, theta);
        r.ds2_gaussian = g.value;
        r.gaussian_valid = g.valid;
    } else {
        r.ds2_gaussian = kNaN;
        r.gaussian_valid = false;
    }
    return r;
}

std::string emit_oracle(const std::vector<OracleRow> &rows, OutputFormat format) {
    if (format == OutputFormat::Json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto &r : rows) {
            nlohmann::ordered_json j;
            j["N"] = r.num_qubits;
            j["a"] = r.subsystem_size;
            j["theta"] = r.theta;
            j["purity_A"] = r.purity_a;
            j["purity_AQ"] = r.purity_aq;
            j["dS2_exact"] = r.ds2_exact;
            j["dS2_gaussian"] = json_number(r.ds2_gaussian);
            j["gaussian_valid"] = r.gaussian_valid;
            arr.push_back(std::move(j));
        }
        return arr.dump(2) + "\n";
    }
    std::string out(kOracleHeader);
    out += "\n";
    for (const auto &r : rows) {
        out += fmt::format("{},{},{},{},{},{},{},{}\n", r.num_qubits, r.subsystem_size, format_double(r.theta),
                           format_double(r.purity_a), format_double(r.purity_aq), format_double(r.ds2_exact),
                           format_double(r.ds2_gaussian), r.gaussian_valid ? 1 : 0);
    }
    return out;
}

void write_output(const std::string &path, const std::string &content) {
    if (path.empty() || path == "-") {
        std::cout << content << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

}  // namespace symrestore
