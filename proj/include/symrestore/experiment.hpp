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


#ifndef SYMRESTORE_EXPERIMENT_HPP
#define SYMRESTORE_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symrestore/circuit.hpp"
#include "symrestore/initial_states.hpp"
#include "symrestore/io.hpp"

namespace symrestore {

/// Parses an angle: plain radians ("0.628") or a multiple of pi ("0.2pi", "pi", "pi/4").
double parse_angle(std::string_view text);

/// Parses "b..e" (qubits b..e-1) or a comma list "0,2,5".
SubsystemSpec parse_subsystem(std::string_view text, size_t num_qubits);

inline constexpr uint64_t kDefaultMemoryLimitBytes = uint64_t{4} << 30;
inline constexpr size_t kDefaultWorkers = 8;

struct ExperimentConfig {
    CircuitConfig circuit;
    InitialStateSpec initial;
    /// Random-tilt kinds redraw tilts per realization unless frozen.
    bool freeze_tilts = false;
    SubsystemSpec subsystem;
    size_t realizations = 1;
    /// Empty means every step 0..depth.
    std::vector<size_t> times;
    MeasurementKind measurement = MeasurementKind::Renyi2;
    /// Defaults to default_measured_symmetry(circuit.symmetry).
    std::optional<GateSymmetry> measured_symmetry;
    size_t workers = kDefaultWorkers;
    uint64_t memory_limit_bytes = kDefaultMemoryLimitBytes;

    void validate() const;
    std::vector<size_t> observation_times() const;
    GateSymmetry effective_measured_symmetry() const;
};

/// Peak bytes: the shared initial state (16 B x 2^N) plus, per worker, the
/// evolving state and the partial-trace reshape (2 x 16 B x 2^N) and three
/// |A|-site matrices (3 x 16 B x 4^|A|).
uint64_t estimate_memory_bytes(const ExperimentConfig &config);

/// Throws std::length_error when the estimate exceeds the configured bound.
void check_memory(const ExperimentConfig &config);

/// Initial state of realization k.
PureState initial_state_for(const ExperimentConfig &config, uint64_t realization);

struct SummaryRow {
    size_t t = 0;
    double mean_ds = 0.0;
    /// Sample standard deviation / sqrt(shots); 0 for a single shot.
    double stderr_ds = 0.0;
    size_t n_shots = 0;
    double mean_purity_a = 0.0;
    double mean_purity_aq = 0.0;
};

struct EnsembleSummary {
    size_t num_qubits = 0;
    size_t subsystem_size = 0;
    double theta = 0.0;
    std::string symmetry;
    std::string mode;
    std::string init;
    uint64_t seed = 0;
    std::vector<SummaryRow> rows;
};

struct MeanStderr {
    double mean = 0.0;
    double stderr_mean = 0.0;
};

/// Pairwise-summed mean and standard error.
MeanStderr mean_and_stderr(const std::vector<double> &values);

/// Runs all realizations on a bounded worker pool. Per-realization results are
/// reduced in realization order, so the output does not depend on the worker count.
EnsembleSummary run_ensemble(const ExperimentConfig &config);

/// Same ensemble, also returning every trajectory (indexed by realization).
EnsembleSummary run_ensemble(const ExperimentConfig &config, std::vector<std::vector<Observation>> *trajectories);

/// Reduced and pruned density matrices of realization 0 at every observation time.
RdmDump dump_realization(const ExperimentConfig &config, uint64_t realization = 0);

struct LatetimeRow {
    SummaryRow summary;
    size_t subsystem_size = 0;
    double theta = 0.0;
    /// Late-time Renyi-2 prediction; NaN when the symmetry has no oracle.
    double oracle_ds2 = 0.0;
    /// Initial-state asymmetry of the same subsystem (ensemble mean).
    double initial_ds = 0.0;
    /// Mean at twice the depth, when the convergence check ran.
    std::optional<MeanStderr> doubled;
    bool converged = true;
};

struct LatetimeSweep {
    ExperimentConfig base;
    /// Defaults to {base.subsystem.size()}. Subsystems are the first a qubits.
    std::vector<size_t> subsystem_sizes;
    /// Defaults to {base.initial.theta}.
    std::vector<double> thetas;
    bool check_convergence = false;
};

/// Late-time depth when none is configured: 4N.
size_t default_late_depth(size_t num_qubits);

std::vector<LatetimeRow> run_latetime_sweep(const LatetimeSweep &sweep);

enum class OutputFormat { Csv, Json };
OutputFormat parse_output_format(std::string_view name);

inline constexpr std::string_view kSummaryHeader = "t,mean_dS,stderr,n_shots,N,a,theta,symmetry,mode,init,seed";
inline constexpr std::string_view kOracleHeader = "N,a,theta,purity_A,purity_AQ,dS2_exact,dS2_gaussian,gaussian_valid";

/// 17 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_double(double v);

std::string emit_summary(const EnsembleSummary &summary, OutputFormat format);
std::string emit_latetime(const EnsembleSummary &meta, const std::vector<LatetimeRow> &rows, OutputFormat format);

struct OracleRow {
    long num_qubits = 0;
    long subsystem_size = 0;
    double theta = 0.0;
    double purity_a = 0.0;
    double purity_aq = 0.0;
    double ds2_exact = 0.0;
    /// NaN outside 0 < theta < pi.
    double ds2_gaussian = 0.0;
    bool gaussian_valid = false;
};

OracleRow oracle_row(long num_qubits, long subsystem_size, double theta);
std::string emit_oracle(const std::vector<OracleRow> &rows, OutputFormat format);

/// Writes `content` to `path`, or to stdout for "" or "-"; errors carry the path.
void write_output(const std::string &path, const std::string &content);

}  // namespace symrestore

#endif
