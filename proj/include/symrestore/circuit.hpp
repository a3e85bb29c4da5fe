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


#ifndef SYMRESTORE_CIRCUIT_HPP
#define SYMRESTORE_CIRCUIT_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "symrestore/asymmetry.hpp"
#include "symrestore/gates.hpp"
#include "symrestore/quantum_core.hpp"

namespace symrestore {

/// Which gate draws are shared. CLI names: iid, t, f, ft.
enum class TranslationMode {
    Iid,             // every gate fresh
    Spatial,         // one gate per layer, reused across positions
    Floquet,         // gates drawn for step 0 and repeated every step
    SpatioTemporal,  // one gate per layer, reused across positions and steps
};

std::string_view to_string(TranslationMode mode);
TranslationMode parse_translation_mode(std::string_view name);

struct CircuitConfig {
    size_t num_qubits = 0;
    /// Number of steps; one step is an even-bond layer followed by an odd-bond layer.
    size_t depth = 0;
    GateSymmetry symmetry = GateSymmetry::None;
    TranslationMode mode = TranslationMode::Iid;
    uint64_t master_seed = 0;

    /// Throws std::invalid_argument unless N is even and >= 2.
    void validate() const;
};

struct GatePlacement {
    TwoQubitGate gate;
    size_t i = 0;
    size_t j = 0;
    /// 0 for the even-bond layer, 1 for the odd-bond layer.
    size_t layer = 0;
};

/// Gates of step `t` for realization `realization`, in application order.
///
/// Draws come from RandomSource(master_seed).split(realization).split(t').split(layer).split(s'),
/// where t' is 0 for the Floquet kinds and s' (the placement index) is 0 for the
/// spatial kinds.
std::vector<GatePlacement> build_step_gates(const CircuitConfig &config, size_t t, uint64_t realization = 0);

/// Applies steps 0..depth-1 in place; `on_time(t, state)` runs before step t and
/// once more at t = depth.
void evolve_state(PureState &state, const CircuitConfig &config, uint64_t realization,
                  const std::function<void(size_t, const PureState &)> &on_time);

enum class MeasurementKind {
    VonNeumann,
    Renyi2,
    /// Renyi-2 asymmetry plus both purities.
    PurityPair,
    /// Everything Renyi2 reports plus the reduced density matrix itself.
    DensityMatrixDump,
};

std::string_view to_string(MeasurementKind kind);

class TrajectoryObserver {
   public:
    /// `times` must be sorted and unique.
    TrajectoryObserver(std::vector<size_t> times, SubsystemSpec subsystem, MeasurementKind kind,
                       GateSymmetry measured_symmetry);

    const std::vector<size_t> &times() const {
        return times_;
    }
    const SubsystemSpec &subsystem() const {
        return subsystem_;
    }
    MeasurementKind kind() const {
        return kind_;
    }
    const SectorDecomposition &sectors() const {
        return *sectors_;
    }

   private:
    std::vector<size_t> times_;
    SubsystemSpec subsystem_;
    MeasurementKind kind_;
    std::shared_ptr<const SectorDecomposition> sectors_;
};

struct Observation {
    size_t t = 0;
    AsymmetryResult asymmetry;
    std::optional<DensityMatrix> rho;
};

/// Evolves a copy of `initial` and measures at every observer time, in time order.
std::vector<Observation> evolve(const PureState &initial, const CircuitConfig &config,
                                const TrajectoryObserver &observer, uint64_t realization = 0);

/// Measurement of one state, exactly as `evolve` performs it.
Observation observe(const PureState &state, size_t t, const TrajectoryObserver &observer);

}  // namespace symrestore

#endif
