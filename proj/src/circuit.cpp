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


#include "symrestore/circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace symrestore {

namespace {

constexpr std::pair<TranslationMode, std::string_view> kModeNames[] = {
    {TranslationMode::Iid, "iid"},
    {TranslationMode::Spatial, "t"},
    {TranslationMode::Floquet, "f"},
    {TranslationMode::SpatioTemporal, "ft"},
};

bool shares_in_time(TranslationMode m) {
    return m == TranslationMode::Floquet || m == TranslationMode::SpatioTemporal;
}

bool shares_in_space(TranslationMode m) {
    return m == TranslationMode::Spatial || m == TranslationMode::SpatioTemporal;
}

}  // namespace

std::string_view to_string(TranslationMode mode) {
    for (const auto &[m, name] : kModeNames) {
        if (m == mode) {
            return name;
        }
    }
    throw std::invalid_argument("unknown TranslationMode value");
}

TranslationMode parse_translation_mode(std::string_view name) {
    for (const auto &[m, n] : kModeNames) {
        if (n == name) {
            return m;
        }
    }
    throw std::invalid_argument("unknown translation mode '" + std::string(name) + "' (expected iid|t|f|ft)");
}

std::string_view to_string(MeasurementKind kind) {
    switch (kind) {
        case MeasurementKind::VonNeumann:
            return "vn";
        case MeasurementKind::Renyi2:
            return "renyi2";
        case MeasurementKind::PurityPair:
            return "purity";
        case MeasurementKind::DensityMatrixDump:
            return "rdm";
    }
    throw std::invalid_argument("unknown MeasurementKind value");
}

void CircuitConfig::validate() const {
    if (num_qubits < 2 || num_qubits % 2 != 0) {
        throw std::invalid_argument("circuit needs an even number of qubits >= 2, got " + std::to_string(num_qubits));
    }
}

std::vector<GatePlacement> build_step_gates(const CircuitConfig &config, size_t t, uint64_t realization) {
    config.validate();
    if (t >= config.depth) {
        throw std::out_of_range("step " + std::to_string(t) + " outside [0, " + std::to_string(config.depth) + ")");
    }
    RandomSource step_rng = RandomSource(config.master_seed)
                                .split(realization)
                                .split(shares_in_time(config.mode) ? 0 : t);
    std::vector<GatePlacement> out;
    out.reserve(config.num_qubits - 1);
    for (size_t layer = 0; layer < 2; layer++) {
        RandomSource layer_rng = step_rng.split(layer);
        size_t s = 0;
        for (size_t i = layer; i + 1 < config.num_qubits; i += 2, s++) {
            RandomSource gate_rng = layer_rng.split(shares_in_space(config.mode) ? 0 : s);
            out.push_back(GatePlacement{sample_gate(config.symmetry, gate_rng), i, i + 1, layer});
        }
    }
    return out;
}

void evolve_state(PureState &state, const CircuitConfig &config, uint64_t realization,
                  const std::function<void(size_t, const PureState &)> &on_time) {
    config.validate();
    if (state.num_qubits() != config.num_qubits) {
        throw std::invalid_argument("initial state has " + std::to_string(state.num_qubits()) +
                                    " qubits, circuit has " + std::to_string(config.num_qubits));
    }
    for (size_t t = 0; t < config.depth; t++) {
        if (on_time) {
            on_time(t, state);
        }
        for (const auto &g : build_step_gates(config, t, realization)) {
            apply_two_qubit_gate_inplace(state, g.gate.matrix, g.i, g.j);
        }
    }
    if (on_time) {
        on_time(config.depth, state);
    }
}

TrajectoryObserver::TrajectoryObserver(std::vector<size_t> times, SubsystemSpec subsystem, MeasurementKind kind,
                                       GateSymmetry measured_symmetry)
    : times_(std::move(times)), subsystem_(std::move(subsystem)), kind_(kind) {
    if (subsystem_.empty()) {
        throw std::invalid_argument("observer subsystem must not be empty");
    }
    for (size_t k = 1; k < times_.size(); k++) {
        if (times_[k] <= times_[k - 1]) {
            throw std::invalid_argument("observation times must be strictly increasing");
        }
    }
    sectors_ = std::make_shared<const SectorDecomposition>(sectors_for(measured_symmetry, subsystem_.size()));
}

Observation observe(const PureState &state, size_t t, const TrajectoryObserver &observer) {
    Observation obs;
    obs.t = t;
    DensityMatrix rho = partial_trace(state, observer.subsystem());
    EntropyKind ek = observer.kind() == MeasurementKind::VonNeumann ? EntropyKind::VonNeumann : EntropyKind::Renyi2;
    obs.asymmetry = asymmetry(rho, observer.sectors(), ek);
    if (observer.kind() == MeasurementKind::DensityMatrixDump) {
        obs.rho = std::move(rho);
    }
    return obs;
}

std::vector<Observation> evolve(const PureState &initial, const CircuitConfig &config,
                                const TrajectoryObserver &observer, uint64_t realization) {
    if (observer.subsystem().num_qubits() != config.num_qubits) {
        throw std::invalid_argument("observer subsystem was built for a different N");
    }
    if (!observer.times().empty() && observer.times().back() > config.depth) {
        throw std::out_of_range("observation time " + std::to_string(observer.times().back()) +
                                " beyond depth " + std::to_string(config.depth));
    }
    std::vector<Observation> out;
    out.reserve(observer.times().size());
    size_t next = 0;
    PureState state = initial;
    CircuitConfig truncated = config;
    // Nothing after the last observation matters.
    truncated.depth = observer.times().empty() ? 0 : observer.times().back();
    evolve_state(state, truncated, realization, [&](size_t t, const PureState &s) {
        if (next < observer.times().size() && observer.times()[next] == t) {
            out.push_back(observe(s, t, observer));
            next++;
        }
    });
    if (std::abs(state.norm_squared() - 1.0) > 1e-8) {
        throw std::runtime_error("state norm drifted to " + std::to_string(state.norm_squared()));
    }
    return out;
}

}  // namespace symrestore
