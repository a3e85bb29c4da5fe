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

#ifndef SYMRESTORE_INITIAL_STATES_HPP
#define SYMRESTORE_INITIAL_STATES_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "symrestore/quantum_core.hpp"
#include "symrestore/random.hpp"

namespace symrestore {

enum class InitialKind {
    Ferro,
    Neel,
    DomainWall,
    RandomTiltFerro,
    RandomTiltNeel,
    Ghz,
    StaggeredFerro,
};

/// CLI names: ferro, neel, domain-wall, random-ferro, random-neel, ghz,
/// staggered-ferro.
std::string_view to_string(InitialKind kind);
InitialKind parse_initial_kind(std::string_view name);

struct InitialStateSpec {
    InitialKind kind = InitialKind::Ferro;
    /// Uniform tilt angle in radians, [0, pi]. Ignored by the random kinds.
    double theta = 0.0;
    /// Random kinds draw each site's tilt uniformly from [-tilt_width, tilt_width].
    double tilt_width = 0.0;
    /// Seed for the per-site tilt draws of the random kinds.
    uint64_t tilt_seed = 0;
};

/// Throws std::invalid_argument when theta or tilt_width are out of range.
void validate(const InitialStateSpec &spec);

/// Single-site rotation used for all tilts: |0> -> cos(t/2)|0> - sin(t/2)|1>,
/// |1> -> sin(t/2)|0> + cos(t/2)|1>.
Eigen::Matrix2d tilt_rotation(double angle);

/// Bit pattern (before tilting) of the product kinds; site j is bit j.
std::vector<int> reference_bits(InitialKind kind, size_t num_qubits);

/// Per-site tilt angles for `spec`; the random kinds draw from `spec.tilt_seed`.
std::vector<double> site_tilts(const InitialStateSpec &spec, size_t num_qubits);

PureState build_initial_state(const InitialStateSpec &spec, size_t num_qubits);

/// Product state prod_j R(angles[j]) |bits[j]>.
PureState tilted_product_state(const std::vector<int> &bits, const std::vector<double> &angles);

/// w_q = Tr(rho_0 Pi_q) by binning |amplitude|^2 on popcount, q = 0..N.
std::vector<double> charge_weights(const PureState &state);

/// Closed form for the tilted ferromagnet: C(N,q) cos^{2(N-q)}(t/2) sin^{2q}(t/2).
std::vector<double> ferro_charge_weights(size_t num_qubits, double theta);

}  // namespace symrestore

#endif
