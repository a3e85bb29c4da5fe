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

#ifndef SYMRESTORE_GATES_HPP
#define SYMRESTORE_GATES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "symrestore/quantum_core.hpp"
#include "symrestore/random.hpp"

namespace symrestore {

enum class GateSymmetry { None, U1, Z2, SU2 };

/// "none", "u1", "z2", "su2".
std::string_view to_string(GateSymmetry symmetry);
/// Inverse of to_string; throws std::invalid_argument on unknown names.
GateSymmetry parse_gate_symmetry(std::string_view name);

struct TwoQubitGate {
    Matrix4c matrix;
    GateSymmetry symmetry = GateSymmetry::None;

    bool operator==(const TwoQubitGate &other) const {
        return symmetry == other.symmetry && matrix == other.matrix;
    }
};

/// Haar-distributed unitary: complex Ginibre matrix, Householder QR, and the
/// columns of Q rescaled by the phases of diag(R).
ComplexMatrix sample_haar_unitary(size_t dim, RandomSource &rng);

/// Block diagonal in the charge basis: phase on |00>, 2x2 Haar block on
/// {|01>, |10>}, phase on |11>.
TwoQubitGate sample_u1_gate(RandomSource &rng);

/// T^dagger diag(U_{+1}, U_{-1}) T with independent 2x2 Haar blocks.
TwoQubitGate sample_z2_gate(RandomSource &rng);

/// e^{i phi_s} P_singlet + e^{i phi_t} P_triplet, phases uniform on [0, 2pi).
TwoQubitGate sample_su2_gate(RandomSource &rng);

TwoQubitGate sample_haar_gate(RandomSource &rng);

/// Dispatches on `symmetry`.
TwoQubitGate sample_gate(GateSymmetry symmetry, RandomSource &rng);

/// Basis change from the X(x)X eigenbasis to the computational basis; the
/// first two rows span the +1 eigenspace.
const Matrix4c &z2_transform();

Matrix4c z2_gate_from_blocks(const Eigen::Matrix2cd &plus_block, const Eigen::Matrix2cd &minus_block);
Matrix4c su2_gate_from_phases(double singlet_phase, double triplet_phase);

/// Symmetry generators of a declared symmetry on two qubits (empty for None).
std::vector<Matrix4c> symmetry_generators(GateSymmetry symmetry);

struct SymmetryCheck {
    bool ok = false;
    /// Largest of the commutator norms and the unitarity violation.
    double max_violation = 0.0;
};

SymmetryCheck verify_symmetry(const TwoQubitGate &gate, double tolerance = 1e-10);

}  // namespace symrestore

#endif
