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

#ifndef SYMRESTORE_ASYMMETRY_HPP
#define SYMRESTORE_ASYMMETRY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symrestore/gates.hpp"
#include "symrestore/quantum_core.hpp"

namespace symrestore {

/// One symmetry sector of a subsystem: a label and the indices it occupies in
/// the sector basis (the computational basis rotated by the basis change).
struct Sector {
    std::string label;
    std::vector<size_t> indices;
};

/// Orthogonal sector decomposition of the 2^|A|-dimensional subsystem space.
///
/// When `basis_change()` is present its rows are the sector basis vectors in
/// computational coordinates, so rho' = U0 rho U0^dagger is block diagonal
/// exactly when rho commutes with every projector. For U(1) and the trivial
/// decomposition the sector basis is the computational basis.
class SectorDecomposition {
   public:
    SectorDecomposition(GateSymmetry symmetry, size_t num_qubits, std::optional<ComplexMatrix> basis_change,
                        std::vector<Sector> sectors);

    GateSymmetry symmetry() const {
        return symmetry_;
    }
    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t dim() const {
        return size_t{1} << num_qubits_;
    }
    const std::optional<ComplexMatrix> &basis_change() const {
        return basis_change_;
    }
    const std::vector<Sector> &sectors() const {
        return sectors_;
    }
    /// Sector id of each sector-basis index.
    const std::vector<size_t> &sector_of() const {
        return sector_of_;
    }
    std::vector<size_t> sector_dims() const;

    /// Pi_k in the computational basis.
    ComplexMatrix projector(size_t k) const;

    /// U0 rho U0^dagger (a copy of rho when there is no basis change).
    ComplexMatrix to_sector_basis(const ComplexMatrix &rho) const;
    ComplexMatrix from_sector_basis(const ComplexMatrix &rho) const;

   private:
    GateSymmetry symmetry_;
    size_t num_qubits_;
    std::optional<ComplexMatrix> basis_change_;
    std::vector<Sector> sectors_;
    std::vector<size_t> sector_of_;
};

/// Charge sectors q = popcount, q = 0..|A|.
SectorDecomposition u1_sectors(size_t num_qubits);

/// +1 and -1 eigenspaces of prod_i X_i, spanned by |+/->-strings with an even
/// (odd) number of |->.
SectorDecomposition z2_sectors(size_t num_qubits);

/// (J, J_z) sectors from sequential left-to-right Clebsch-Gordan coupling.
/// Multiplicity copies of the same (J, J_z) share one sector.
SectorDecomposition su2_sectors(size_t num_qubits);

/// A single sector holding the whole space; pruning is the identity.
SectorDecomposition trivial_sectors(size_t num_qubits);

SectorDecomposition sectors_for(GateSymmetry symmetry, size_t num_qubits);

/// Asymmetry measured for a circuit of the given gate symmetry: U(1) charge for
/// none and u1 circuits, otherwise the circuit's own symmetry.
GateSymmetry default_measured_symmetry(GateSymmetry circuit_symmetry);

/// One sequentially coupled SU(2) basis state.
struct CoupledSpinState {
    int two_j = 0;
    int two_m = 0;
    /// Coupling history: 2J after each added spin.
    std::vector<int> path;
    /// Real coefficients in the computational basis (qubit 0 = MSB, |0> = up).
    Eigen::VectorXd amplitudes;
};

/// All 2^n coupled states, ordered by J descending, then path, then J_z ascending.
std::vector<CoupledSpinState> coupled_spin_basis(size_t num_qubits);

/// Multiplicity of each total spin (keyed by 2J) for n spin-1/2 particles.
std::map<int, size_t> su2_multiplicities(size_t num_qubits);

/// rho_{A,Q} = sum_k Pi_k rho Pi_k, returned in the computational basis.
DensityMatrix prune(const DensityMatrix &rho, const SectorDecomposition &sectors);

enum class EntropyKind { VonNeumann, Renyi2 };

struct AsymmetryResult {
    double delta = 0.0;
    double entropy_pruned = 0.0;
    double entropy_original = 0.0;
    double purity_original = 0.0;
    double purity_pruned = 0.0;
};

/// Entanglement asymmetry S(rho_{A,Q}) - S(rho_A). Both entropies are
/// evaluated in the sector basis, with the pruned spectrum obtained block by
/// block, so an exactly block-diagonal input gives exactly zero. The Renyi-2
/// variant is ln[Tr rho^2 / Tr rho_{A,Q}^2].
AsymmetryResult asymmetry(const DensityMatrix &rho, const SectorDecomposition &sectors, EntropyKind kind);

/// Frobenius norm of the entries of rho that pruning removes.
double off_block_norm(const DensityMatrix &rho, const SectorDecomposition &sectors);

}  // namespace symrestore

#endif
