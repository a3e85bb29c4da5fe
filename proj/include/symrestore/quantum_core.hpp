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

#ifndef SYMRESTORE_QUANTUM_CORE_HPP
#define SYMRESTORE_QUANTUM_CORE_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace symrestore {

using complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Matrix4c = Eigen::Matrix<complex, 4, 4>;

/// Dense statevector over N qubits.
///
/// Amplitudes are indexed by bit string with qubit 0 as the most significant
/// bit, so qubit q of basis index b is `(b >> (N - 1 - q)) & 1`.
class PureState {
   public:
    /// |00...0> on `num_qubits` qubits.
    explicit PureState(size_t num_qubits);

    /// Takes ownership of `amplitudes`; the length must be a power of two and
    /// the norm must be 1 within 1e-10.
    static PureState from_amplitudes(std::vector<complex> amplitudes);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const complex> amplitudes() const {
        return amplitudes_;
    }
    std::span<complex> mutable_amplitudes() {
        return amplitudes_;
    }
    complex operator[](size_t basis_index) const {
        return amplitudes_[basis_index];
    }

    double norm_squared() const;

    /// Bit position (shift amount) of qubit `q` inside a basis index.
    size_t bit_shift(size_t q) const {
        return num_qubits_ - 1 - q;
    }

    bool operator==(const PureState &other) const = default;

   private:
    PureState(size_t num_qubits, std::vector<complex> amplitudes);

    size_t num_qubits_;
    std::vector<complex> amplitudes_;
};

/// Sorted set of qubit indices describing subsystem A.
class SubsystemSpec {
   public:
    SubsystemSpec() = default;
    /// Validates that `qubits` is strictly increasing and inside [0, num_qubits).
    SubsystemSpec(std::vector<size_t> qubits, size_t num_qubits);

    /// Qubits [begin, end).
    static SubsystemSpec range(size_t begin, size_t end, size_t num_qubits);

    const std::vector<size_t> &qubits() const {
        return qubits_;
    }
    size_t size() const {
        return qubits_.size();
    }
    size_t num_qubits() const {
        return num_qubits_;
    }
    bool empty() const {
        return qubits_.empty();
    }
    SubsystemSpec complement() const;

    bool operator==(const SubsystemSpec &other) const = default;

   private:
    std::vector<size_t> qubits_;
    size_t num_qubits_ = 0;
};

/// Hermitian, unit-trace, numerically PSD matrix on 2^|A| dimensions.
class DensityMatrix {
   public:
    DensityMatrix() = default;
    /// Checks Hermiticity and trace to 1e-10 (PSD is checked lazily by the
    /// entropy functionals, which need the spectrum anyway).
    explicit DensityMatrix(ComplexMatrix entries);

    /// Skips validation. Used on hot paths where the construction guarantees
    /// the invariants (partial trace, pinching).
    static DensityMatrix from_trusted(ComplexMatrix entries);

    const ComplexMatrix &entries() const {
        return entries_;
    }
    size_t dim() const {
        return static_cast<size_t>(entries_.rows());
    }
    complex operator()(size_t r, size_t c) const {
        return entries_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

    /// Eigenvalues in ascending order.
    Eigen::VectorXd eigenvalues() const;

   private:
    ComplexMatrix entries_;
};

/// Applies `gate` to qubits (i, j) in place. Basis ordering inside the 4x4
/// block is |b_i b_j>, i.e. qubit i is the high bit of the local index.
void apply_two_qubit_gate_inplace(PureState &state, const Matrix4c &gate, size_t i, size_t j,
                                  bool check_unitary = false);

PureState apply_two_qubit_gate(PureState state, const Matrix4c &gate, size_t i, size_t j,
                               bool check_unitary = false);

/// rho_A = Tr_{complement(keep)} |psi><psi|.
DensityMatrix partial_trace(const PureState &state, const SubsystemSpec &keep);

/// Von Neumann entropy in nats. Eigenvalues below 1e-12 count as zero;
/// an eigenvalue below -1e-6 throws.
double von_neumann_entropy(const DensityMatrix &rho);

/// -ln Tr(rho^2).
double renyi2_entropy(const DensityMatrix &rho);

/// Tr(rho^2), evaluated as the squared Frobenius norm.
double purity(const DensityMatrix &rho);

/// Shannon entropy (nats) of a probability vector, with 0 ln 0 = 0.
double shannon_entropy(std::span<const double> probabilities);

/// max |U^dagger U - I|.
double unitarity_violation(const ComplexMatrix &u);

}  // namespace symrestore

#endif
