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

#include "symrestore/quantum_core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace symrestore {

namespace {

constexpr double kStateNormTolerance = 1e-10;
constexpr double kHermitianTolerance = 1e-10;
constexpr double kTraceTolerance = 1e-10;
constexpr double kUnitaryTolerance = 1e-10;
constexpr double kEigenClamp = 1e-12;
constexpr double kEigenCorrupt = -1e-6;

}  // namespace

PureState::PureState(size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0 || num_qubits >= 8 * sizeof(size_t) - 1) {
        throw std::invalid_argument("PureState needs 1 <= num_qubits < 63, got " + std::to_string(num_qubits));
    }
    amplitudes_.assign(size_t{1} << num_qubits, complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

PureState::PureState(size_t num_qubits, std::vector<complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
}

PureState PureState::from_amplitudes(std::vector<complex> amplitudes) {
    size_t n = amplitudes.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw std::invalid_argument("amplitude vector length must be 2^N with N >= 1, got " + std::to_string(n));
    }
    double norm = 0;
    for (const auto &a : amplitudes) {
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > kStateNormTolerance) {
        throw std::invalid_argument("amplitudes are not normalized: sum |a|^2 = " + std::to_string(norm));
    }
    return PureState(static_cast<size_t>(std::countr_zero(n)), std::move(amplitudes));
}

double PureState::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

SubsystemSpec::SubsystemSpec(std::vector<size_t> qubits, size_t num_qubits)
    : qubits_(std::move(qubits)), num_qubits_(num_qubits) {
    for (size_t k = 0; k < qubits_.size(); k++) {
        if (qubits_[k] >= num_qubits_) {
            throw std::out_of_range("subsystem qubit " + std::to_string(qubits_[k]) + " outside [0, " +
                                    std::to_string(num_qubits_) + ")");
        }
        if (k > 0 && qubits_[k] <= qubits_[k - 1]) {
            throw std::invalid_argument("subsystem qubits must be strictly increasing");
        }
    }
}

SubsystemSpec SubsystemSpec::range(size_t begin, size_t end, size_t num_qubits) {
    if (end < begin) {
        throw std::invalid_argument("subsystem range end precedes begin");
    }
    std::vector<size_t> qubits;
    for (size_t q = begin; q < end; q++) {
        qubits.push_back(q);
    }
    return SubsystemSpec(std::move(qubits), num_qubits);
}

SubsystemSpec SubsystemSpec::complement() const {
    std::vector<size_t> rest;
    size_t k = 0;
    for (size_t q = 0; q < num_qubits_; q++) {
        if (k < qubits_.size() && qubits_[k] == q) {
            k++;
        } else {
            rest.push_back(q);
        }
    }
    return SubsystemSpec(std::move(rest), num_qubits_);
}

DensityMatrix::DensityMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw std::invalid_argument("density matrix must be square and non-empty");
    }
    double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermitianTolerance) {
        throw std::invalid_argument("density matrix is not Hermitian (max deviation " + std::to_string(herm) + ")");
    }
    double tr = entries_.trace().real();
    if (std::abs(tr - 1.0) > kTraceTolerance) {
        throw std::invalid_argument("density matrix trace is " + std::to_string(tr) + ", expected 1");
    }
}

DensityMatrix DensityMatrix::from_trusted(ComplexMatrix entries) {
    DensityMatrix rho;
    rho.entries_ = std::move(entries);
    return rho;
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(entries_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigenvalue solver failed on density matrix");
    }
    return solver.eigenvalues();
}

double unitarity_violation(const ComplexMatrix &u) {
    if (u.rows() != u.cols()) {
        return INFINITY;
    }
    ComplexMatrix product = u.adjoint() * u;
    product -= ComplexMatrix::Identity(u.rows(), u.cols());
    return product.cwiseAbs().maxCoeff();
}

void apply_two_qubit_gate_inplace(PureState &state, const Matrix4c &gate, size_t i, size_t j, bool check_unitary) {
    size_t n = state.num_qubits();
    if (i >= n || j >= n) {
        throw std::out_of_range("gate qubit index outside [0, " + std::to_string(n) + ")");
    }
    if (i == j) {
        throw std::invalid_argument("two-qubit gate needs distinct qubits");
    }
    if (check_unitary) {
        double violation = unitarity_violation(gate);
        if (violation > kUnitaryTolerance) {
            throw std::invalid_argument("gate is not unitary (violation " + std::to_string(violation) + ")");
        }
    }
    size_t si = state.bit_shift(i);
    size_t sj = state.bit_shift(j);
    size_t lo = std::min(si, sj);
    size_t hi = std::max(si, sj);
    size_t bi = size_t{1} << si;
    size_t bj = size_t{1} << sj;
    // Real arithmetic avoids the NaN-recovery libcall of std::complex products.
    double gr[4][4];
    double gi[4][4];
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            gr[r][c] = gate(r, c).real();
            gi[r][c] = gate(r, c).imag();
        }
    }
    complex *amps = state.mutable_amplitudes().data();
    const size_t dim = state.dim();
    const size_t lo_bit = size_t{1} << lo;
    const size_t hi_bit = size_t{1} << hi;
    for (size_t outer = 0; outer < dim; outer += 2 * hi_bit) {
        for (size_t mid = outer; mid < outer + hi_bit; mid += 2 * lo_bit) {
            for (size_t base = mid; base < mid + lo_bit; base++) {
                const size_t idx[4] = {base, base | bj, base | bi, base | bi | bj};
                double xr[4];
                double xi[4];
                for (int c = 0; c < 4; c++) {
                    xr[c] = amps[idx[c]].real();
                    xi[c] = amps[idx[c]].imag();
                }
                for (int r = 0; r < 4; r++) {
                    double yr = 0.0;
                    double yi = 0.0;
                    for (int c = 0; c < 4; c++) {
                        yr += gr[r][c] * xr[c] - gi[r][c] * xi[c];
                        yi += gr[r][c] * xi[c] + gi[r][c] * xr[c];
                    }
                    amps[idx[r]] = complex(yr, yi);
                }
            }
        }
    }
}

PureState apply_two_qubit_gate(PureState state, const Matrix4c &gate, size_t i, size_t j, bool check_unitary) {
    apply_two_qubit_gate_inplace(state, gate, i, j, check_unitary);
    return state;
}

DensityMatrix partial_trace(const PureState &state, const SubsystemSpec &keep) {
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace needs a non-empty subsystem");
    }
    if (keep.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("subsystem was built for " + std::to_string(keep.num_qubits()) +
                                    " qubits but the state has " + std::to_string(state.num_qubits()));
    }
    size_t n = state.num_qubits();
    size_t a = keep.size();
    auto rest = keep.complement();
    Eigen::Index dim_a = Eigen::Index{1} << a;
    Eigen::Index dim_rest = Eigen::Index{1} << (n - a);

    // Scatter table: contribution of each subsystem-local index to the global index.
    std::vector<size_t> offset_a(static_cast<size_t>(dim_a), 0);
    for (size_t local = 0; local < offset_a.size(); local++) {
        for (size_t k = 0; k < a; k++) {
            if ((local >> (a - 1 - k)) & 1) {
                offset_a[local] |= size_t{1} << state.bit_shift(keep.qubits()[k]);
            }
        }
    }
    std::vector<size_t> offset_rest(static_cast<size_t>(dim_rest), 0);
    size_t nr = rest.size();
    for (size_t local = 0; local < offset_rest.size(); local++) {
        for (size_t k = 0; k < nr; k++) {
            if ((local >> (nr - 1 - k)) & 1) {
                offset_rest[local] |= size_t{1} << state.bit_shift(rest.qubits()[k]);
            }
        }
    }

    ComplexMatrix m(dim_a, dim_rest);
    auto amps = state.amplitudes();
    for (Eigen::Index e = 0; e < dim_rest; e++) {
        size_t oe = offset_rest[static_cast<size_t>(e)];
        for (Eigen::Index r = 0; r < dim_a; r++) {
            m(r, e) = amps[offset_a[static_cast<size_t>(r)] | oe];
        }
    }
    ComplexMatrix rho(dim_a, dim_a);
    rho.noalias() = m * m.adjoint();
    // Symmetrize away rounding so downstream Hermitian checks are exact.
    ComplexMatrix herm = 0.5 * (rho + rho.adjoint());
    return DensityMatrix::from_trusted(std::move(herm));
}

double shannon_entropy(std::span<const double> probabilities) {
    double s = 0;
    for (double p : probabilities) {
        if (p < kEigenCorrupt) {
            throw std::domain_error("negative probability " + std::to_string(p));
        }
        if (p > kEigenClamp) {
            s -= p * std::log(p);
        }
    }
    return std::max(s, 0.0);
}

double von_neumann_entropy(const DensityMatrix &rho) {
    Eigen::VectorXd evals = rho.eigenvalues();
    if (evals.size() > 0 && evals(0) < kEigenCorrupt) {
        throw std::domain_error("density matrix has eigenvalue " + std::to_string(evals(0)) + " (corrupted)");
    }
    return shannon_entropy(std::span<const double>(evals.data(), static_cast<size_t>(evals.size())));
}

double purity(const DensityMatrix &rho) {
    return rho.entries().squaredNorm();
}

double renyi2_entropy(const DensityMatrix &rho) {
    double p = purity(rho);
    if (!(p > 0.0) || p > 1.0 + 1e-9) {
        throw std::domain_error("purity " + std::to_string(p) + " outside (0, 1]");
    }
    return std::max(-std::log(p), 0.0);
}

}  // namespace symrestore
