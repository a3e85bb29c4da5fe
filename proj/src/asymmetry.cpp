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

#include "symrestore/asymmetry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Eigenvalues>

namespace symrestore {

namespace {

constexpr double kEigenCorrupt = -1e-6;

std::string half_integer(int twice) {
    if (twice % 2 == 0) {
        return std::to_string(twice / 2);
    }
    return std::to_string(twice) + "/2";
}

ComplexMatrix gather_block(const ComplexMatrix &m, const std::vector<size_t> &idx) {
    auto k = static_cast<Eigen::Index>(idx.size());
    ComplexMatrix out(k, k);
    for (Eigen::Index c = 0; c < k; c++) {
        for (Eigen::Index r = 0; r < k; r++) {
            out(r, c) = m(static_cast<Eigen::Index>(idx[static_cast<size_t>(r)]),
                          static_cast<Eigen::Index>(idx[static_cast<size_t>(c)]));
        }
    }
    return out;
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix &m) {
    if (m.rows() == 1) {
        return Eigen::VectorXd::Constant(1, m(0, 0).real());
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigenvalue solver failed");
    }
    return solver.eigenvalues();
}

void append_spectrum(std::vector<double> &out, const Eigen::VectorXd &evals) {
    for (Eigen::Index k = 0; k < evals.size(); k++) {
        if (evals(k) < kEigenCorrupt) {
            throw std::domain_error("density matrix has eigenvalue " + std::to_string(evals(k)) + " (corrupted)");
        }
        out.push_back(evals(k));
    }
}

void check_dims(const DensityMatrix &rho, const SectorDecomposition &sectors) {
    if (rho.dim() != sectors.dim()) {
        throw std::invalid_argument("density matrix dimension " + std::to_string(rho.dim()) +
                                    " does not match sector decomposition dimension " + std::to_string(sectors.dim()));
    }
}

}  // namespace

SectorDecomposition::SectorDecomposition(GateSymmetry symmetry, size_t num_qubits,
                                         std::optional<ComplexMatrix> basis_change, std::vector<Sector> sectors)
    : symmetry_(symmetry),
      num_qubits_(num_qubits),
      basis_change_(std::move(basis_change)),
      sectors_(std::move(sectors)),
      sector_of_(dim(), sectors_.size()) {
    for (size_t k = 0; k < sectors_.size(); k++) {
        for (size_t i : sectors_[k].indices) {
            if (i >= dim() || sector_of_[i] != sectors_.size()) {
                throw std::invalid_argument("sector indices must partition the subsystem basis");
            }
            sector_of_[i] = k;
        }
    }
    if (std::find(sector_of_.begin(), sector_of_.end(), sectors_.size()) != sector_of_.end()) {
        throw std::invalid_argument("sector indices do not cover the subsystem basis");
    }
    if (basis_change_ && (static_cast<size_t>(basis_change_->rows()) != dim() ||
                          static_cast<size_t>(basis_change_->cols()) != dim())) {
        throw std::invalid_argument("basis change has the wrong shape");
    }
}

std::vector<size_t> SectorDecomposition::sector_dims() const {
    std::vector<size_t> dims;
    for (const auto &s : sectors_) {
        dims.push_back(s.indices.size());
    }
    return dims;
}

ComplexMatrix SectorDecomposition::projector(size_t k) const {
    auto d = static_cast<Eigen::Index>(dim());
    ComplexMatrix diag = ComplexMatrix::Zero(d, d);
    for (size_t i : sectors_.at(k).indices) {
        diag(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
    }
    return from_sector_basis(diag);
}

ComplexMatrix SectorDecomposition::to_sector_basis(const ComplexMatrix &rho) const {
    if (!basis_change_) {
        return rho;
    }
    return (*basis_change_) * rho * basis_change_->adjoint();
}

ComplexMatrix SectorDecomposition::from_sector_basis(const ComplexMatrix &rho) const {
    if (!basis_change_) {
        return rho;
    }
    return basis_change_->adjoint() * rho * (*basis_change_);
}

SectorDecomposition u1_sectors(size_t num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("u1_sectors needs |A| >= 1");
    }
    std::vector<Sector> sectors(num_qubits + 1);
    for (size_t q = 0; q <= num_qubits; q++) {
        sectors[q].label = "q=" + std::to_string(q);
    }
    for (size_t i = 0; i < (size_t{1} << num_qubits); i++) {
        sectors[static_cast<size_t>(std::popcount(i))].indices.push_back(i);
    }
    return SectorDecomposition(GateSymmetry::U1, num_qubits, std::nullopt, std::move(sectors));
}

SectorDecomposition z2_sectors(size_t num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("z2_sectors needs |A| >= 1");
    }
    auto d = Eigen::Index{1} << num_qubits;
    double scale = std::pow(2.0, -0.5 * static_cast<double>(num_qubits));
    ComplexMatrix hadamard(d, d);
    for (Eigen::Index r = 0; r < d; r++) {
        for (Eigen::Index c = 0; c < d; c++) {
            hadamard(r, c) = (std::popcount(static_cast<size_t>(r & c)) % 2 == 0) ? scale : -scale;
        }
    }
    std::vector<Sector> sectors(2);
    sectors[0].label = "parity=+1";
    sectors[1].label = "parity=-1";
    for (size_t i = 0; i < static_cast<size_t>(d); i++) {
        sectors[static_cast<size_t>(std::popcount(i) % 2)].indices.push_back(i);
    }
    return SectorDecomposition(GateSymmetry::Z2, num_qubits, std::move(hadamard), std::move(sectors));
}

std::vector<CoupledSpinState> coupled_spin_basis(size_t num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("coupled_spin_basis needs at least one spin");
    }
    struct Multiplet {
        int two_j;
        std::vector<int> path;
        // Indexed by (two_m + two_j) / 2.
        std::vector<Eigen::VectorXd> states;
    };
    auto basis_vector = [](Eigen::Index dim, Eigen::Index k) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
        v(k) = 1.0;
        return v;
    };
    // Spin 1/2 with |0> = up: m = -1/2 is |1>, m = +1/2 is |0>.
    std::vector<Multiplet> multiplets{{1, {1}, {basis_vector(2, 1), basis_vector(2, 0)}}};

    for (size_t site = 1; site < num_qubits; site++) {
        auto new_dim = Eigen::Index{1} << (site + 1);
        // |v>|b> in the enlarged space, new qubit as least significant bit.
        auto with_spin = [new_dim](const Eigen::VectorXd &v, int bit) {
            Eigen::VectorXd out = Eigen::VectorXd::Zero(new_dim);
            for (Eigen::Index i = 0; i < v.size(); i++) {
                out(2 * i + bit) = v(i);
            }
            return out;
        };
        std::vector<Multiplet> next;
        for (const auto &mp : multiplets) {
            int tj = mp.two_j;
            double denom = 2.0 * (tj + 1);
            auto old_state = [&](int two_m) -> const Eigen::VectorXd * {
                if (two_m < -tj || two_m > tj) {
                    return nullptr;
                }
                return &mp.states[static_cast<size_t>((two_m + tj) / 2)];
            };
            for (int tjp : {tj + 1, tj - 1}) {
                if (tjp < 0) {
                    continue;
                }
                Multiplet out{tjp, mp.path, {}};
                out.path.push_back(tjp);
                for (int tmp = -tjp; tmp <= tjp; tmp += 2) {
                    double plus = std::sqrt((tj + tmp + 1) / denom);
                    double minus = std::sqrt((tj - tmp + 1) / denom);
                    double up_coeff = (tjp > tj) ? plus : -minus;
                    double down_coeff = (tjp > tj) ? minus : plus;
                    Eigen::VectorXd v = Eigen::VectorXd::Zero(new_dim);
                    if (const auto *s = old_state(tmp - 1)) {
                        v += up_coeff * with_spin(*s, 0);
                    }
                    if (const auto *s = old_state(tmp + 1)) {
                        v += down_coeff * with_spin(*s, 1);
                    }
                    out.states.push_back(std::move(v));
                }
                next.push_back(std::move(out));
            }
        }
        multiplets = std::move(next);
    }

    std::stable_sort(multiplets.begin(), multiplets.end(), [](const Multiplet &a, const Multiplet &b) {
        if (a.two_j != b.two_j) {
            return a.two_j > b.two_j;
        }
        return a.path < b.path;
    });
    std::vector<CoupledSpinState> basis;
    for (const auto &mp : multiplets) {
        for (size_t k = 0; k < mp.states.size(); k++) {
            basis.push_back({mp.two_j, -mp.two_j + 2 * static_cast<int>(k), mp.path, mp.states[k]});
        }
    }
    return basis;
}

std::map<int, size_t> su2_multiplicities(size_t num_qubits) {
    std::map<int, size_t> mult{{1, 1}};
    for (size_t site = 1; site < num_qubits; site++) {
        std::map<int, size_t> next;
        for (const auto &[tj, count] : mult) {
            next[tj + 1] += count;
            if (tj >= 1) {
                next[tj - 1] += count;
            }
        }
        mult = std::move(next);
    }
    return mult;
}

SectorDecomposition su2_sectors(size_t num_qubits) {
    auto basis = coupled_spin_basis(num_qubits);
    auto d = static_cast<Eigen::Index>(basis.size());
    ComplexMatrix u0(d, d);
    std::vector<Sector> sectors;
    std::map<std::pair<int, int>, size_t> sector_id;
    for (Eigen::Index row = 0; row < d; row++) {
        const auto &st = basis[static_cast<size_t>(row)];
        u0.row(row) = st.amplitudes.cast<complex>().transpose();
        auto key = std::make_pair(st.two_j, st.two_m);
        auto it = sector_id.find(key);
        if (it == sector_id.end()) {
            it = sector_id.emplace(key, sectors.size()).first;
            sectors.push_back({"J=" + half_integer(st.two_j) + ",Jz=" + half_integer(st.two_m), {}});
        }
        sectors[it->second].indices.push_back(static_cast<size_t>(row));
    }
    return SectorDecomposition(GateSymmetry::SU2, num_qubits, std::move(u0), std::move(sectors));
}

SectorDecomposition trivial_sectors(size_t num_qubits) {
    std::vector<Sector> sectors(1);
    sectors[0].label = "all";
    for (size_t i = 0; i < (size_t{1} << num_qubits); i++) {
        sectors[0].indices.push_back(i);
    }
    return SectorDecomposition(GateSymmetry::None, num_qubits, std::nullopt, std::move(sectors));
}

SectorDecomposition sectors_for(GateSymmetry symmetry, size_t num_qubits) {
    switch (symmetry) {
        case GateSymmetry::None:
            return trivial_sectors(num_qubits);
        case GateSymmetry::U1:
            return u1_sectors(num_qubits);
        case GateSymmetry::Z2:
            return z2_sectors(num_qubits);
        case GateSymmetry::SU2:
            return su2_sectors(num_qubits);
    }
    throw std::invalid_argument("unknown GateSymmetry value");
}

GateSymmetry default_measured_symmetry(GateSymmetry circuit_symmetry) {
    return circuit_symmetry == GateSymmetry::None ? GateSymmetry::U1 : circuit_symmetry;
}

DensityMatrix prune(const DensityMatrix &rho, const SectorDecomposition &sectors) {
    check_dims(rho, sectors);
    ComplexMatrix r = sectors.to_sector_basis(rho.entries());
    const auto &sector_of = sectors.sector_of();
    for (Eigen::Index c = 0; c < r.cols(); c++) {
        for (Eigen::Index row = 0; row < r.rows(); row++) {
            if (sector_of[static_cast<size_t>(row)] != sector_of[static_cast<size_t>(c)]) {
                r(row, c) = 0.0;
            }
        }
    }
    ComplexMatrix back = sectors.from_sector_basis(r);
    if (sectors.basis_change()) {
        back = 0.5 * (back + back.adjoint()).eval();
    }
    return DensityMatrix::from_trusted(std::move(back));
}

double off_block_norm(const DensityMatrix &rho, const SectorDecomposition &sectors) {
    check_dims(rho, sectors);
    ComplexMatrix r = sectors.to_sector_basis(rho.entries());
    const auto &sector_of = sectors.sector_of();
    double total = 0;
    for (Eigen::Index c = 0; c < r.cols(); c++) {
        for (Eigen::Index row = 0; row < r.rows(); row++) {
            if (sector_of[static_cast<size_t>(row)] != sector_of[static_cast<size_t>(c)]) {
                total += std::norm(r(row, c));
            }
        }
    }
    return std::sqrt(total);
}

AsymmetryResult asymmetry(const DensityMatrix &rho, const SectorDecomposition &sectors, EntropyKind kind) {
    check_dims(rho, sectors);
    ComplexMatrix r = sectors.to_sector_basis(rho.entries());
    AsymmetryResult out;
    out.purity_original = r.squaredNorm();

    std::vector<ComplexMatrix> blocks;
    blocks.reserve(sectors.sectors().size());
    for (const auto &s : sectors.sectors()) {
        blocks.push_back(gather_block(r, s.indices));
        out.purity_pruned += blocks.back().squaredNorm();
    }

    if (kind == EntropyKind::Renyi2) {
        for (double p : {out.purity_original, out.purity_pruned}) {
            if (!(p > 0.0) || p > 1.0 + 1e-9) {
                throw std::domain_error("purity " + std::to_string(p) + " outside (0, 1]");
            }
        }
        out.entropy_original = -std::log(out.purity_original);
        out.entropy_pruned = -std::log(out.purity_pruned);
        out.delta = std::log(out.purity_original / out.purity_pruned);
        return out;
    }

    std::vector<double> pruned_spectrum;
    pruned_spectrum.reserve(sectors.dim());
    for (const auto &b : blocks) {
        append_spectrum(pruned_spectrum, hermitian_eigenvalues(b));
    }
    out.entropy_pruned = shannon_entropy(pruned_spectrum);
    // With no weight off the blocks the input is its own pruned state, and
    // both entropies come from the same spectrum.
    if (off_block_norm(rho, sectors) == 0.0) {
        out.entropy_original = out.entropy_pruned;
    } else {
        std::vector<double> spectrum;
        append_spectrum(spectrum, hermitian_eigenvalues(r));
        out.entropy_original = shannon_entropy(spectrum);
    }
    out.delta = out.entropy_pruned - out.entropy_original;
    return out;
}

}  // namespace symrestore
