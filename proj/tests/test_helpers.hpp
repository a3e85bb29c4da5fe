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


#ifndef SYMRESTORE_TEST_HELPERS_HPP
#define SYMRESTORE_TEST_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "symrestore/quantum_core.hpp"
#include "symrestore/random.hpp"

namespace symrestore::test {

inline PureState random_state(size_t n, RandomSource &rng) {
    std::vector<complex> amps(size_t{1} << n);
    double norm = 0.0;
    for (auto &a : amps) {
        a = rng.complex_normal();
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return PureState::from_amplitudes(std::move(amps));
}

inline Eigen::VectorXcd to_vector(const PureState &s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dim()));
    for (size_t k = 0; k < s.dim(); k++) {
        v(static_cast<Eigen::Index>(k)) = s[k];
    }
    return v;
}

inline double max_diff(const PureState &a, const PureState &b) {
    return (to_vector(a) - to_vector(b)).cwiseAbs().maxCoeff();
}

// Dense 2^n x 2^n operator of a two-qubit gate, built element by element.
inline ComplexMatrix embed_two_qubit(const Matrix4c &u, size_t i, size_t j, size_t n) {
    size_t dim = size_t{1} << n;
    size_t si = n - 1 - i;
    size_t sj = n - 1 - j;
    ComplexMatrix full = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            size_t rest_mask = ~((size_t{1} << si) | (size_t{1} << sj));
            if ((r & rest_mask) != (c & rest_mask)) {
                continue;
            }
            size_t lr = (((r >> si) & 1) << 1) | ((r >> sj) & 1);
            size_t lc = (((c >> si) & 1) << 1) | ((c >> sj) & 1);
            full(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                u(static_cast<Eigen::Index>(lr), static_cast<Eigen::Index>(lc));
        }
    }
    return full;
}

// rho_A[x, y] = sum_e psi[x e] conj(psi[y e]), enumerating all index pairs.
inline ComplexMatrix reference_partial_trace(const PureState &s, const SubsystemSpec &keep) {
    size_t n = s.num_qubits();
    size_t a = keep.size();
    size_t da = size_t{1} << a;
    auto sub_index = [&](size_t full) {
        size_t x = 0;
        for (size_t q : keep.qubits()) {
            x = (x << 1) | ((full >> (n - 1 - q)) & 1);
        }
        return x;
    };
    auto env_mask = [&](size_t full) {
        size_t m = full;
        for (size_t q : keep.qubits()) {
            m &= ~(size_t{1} << (n - 1 - q));
        }
        return m;
    };
    ComplexMatrix rho = ComplexMatrix::Zero(static_cast<Eigen::Index>(da), static_cast<Eigen::Index>(da));
    for (size_t r = 0; r < s.dim(); r++) {
        for (size_t c = 0; c < s.dim(); c++) {
            if (env_mask(r) == env_mask(c)) {
                rho(static_cast<Eigen::Index>(sub_index(r)), static_cast<Eigen::Index>(sub_index(c))) +=
                    s[r] * std::conj(s[c]);
            }
        }
    }
    return rho;
}

// Mixed state from a Ginibre matrix: G G^dagger / Tr.
inline DensityMatrix random_density_matrix(size_t n, RandomSource &rng) {
    auto d = static_cast<Eigen::Index>(size_t{1} << n);
    ComplexMatrix g(d, d);
    for (Eigen::Index r = 0; r < d; r++) {
        for (Eigen::Index c = 0; c < d; c++) {
            g(r, c) = rng.complex_normal();
        }
    }
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix(rho);
}

inline double max_abs(const ComplexMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace symrestore::test

#endif
