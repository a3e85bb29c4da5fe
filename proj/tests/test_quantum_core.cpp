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


#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "symrestore/gates.hpp"
#include "symrestore/initial_states.hpp"
#include "symrestore/quantum_core.hpp"
#include "test_helpers.hpp"

using namespace symrestore;

TEST(PureState, StartsInAllZeros) {
    PureState s(3);
    EXPECT_EQ(s.dim(), 8u);
    EXPECT_EQ(s[0], complex(1, 0));
    EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(PureState, RejectsBadAmplitudes) {
    EXPECT_THROW(PureState::from_amplitudes({1.0, 0.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(PureState::from_amplitudes({1.0, 1.0}), std::invalid_argument);
}

TEST(SubsystemSpec, ValidatesAndComplements) {
    EXPECT_THROW(SubsystemSpec({1, 0}, 3), std::invalid_argument);
    EXPECT_THROW(SubsystemSpec({0, 3}, 3), std::out_of_range);
    EXPECT_THROW(SubsystemSpec({1, 1}, 3), std::invalid_argument);
    SubsystemSpec a({0, 2}, 4);
    EXPECT_EQ(a.complement().qubits(), (std::vector<size_t>{1, 3}));
}

TEST(ApplyGate, IdentityIsBitwiseNoop) {
    RandomSource rng(3);
    PureState s = test::random_state(5, rng);
    PureState out = apply_two_qubit_gate(s, Matrix4c::Identity(), 1, 3);
    EXPECT_EQ(out, s);
}

TEST(ApplyGate, SwapMapsZeroOneToOneZero) {
    Matrix4c swap = Matrix4c::Zero();
    swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
    PureState s = PureState::from_amplitudes({0, 1, 0, 0});  // |01>
    PureState out = apply_two_qubit_gate(s, swap, 0, 1);
    EXPECT_EQ(out[2], complex(1, 0));  // |10>
    EXPECT_EQ(out[1], complex(0, 0));
}

TEST(ApplyGate, GateThenInverseRestoresState) {
    RandomSource rng(11);
    for (int k = 0; k < 50; k++) {
        PureState s = test::random_state(6, rng);
        Matrix4c u = sample_haar_gate(rng).matrix;
        PureState out = apply_two_qubit_gate(apply_two_qubit_gate(s, u, 4, 1), u.adjoint(), 4, 1);
        EXPECT_LT(test::max_diff(out, s), 1e-10);
    }
}

TEST(ApplyGate, QubitOrderConvention) {
    // Gate mapping |b_i b_j> = |01> to |10> with qubit i the high local bit.
    Matrix4c x_on_i = Matrix4c::Zero();
    x_on_i(2, 0) = x_on_i(3, 1) = x_on_i(0, 2) = x_on_i(1, 3) = 1.0;  // X on qubit i
    PureState s(3);                                                   // |000>
    PureState out = apply_two_qubit_gate(s, x_on_i, 2, 0);            // flips qubit 2 = LSB
    EXPECT_EQ(out[1], complex(1, 0));
}

TEST(ApplyGate, Errors) {
    PureState s(3);
    EXPECT_THROW(apply_two_qubit_gate(s, Matrix4c::Identity(), 1, 1), std::invalid_argument);
    EXPECT_THROW(apply_two_qubit_gate(s, Matrix4c::Identity(), 0, 3), std::out_of_range);
    Matrix4c bad = 2.0 * Matrix4c::Identity();
    EXPECT_THROW(apply_two_qubit_gate(s, bad, 0, 1, true), std::invalid_argument);
    EXPECT_NO_THROW(apply_two_qubit_gate(s, bad * 0.5, 0, 1, true));
}

TEST(ApplyGate, NormPreservedOverManyDraws) {
    RandomSource rng(5);
    double worst = 0.0;
    for (int k = 0; k < 10000; k++) {
        PureState s = test::random_state(4, rng);
        size_t i = rng.next_u64() % 4;
        size_t j = (i + 1 + rng.next_u64() % 3) % 4;
        PureState out = apply_two_qubit_gate(s, sample_haar_gate(rng).matrix, i, j);
        worst = std::max(worst, std::abs(out.norm_squared() - 1.0));
    }
    EXPECT_LT(worst, 1e-10);
}

TEST(ApplyGate, MatchesDenseKroneckerConstruction) {
    RandomSource rng(17);
    const size_t n = 4;
    PureState s = test::random_state(n, rng);
    Matrix4c u = sample_haar_gate(rng).matrix;
    for (auto [i, j] : std::vector<std::pair<size_t, size_t>>{{0, 1}, {2, 3}, {3, 0}, {1, 3}}) {
        ComplexMatrix full = test::embed_two_qubit(u, i, j, n);
        Eigen::VectorXcd v = full * test::to_vector(s);
        PureState out = apply_two_qubit_gate(s, u, i, j);
        EXPECT_LT((test::to_vector(out) - v).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(PartialTrace, ProductState) {
    DensityMatrix rho = partial_trace(PureState(2), SubsystemSpec({0}, 2));
    EXPECT_EQ(rho(0, 0), complex(1, 0));
    EXPECT_EQ(rho(1, 1), complex(0, 0));
}

TEST(PartialTrace, BellState) {
    const double h = 1.0 / std::numbers::sqrt2;
    PureState bell = PureState::from_amplitudes({h, 0, 0, h});
    DensityMatrix rho = partial_trace(bell, SubsystemSpec({0}, 2));
    EXPECT_NEAR(rho(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(rho(1, 1).real(), 0.5, 1e-15);
    EXPECT_NEAR(std::abs(rho(0, 1)), 0.0, 1e-15);
}

TEST(PartialTrace, TiltedFerroHalfPi) {
    PureState s = build_initial_state({InitialKind::Ferro, std::numbers::pi / 2, 0, 0}, 2);
    DensityMatrix rho = partial_trace(s, SubsystemSpec({0}, 2));
    // Projector onto (|0> - |1>)/sqrt2.
    EXPECT_NEAR(rho(0, 0).real(), 0.5, 1e-12);
    EXPECT_NEAR(rho(1, 1).real(), 0.5, 1e-12);
    EXPECT_NEAR(rho(0, 1).real(), -0.5, 1e-12);
    EXPECT_NEAR(rho(0, 1).imag(), 0.0, 1e-12);
}

TEST(PartialTrace, MatchesExplicitSum) {
    RandomSource rng(23);
    PureState s = test::random_state(5, rng);
    SubsystemSpec keep({1, 3, 4}, 5);
    DensityMatrix rho = partial_trace(s, keep);
    ComplexMatrix ref = test::reference_partial_trace(s, keep);
    EXPECT_LT((rho.entries() - ref).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(PartialTrace, EmptyKeepThrows) {
    EXPECT_THROW(partial_trace(PureState(2), SubsystemSpec({}, 2)), std::invalid_argument);
}

TEST(PartialTrace, SchmidtSymmetry) {
    RandomSource rng(29);
    for (int k = 0; k < 20; k++) {
        PureState s = test::random_state(7, rng);
        SubsystemSpec a({0, 2, 5}, 7);
        double sa = von_neumann_entropy(partial_trace(s, a));
        double sb = von_neumann_entropy(partial_trace(s, a.complement()));
        EXPECT_NEAR(sa, sb, 1e-8);
    }
}

TEST(Entropy, SpecExamples) {
    ComplexMatrix pure = ComplexMatrix::Zero(2, 2);
    pure(0, 0) = 1;
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(pure)), 0.0, 1e-15);
    EXPECT_NEAR(renyi2_entropy(DensityMatrix(pure)), 0.0, 1e-15);
    EXPECT_NEAR(purity(DensityMatrix(pure)), 1.0, 1e-15);

    ComplexMatrix mixed = ComplexMatrix::Identity(2, 2) * 0.5;
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(mixed)), std::log(2.0), 1e-15);
    EXPECT_NEAR(renyi2_entropy(DensityMatrix(mixed)), std::log(2.0), 1e-15);
    EXPECT_NEAR(purity(DensityMatrix(ComplexMatrix::Identity(4, 4) * 0.25)), 0.25, 1e-15);

    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 0.75;
    d(1, 1) = 0.25;
    double expected_vn = -(0.75 * std::log(0.75) + 0.25 * std::log(0.25));
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(d)), expected_vn, 1e-14);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(d)), 0.562335, 1e-6);
    EXPECT_NEAR(renyi2_entropy(DensityMatrix(d)), std::log(1.6), 1e-14);
    EXPECT_NEAR(purity(DensityMatrix(d)), 0.625, 1e-15);
}

TEST(Entropy, RenyiBelowVonNeumann) {
    RandomSource rng(31);
    for (int k = 0; k < 200; k++) {
        DensityMatrix rho = test::random_density_matrix(3, rng);
        EXPECT_LE(renyi2_entropy(rho), von_neumann_entropy(rho) + 1e-10);
    }
}

TEST(Entropy, DiagonalMatchesShannon) {
    RandomSource rng(37);
    for (int k = 0; k < 50; k++) {
        std::vector<double> p(8);
        double total = 0;
        for (auto &x : p) {
            x = rng.uniform();
            total += x;
        }
        ComplexMatrix d = ComplexMatrix::Zero(8, 8);
        for (size_t i = 0; i < 8; i++) {
            p[i] /= total;
            d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = p[i];
        }
        EXPECT_NEAR(von_neumann_entropy(DensityMatrix(d)), shannon_entropy(p), 1e-10);
    }
}

TEST(Entropy, CorruptMatricesThrow) {
    ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
    neg(0, 0) = 1.1;
    neg(1, 1) = -0.1;
    EXPECT_THROW(von_neumann_entropy(DensityMatrix(neg)), std::domain_error);
    EXPECT_THROW(renyi2_entropy(DensityMatrix(neg)), std::domain_error);
    ComplexMatrix nonherm = ComplexMatrix::Identity(2, 2) * 0.5;
    nonherm(0, 1) = 0.1;
    EXPECT_THROW(DensityMatrix{nonherm}, std::invalid_argument);
    EXPECT_THROW(DensityMatrix{ComplexMatrix::Identity(2, 2)}, std::invalid_argument);
}
