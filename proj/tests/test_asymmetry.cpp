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

#include "symrestore/asymmetry.hpp"
#include "symrestore/initial_states.hpp"
#include "test_helpers.hpp"

using namespace symrestore;

namespace {

constexpr double kPi = std::numbers::pi;

double binom(int n, int k) {
    return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

}  // namespace

TEST(InitialStates, FerroThetaZeroIsAllZeros) {
    PureState s = build_initial_state({InitialKind::Ferro, 0.0, 0, 0}, 5);
    EXPECT_EQ(s, PureState(5));
}

TEST(InitialStates, SingleQubitHalfPi) {
    PureState s = tilted_product_state({0}, {kPi / 2});
    const double h = 1.0 / std::numbers::sqrt2;
    EXPECT_NEAR(s[0].real(), h, 1e-15);
    EXPECT_NEAR(s[1].real(), -h, 1e-15);
}

TEST(InitialStates, FerroAmplitudeFormula) {
    const size_t n = 6;
    const double theta = 0.37 * kPi;
    PureState s = build_initial_state({InitialKind::Ferro, theta, 0, 0}, n);
    double c = std::cos(theta / 2);
    double m = -std::sin(theta / 2);
    for (size_t b = 0; b < s.dim(); b++) {
        int q = std::popcount(b);
        EXPECT_NEAR(s[b].real(), std::pow(c, n - q) * std::pow(m, q), 1e-14);
        EXPECT_EQ(s[b].imag(), 0.0);
    }
}

TEST(InitialStates, GhzThetaZero) {
    PureState s = build_initial_state({InitialKind::Ghz, 0.0, 0, 0}, 2);
    const double h = 1.0 / std::numbers::sqrt2;
    EXPECT_EQ(s[0], complex(h, 0));
    EXPECT_EQ(s[3], complex(h, 0));
    EXPECT_EQ(s[1], complex(0, 0));
}

TEST(InitialStates, NeelAndDomainWallPatterns) {
    EXPECT_EQ(reference_bits(InitialKind::Neel, 4), (std::vector<int>{0, 1, 0, 1}));
    EXPECT_EQ(reference_bits(InitialKind::DomainWall, 4), (std::vector<int>{0, 0, 1, 1}));
    PureState neel = build_initial_state({InitialKind::Neel, 0.0, 0, 0}, 4);
    EXPECT_EQ(neel[0b0101], complex(1, 0));
    PureState dw = build_initial_state({InitialKind::DomainWall, 0.0, 0, 0}, 4);
    EXPECT_EQ(dw[0b0011], complex(1, 0));
}

TEST(InitialStates, StaggeredTilts) {
    auto a = site_tilts({InitialKind::StaggeredFerro, 0.3, 0, 0}, 4);
    EXPECT_EQ(a, (std::vector<double>{0.3, -0.3, 0.3, -0.3}));
}

TEST(InitialStates, RandomTiltsInRangeAndSeeded) {
    InitialStateSpec spec{InitialKind::RandomTiltFerro, 0.0, 0.2, 77};
    auto a = site_tilts(spec, 10);
    EXPECT_EQ(a, site_tilts(spec, 10));
    for (double t : a) {
        EXPECT_LE(std::abs(t), 0.2);
    }
    spec.tilt_seed = 78;
    EXPECT_NE(a, site_tilts(spec, 10));
}

TEST(InitialStates, Errors) {
    EXPECT_THROW(build_initial_state({InitialKind::Ferro, -0.1, 0, 0}, 4), std::invalid_argument);
    EXPECT_THROW(build_initial_state({InitialKind::Ferro, 4.0, 0, 0}, 4), std::invalid_argument);
    EXPECT_THROW(build_initial_state({InitialKind::RandomTiltNeel, 0.0, -1.0, 0}, 4), std::invalid_argument);
    EXPECT_THROW(build_initial_state({InitialKind::DomainWall, 0.1, 0, 0}, 5), std::invalid_argument);
    EXPECT_THROW(build_initial_state({InitialKind::Ferro, 0.1, 0, 0}, 1), std::invalid_argument);
    EXPECT_THROW(parse_initial_kind("para"), std::invalid_argument);
    EXPECT_EQ(parse_initial_kind("domain-wall"), InitialKind::DomainWall);
}

TEST(InitialStates, AllUnitNorm) {
    for (auto kind : {InitialKind::Ferro, InitialKind::Neel, InitialKind::DomainWall, InitialKind::RandomTiltFerro,
                      InitialKind::RandomTiltNeel, InitialKind::Ghz, InitialKind::StaggeredFerro}) {
        for (double theta : {0.0, 0.1 * kPi, 0.5 * kPi, kPi}) {
            PureState s = build_initial_state({kind, theta, 0.3, 5}, 8);
            EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
        }
    }
}

TEST(ChargeWeights, SpecExamples) {
    auto w0 = charge_weights(build_initial_state({InitialKind::Ferro, 0.0, 0, 0}, 4));
    EXPECT_EQ(w0, (std::vector<double>{1, 0, 0, 0, 0}));
    auto w = ferro_charge_weights(2, kPi / 2);
    EXPECT_NEAR(w[0], 0.25, 1e-15);
    EXPECT_NEAR(w[1], 0.5, 1e-15);
    EXPECT_NEAR(w[2], 0.25, 1e-15);
    auto wn = charge_weights(build_initial_state({InitialKind::Neel, 0.0, 0, 0}, 4));
    EXPECT_EQ(wn[2], 1.0);
}

TEST(ChargeWeights, ClosedFormMatchesBinning) {
    for (size_t n : {2u, 5u, 10u}) {
        for (double theta : {0.0, 0.13, 0.5 * kPi, 2.9, kPi}) {
            auto binned = charge_weights(build_initial_state({InitialKind::Ferro, theta, 0, 0}, n));
            auto closed = ferro_charge_weights(n, theta);
            double total = 0;
            for (size_t q = 0; q <= n; q++) {
                EXPECT_NEAR(binned[q], closed[q], 1e-10);
                total += binned[q];
            }
            EXPECT_NEAR(total, 1.0, 1e-10);
        }
    }
}

TEST(ChargeWeights, NeelAndDomainWallAgree) {
    for (double theta = 0.0; theta <= kPi; theta += 0.05 * kPi) {
        auto a = charge_weights(build_initial_state({InitialKind::Neel, theta, 0, 0}, 8));
        auto b = charge_weights(build_initial_state({InitialKind::DomainWall, theta, 0, 0}, 8));
        for (size_t q = 0; q < a.size(); q++) {
            EXPECT_NEAR(a[q], b[q], 1e-12);
        }
    }
}

TEST(InitialStates, FerroAsymmetryMonotoneInTheta) {
    SubsystemSpec a = SubsystemSpec::range(0, 3, 6);
    auto sectors = u1_sectors(3);
    double prev = -1.0;
    for (int k = 0; k <= 50; k++) {
        double theta = 0.5 * kPi * k / 50;
        DensityMatrix rho = partial_trace(build_initial_state({InitialKind::Ferro, theta, 0, 0}, 6), a);
        double ds = asymmetry(rho, sectors, EntropyKind::VonNeumann).delta;
        EXPECT_GE(ds, prev - 1e-12);
        prev = ds;
    }
}

TEST(U1Sectors, DimsAndCompleteness) {
    auto s = u1_sectors(2);
    EXPECT_EQ(s.sector_dims(), (std::vector<size_t>{1, 2, 1}));
    ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
    double squares = 0;
    for (size_t k = 0; k < s.sectors().size(); k++) {
        sum += s.projector(k);
        squares += std::pow(static_cast<double>(s.sector_dims()[k]), 2);
    }
    EXPECT_EQ(sum, ComplexMatrix::Identity(4, 4));
    EXPECT_EQ(squares, binom(4, 2));
    EXPECT_FALSE(s.basis_change().has_value());
}

TEST(Z2Sectors, SingleQubit) {
    auto s = z2_sectors(1);
    ComplexMatrix p0 = s.projector(0);
    EXPECT_NEAR(p0(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(p0(0, 1).real(), 0.5, 1e-15);
    ComplexMatrix p1 = s.projector(1);
    EXPECT_NEAR(p1(0, 1).real(), -0.5, 1e-15);
    EXPECT_EQ(s.sector_dims(), (std::vector<size_t>{1, 1}));
}

TEST(Z2Sectors, DimsAndParityEigenspaces) {
    for (size_t n : {1u, 2u, 3u, 4u}) {
        auto s = z2_sectors(n);
        size_t half = size_t{1} << (n - 1);
        EXPECT_EQ(s.sector_dims(), (std::vector<size_t>{half, half}));
        // prod X flips every bit.
        auto d = static_cast<Eigen::Index>(size_t{1} << n);
        ComplexMatrix x = ComplexMatrix::Zero(d, d);
        for (Eigen::Index i = 0; i < d; i++) {
            x(d - 1 - i, i) = 1.0;
        }
        EXPECT_LT(test::max_abs(x * s.projector(0) - s.projector(0)), 1e-12);
        EXPECT_LT(test::max_abs(x * s.projector(1) + s.projector(1)), 1e-12);
    }
}

TEST(Z2Sectors, PruneZeroStateGivesMaximallyMixed) {
    ComplexMatrix r = ComplexMatrix::Zero(2, 2);
    r(0, 0) = 1;
    auto s = z2_sectors(1);
    DensityMatrix pruned = prune(DensityMatrix(r), s);
    EXPECT_LT(test::max_abs(pruned.entries() - 0.5 * ComplexMatrix::Identity(2, 2)), 1e-15);
    EXPECT_NEAR(asymmetry(DensityMatrix(r), s, EntropyKind::VonNeumann).delta, std::log(2.0), 1e-12);
}

TEST(SU2Sectors, TwoQubits) {
    auto s = su2_sectors(2);
    std::vector<std::string> labels;
    for (const auto &sec : s.sectors()) {
        labels.push_back(sec.label);
    }
    EXPECT_EQ(labels, (std::vector<std::string>{"J=1,Jz=-1", "J=1,Jz=0", "J=1,Jz=1", "J=0,Jz=0"}));
    EXPECT_EQ(s.sector_dims(), (std::vector<size_t>{1, 1, 1, 1}));
}

TEST(SU2Sectors, PruneZeroOne) {
    ComplexMatrix r = ComplexMatrix::Zero(4, 4);
    r(1, 1) = 1;  // |01>
    auto s = su2_sectors(2);
    DensityMatrix rho(r);
    ComplexMatrix in_sector = s.to_sector_basis(prune(rho, s).entries());
    // Sector basis order: (1,-1), (1,0), (1,1), (0,0).
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(1, 1) = 0.5;
    expected(3, 3) = 0.5;
    EXPECT_LT(test::max_abs(in_sector - expected), 1e-14);
    EXPECT_NEAR(asymmetry(rho, s, EntropyKind::VonNeumann).delta, std::log(2.0), 1e-12);
}

TEST(SU2Sectors, MultiplicitiesMatchCountingFormula) {
    // mult(J) = C(n, n/2 - J) - C(n, n/2 - J - 1), an independent counting oracle.
    for (int n = 1; n <= 10; n++) {
        auto mult = su2_multiplicities(static_cast<size_t>(n));
        size_t dim = 0;
        for (int tj = n % 2; tj <= n; tj += 2) {
            int k = (n - tj) / 2;
            double expected = binom(n, k) - (k >= 1 ? binom(n, k - 1) : 0.0);
            EXPECT_EQ(static_cast<double>(mult[tj]), expected) << "n=" << n << " 2J=" << tj;
            dim += static_cast<size_t>(tj + 1) * mult[tj];
        }
        EXPECT_EQ(dim, size_t{1} << n);
    }
    auto m4 = su2_multiplicities(4);
    EXPECT_EQ(m4[4], 1u);
    EXPECT_EQ(m4[2], 3u);
    EXPECT_EQ(m4[0], 2u);
}

TEST(SU2Sectors, CoupledBasisDiagonalizesCasimir) {
    for (size_t n : {2u, 3u, 4u, 5u}) {
        auto d = static_cast<Eigen::Index>(size_t{1} << n);
        // J^2 and J_z built from Pauli strings, |0> = spin up.
        ComplexMatrix jx = ComplexMatrix::Zero(d, d), jy = jx, jz = jx;
        for (size_t q = 0; q < n; q++) {
            size_t bit = size_t{1} << (n - 1 - q);
            for (Eigen::Index i = 0; i < d; i++) {
                auto flipped = static_cast<Eigen::Index>(static_cast<size_t>(i) ^ bit);
                bool down = (static_cast<size_t>(i) & bit) != 0;
                jx(flipped, i) += 0.5;
                jy(flipped, i) += down ? complex(0, -0.5) : complex(0, 0.5);
                jz(i, i) += down ? -0.5 : 0.5;
            }
        }
        ComplexMatrix j2 = jx * jx + jy * jy + jz * jz;
        auto basis = coupled_spin_basis(n);
        ASSERT_EQ(basis.size(), static_cast<size_t>(d));
        for (const auto &st : basis) {
            Eigen::VectorXcd v = st.amplitudes.cast<complex>();
            double jj = 0.5 * st.two_j * (0.5 * st.two_j + 1);
            EXPECT_LT((j2 * v - jj * v).cwiseAbs().maxCoeff(), 1e-12);
            EXPECT_LT((jz * v - 0.5 * st.two_m * v).cwiseAbs().maxCoeff(), 1e-12);
        }
        auto s = su2_sectors(n);
        const ComplexMatrix &u0 = *s.basis_change();
        EXPECT_LT(test::max_abs(u0 * u0.adjoint() - ComplexMatrix::Identity(d, d)), 1e-12);
    }
}

TEST(SU2Sectors, FourQubitDimensionCheck) {
    auto s = su2_sectors(4);
    size_t total = 0;
    for (size_t dim : s.sector_dims()) {
        total += dim;
    }
    EXPECT_EQ(total, 16u);
    // 5 J=2 labels, 3 J=1 labels holding 3 copies each, one J=0 label with 2 copies.
    EXPECT_EQ(s.sectors().size(), 9u);
}

class PruneProperties : public ::testing::TestWithParam<GateSymmetry> {};

TEST_P(PruneProperties, ChannelPropertiesOnRandomStates) {
    const size_t n = GetParam() == GateSymmetry::SU2 ? 4 : 3;
    auto s = sectors_for(GetParam(), n);
    auto d = static_cast<Eigen::Index>(s.dim());
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (size_t k = 0; k < s.sectors().size(); k++) {
        ComplexMatrix p = s.projector(k);
        EXPECT_LT(test::max_abs(p * p - p), 1e-10);
        for (size_t l = k + 1; l < s.sectors().size(); l++) {
            EXPECT_LT(test::max_abs(p * s.projector(l)), 1e-10);
        }
        sum += p;
    }
    EXPECT_LT(test::max_abs(sum - ComplexMatrix::Identity(d, d)), 1e-10);

    RandomSource rng(1234);
    for (int k = 0; k < 1000; k++) {
        DensityMatrix rho = test::random_density_matrix(n, rng);
        DensityMatrix p = prune(rho, s);
        EXPECT_NEAR(p.entries().trace().real(), 1.0, 1e-10);
        EXPECT_GE(p.eigenvalues()(0), -1e-10);
        EXPECT_LT(test::max_abs(prune(p, s).entries() - p.entries()), 1e-12);
        for (size_t q = 0; q < s.sectors().size(); q++) {
            ComplexMatrix pq = s.projector(q);
            EXPECT_LT(test::max_abs(pq * p.entries() - p.entries() * pq), 1e-10);
        }
        EXPECT_GE(asymmetry(rho, s, EntropyKind::VonNeumann).delta, -1e-9);
        EXPECT_GE(asymmetry(rho, s, EntropyKind::Renyi2).delta, -1e-9);
    }
}

INSTANTIATE_TEST_SUITE_P(AllSymmetries, PruneProperties,
                         ::testing::Values(GateSymmetry::None, GateSymmetry::U1, GateSymmetry::Z2, GateSymmetry::SU2));

TEST(Prune, FixedPointsAndSingleQubit) {
    auto s = u1_sectors(1);
    ComplexMatrix mixed = 0.5 * ComplexMatrix::Identity(2, 2);
    EXPECT_LT(test::max_abs(prune(DensityMatrix(mixed), s).entries() - mixed), 1e-15);

    const double theta = 0.3 * kPi;
    PureState q = tilted_product_state({0}, {theta});
    DensityMatrix rho = partial_trace(PureState::from_amplitudes({q[0] * q[0], q[0] * q[1], q[1] * q[0], q[1] * q[1]}),
                                      SubsystemSpec({0}, 2));
    DensityMatrix p = prune(rho, s);
    EXPECT_NEAR(p(0, 0).real(), std::pow(std::cos(theta / 2), 2), 1e-14);
    EXPECT_NEAR(p(1, 1).real(), std::pow(std::sin(theta / 2), 2), 1e-14);
    EXPECT_EQ(p(0, 1), complex(0, 0));

    RandomSource rng(3);
    for (int k = 0; k < 20; k++) {
        DensityMatrix block = prune(test::random_density_matrix(3, rng), u1_sectors(3));
        EXPECT_LT(test::max_abs(prune(block, u1_sectors(3)).entries() - block.entries()), 1e-12);
        EXPECT_EQ(asymmetry(block, u1_sectors(3), EntropyKind::VonNeumann).delta, 0.0);
    }
}

TEST(Prune, DimensionMismatchThrows) {
    EXPECT_THROW(prune(DensityMatrix(ComplexMatrix::Identity(2, 2) * 0.5), u1_sectors(2)), std::invalid_argument);
}

TEST(Prune, U1EqualsPhaseTwirl) {
    RandomSource rng(41);
    const size_t n = 4;
    auto s = u1_sectors(n);
    auto d = static_cast<Eigen::Index>(s.dim());
    for (int trial = 0; trial < 20; trial++) {
        DensityMatrix rho = test::random_density_matrix(n, rng);
        const size_t kk = n + 1;
        ComplexMatrix avg = ComplexMatrix::Zero(d, d);
        for (size_t k = 0; k < kk; k++) {
            double phi = 2 * kPi * static_cast<double>(k) / static_cast<double>(kk);
            Eigen::VectorXcd ph(d);
            for (Eigen::Index i = 0; i < d; i++) {
                ph(i) = std::polar(1.0, phi * std::popcount(static_cast<size_t>(i)));
            }
            avg += ph.asDiagonal() * rho.entries() * ph.conjugate().asDiagonal();
        }
        avg /= static_cast<double>(kk);
        EXPECT_LT(test::max_abs(prune(rho, s).entries() - avg), 1e-10);
    }
}

TEST(Asymmetry, SpecExamples) {
    auto s1 = u1_sectors(1);
    ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
    zero(0, 0) = 1;
    EXPECT_EQ(asymmetry(DensityMatrix(zero), s1, EntropyKind::VonNeumann).delta, 0.0);

    PureState ferro = build_initial_state({InitialKind::Ferro, 0.0, 0, 0}, 4);
    EXPECT_EQ(asymmetry(partial_trace(ferro, SubsystemSpec::range(0, 2, 4)), u1_sectors(2), EntropyKind::VonNeumann)
                  .delta,
              0.0);

    PureState tilted = build_initial_state({InitialKind::Ferro, kPi / 2, 0, 0}, 2);
    DensityMatrix rho = partial_trace(tilted, SubsystemSpec({0}, 2));
    EXPECT_NEAR(asymmetry(rho, s1, EntropyKind::VonNeumann).delta, std::log(2.0), 1e-12);
    auto r2 = asymmetry(rho, s1, EntropyKind::Renyi2);
    EXPECT_NEAR(r2.delta, std::log(2.0), 1e-12);
    EXPECT_NEAR(r2.purity_original, 1.0, 1e-12);
    EXPECT_NEAR(r2.purity_pruned, 0.5, 1e-12);
}

TEST(Asymmetry, ZeroExactlyWhenOffBlockMassVanishes) {
    RandomSource rng(43);
    for (auto sym : {GateSymmetry::U1, GateSymmetry::Z2, GateSymmetry::SU2}) {
        auto s = sectors_for(sym, 4);
        for (int k = 0; k < 50; k++) {
            DensityMatrix rho = test::random_density_matrix(4, rng);
            double off = off_block_norm(rho, s);
            double ds = asymmetry(rho, s, EntropyKind::VonNeumann).delta;
            EXPECT_GT(off, 1e-9);
            EXPECT_GT(ds, 1e-9);
            DensityMatrix p = prune(rho, s);
            EXPECT_LT(off_block_norm(p, s), 1e-9);
            EXPECT_NEAR(asymmetry(p, s, EntropyKind::VonNeumann).delta, 0.0, 1e-9);
            EXPECT_NEAR(asymmetry(p, s, EntropyKind::Renyi2).delta, 0.0, 1e-9);
        }
    }
}

TEST(Asymmetry, MeasuredSymmetryDefaults) {
    EXPECT_EQ(default_measured_symmetry(GateSymmetry::None), GateSymmetry::U1);
    EXPECT_EQ(default_measured_symmetry(GateSymmetry::U1), GateSymmetry::U1);
    EXPECT_EQ(default_measured_symmetry(GateSymmetry::Z2), GateSymmetry::Z2);
    EXPECT_EQ(default_measured_symmetry(GateSymmetry::SU2), GateSymmetry::SU2);
}
