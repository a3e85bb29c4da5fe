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

#include "symrestore/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/QR>

namespace symrestore {

std::string_view to_string(GateSymmetry symmetry) {
    switch (symmetry) {
        case GateSymmetry::None:
            return "none";
        case GateSymmetry::U1:
            return "u1";
        case GateSymmetry::Z2:
            return "z2";
        case GateSymmetry::SU2:
            return "su2";
    }
    throw std::invalid_argument("unknown GateSymmetry value");
}

GateSymmetry parse_gate_symmetry(std::string_view name) {
    for (auto s : {GateSymmetry::None, GateSymmetry::U1, GateSymmetry::Z2, GateSymmetry::SU2}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown symmetry '" + std::string(name) + "' (expected none|u1|z2|su2)");
}

ComplexMatrix sample_haar_unitary(size_t dim, RandomSource &rng) {
    if (dim == 0) {
        throw std::invalid_argument("sample_haar_unitary needs dim >= 1");
    }
    auto d = static_cast<Eigen::Index>(dim);
    ComplexMatrix z(d, d);
    for (Eigen::Index c = 0; c < d; c++) {
        for (Eigen::Index r = 0; r < d; r++) {
            z(r, c) = rng.complex_normal();
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix &r = qr.matrixQR();
    for (Eigen::Index c = 0; c < d; c++) {
        complex rc = r(c, c);
        double mag = std::abs(rc);
        complex phase = mag > 0 ? rc / mag : complex{1.0, 0.0};
        q.col(c) *= phase;
    }
    return q;
}

namespace {

complex random_phase(RandomSource &rng) {
    double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return {std::cos(phi), std::sin(phi)};
}

Matrix4c pauli_pair_sum(const Eigen::Matrix2cd &p) {
    Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    Matrix4c out;
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            out(r, c) = p(r / 2, c / 2) * id(r % 2, c % 2) + id(r / 2, c / 2) * p(r % 2, c % 2);
        }
    }
    return out;
}

Matrix4c kron2(const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b) {
    Matrix4c out;
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            out(r, c) = a(r / 2, c / 2) * b(r % 2, c % 2);
        }
    }
    return out;
}

Eigen::Matrix2cd pauli(char axis) {
    Eigen::Matrix2cd m;
    const complex i{0.0, 1.0};
    switch (axis) {
        case 'x':
            m << 0, 1, 1, 0;
            break;
        case 'y':
            m << 0, -i, i, 0;
            break;
        default:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

}  // namespace

TwoQubitGate sample_haar_gate(RandomSource &rng) {
    return {sample_haar_unitary(4, rng), GateSymmetry::None};
}

TwoQubitGate sample_u1_gate(RandomSource &rng) {
    Matrix4c u = Matrix4c::Zero();
    u(0, 0) = random_phase(rng);
    ComplexMatrix middle = sample_haar_unitary(2, rng);
    u.block<2, 2>(1, 1) = middle;
    u(3, 3) = random_phase(rng);
    return {u, GateSymmetry::U1};
}

const Matrix4c &z2_transform() {
    static const Matrix4c t = [] {
        const double h = 1.0 / std::numbers::sqrt2;
        Matrix4c m;
        m << h, 0, 0, h,
             0, h, h, 0,
             0, h, -h, 0,
             h, 0, 0, -h;
        return m;
    }();
    return t;
}

Matrix4c z2_gate_from_blocks(const Eigen::Matrix2cd &plus_block, const Eigen::Matrix2cd &minus_block) {
    Matrix4c block = Matrix4c::Zero();
    block.block<2, 2>(0, 0) = plus_block;
    block.block<2, 2>(2, 2) = minus_block;
    const Matrix4c &t = z2_transform();
    return t.adjoint() * block * t;
}

TwoQubitGate sample_z2_gate(RandomSource &rng) {
    Eigen::Matrix2cd plus = sample_haar_unitary(2, rng);
    Eigen::Matrix2cd minus = sample_haar_unitary(2, rng);
    return {z2_gate_from_blocks(plus, minus), GateSymmetry::Z2};
}

Matrix4c su2_gate_from_phases(double singlet_phase, double triplet_phase) {
    // Singlet (|01> - |10>)/sqrt2 in the |b_i b_j> ordering.
    Matrix4c singlet = Matrix4c::Zero();
    singlet(1, 1) = 0.5;
    singlet(2, 2) = 0.5;
    singlet(1, 2) = -0.5;
    singlet(2, 1) = -0.5;
    Matrix4c triplet = Matrix4c::Identity() - singlet;
    complex es{std::cos(singlet_phase), std::sin(singlet_phase)};
    complex et{std::cos(triplet_phase), std::sin(triplet_phase)};
    return es * singlet + et * triplet;
}

TwoQubitGate sample_su2_gate(RandomSource &rng) {
    double phi_s = rng.uniform(0.0, 2.0 * std::numbers::pi);
    double phi_t = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return {su2_gate_from_phases(phi_s, phi_t), GateSymmetry::SU2};
}

TwoQubitGate sample_gate(GateSymmetry symmetry, RandomSource &rng) {
    switch (symmetry) {
        case GateSymmetry::None:
            return sample_haar_gate(rng);
        case GateSymmetry::U1:
            return sample_u1_gate(rng);
        case GateSymmetry::Z2:
            return sample_z2_gate(rng);
        case GateSymmetry::SU2:
            return sample_su2_gate(rng);
    }
    throw std::invalid_argument("unknown GateSymmetry value");
}

std::vector<Matrix4c> symmetry_generators(GateSymmetry symmetry) {
    switch (symmetry) {
        case GateSymmetry::None:
            return {};
        case GateSymmetry::U1:
            return {pauli_pair_sum(pauli('z'))};
        case GateSymmetry::Z2:
            return {kron2(pauli('x'), pauli('x'))};
        case GateSymmetry::SU2:
            return {pauli_pair_sum(pauli('x')), pauli_pair_sum(pauli('y')), pauli_pair_sum(pauli('z'))};
    }
    throw std::invalid_argument("unknown GateSymmetry value");
}

SymmetryCheck verify_symmetry(const TwoQubitGate &gate, double tolerance) {
    SymmetryCheck check;
    check.max_violation = unitarity_violation(gate.matrix);
    for (const auto &g : symmetry_generators(gate.symmetry)) {
        Matrix4c comm = gate.matrix * g - g * gate.matrix;
        check.max_violation = std::max(check.max_violation, comm.cwiseAbs().maxCoeff());
    }
    check.ok = check.max_violation < tolerance;
    return check;
}

}  // namespace symrestore
