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

#include "symrestore/initial_states.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace symrestore {

namespace {

constexpr std::pair<InitialKind, std::string_view> kKindNames[] = {
    {InitialKind::Ferro, "ferro"},
    {InitialKind::Neel, "neel"},
    {InitialKind::DomainWall, "domain-wall"},
    {InitialKind::RandomTiltFerro, "random-ferro"},
    {InitialKind::RandomTiltNeel, "random-neel"},
    {InitialKind::Ghz, "ghz"},
    {InitialKind::StaggeredFerro, "staggered-ferro"},
};

bool is_random(InitialKind kind) {
    return kind == InitialKind::RandomTiltFerro || kind == InitialKind::RandomTiltNeel;
}

}  // namespace

std::string_view to_string(InitialKind kind) {
    for (const auto &[k, name] : kKindNames) {
        if (k == kind) {
            return name;
        }
    }
    throw std::invalid_argument("unknown InitialKind value");
}

InitialKind parse_initial_kind(std::string_view name) {
    for (const auto &[k, n] : kKindNames) {
        if (n == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown initial state '" + std::string(name) +
                                "' (expected ferro|neel|domain-wall|random-ferro|random-neel|ghz|staggered-ferro)");
}

void validate(const InitialStateSpec &spec) {
    if (!(spec.theta >= 0.0 && spec.theta <= std::numbers::pi + 1e-12)) {
        throw std::invalid_argument("tilt angle must lie in [0, pi], got " + std::to_string(spec.theta));
    }
    if (!(spec.tilt_width >= 0.0)) {
        throw std::invalid_argument("tilt width must be >= 0, got " + std::to_string(spec.tilt_width));
    }
}

Eigen::Matrix2d tilt_rotation(double angle) {
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    Eigen::Matrix2d r;
    // Columns are the images of |0> and |1>.
    r << c, s,
        -s, c;
    return r;
}

std::vector<int> reference_bits(InitialKind kind, size_t num_qubits) {
    std::vector<int> bits(num_qubits, 0);
    switch (kind) {
        case InitialKind::Neel:
        case InitialKind::RandomTiltNeel:
            for (size_t j = 0; j < num_qubits; j++) {
                bits[j] = static_cast<int>(j % 2);
            }
            break;
        case InitialKind::DomainWall:
            for (size_t j = num_qubits / 2; j < num_qubits; j++) {
                bits[j] = 1;
            }
            break;
        default:
            break;
    }
    return bits;
}

std::vector<double> site_tilts(const InitialStateSpec &spec, size_t num_qubits) {
    std::vector<double> angles(num_qubits, spec.theta);
    if (is_random(spec.kind)) {
        RandomSource rng(spec.tilt_seed);
        for (auto &a : angles) {
            a = rng.uniform(-spec.tilt_width, spec.tilt_width);
        }
    } else if (spec.kind == InitialKind::StaggeredFerro) {
        for (size_t j = 1; j < num_qubits; j += 2) {
            angles[j] = -spec.theta;
        }
    }
    return angles;
}

PureState tilted_product_state(const std::vector<int> &bits, const std::vector<double> &angles) {
    size_t n = bits.size();
    if (n == 0 || angles.size() != n) {
        throw std::invalid_argument("tilted_product_state needs matching non-empty bit and angle lists");
    }
    std::vector<complex> amps(size_t{1} << n);
    // Single-site amplitudes <b|R(angle_j)|bits_j>.
    std::vector<std::array<double, 2>> site(n);
    for (size_t j = 0; j < n; j++) {
        Eigen::Matrix2d r = tilt_rotation(angles[j]);
        site[j] = {r(0, bits[j]), r(1, bits[j])};
    }
    for (size_t idx = 0; idx < amps.size(); idx++) {
        double v = 1.0;
        for (size_t j = 0; j < n; j++) {
            v *= site[j][(idx >> (n - 1 - j)) & 1];
        }
        amps[idx] = v;
    }
    return PureState::from_amplitudes(std::move(amps));
}

PureState build_initial_state(const InitialStateSpec &spec, size_t num_qubits) {
    validate(spec);
    if (num_qubits < 2) {
        throw std::invalid_argument("initial states need N >= 2");
    }
    if (spec.kind == InitialKind::DomainWall && num_qubits % 2 != 0) {
        throw std::invalid_argument("domain-wall state needs an even number of qubits");
    }
    auto angles = site_tilts(spec, num_qubits);
    if (spec.kind != InitialKind::Ghz) {
        return tilted_product_state(reference_bits(spec.kind, num_qubits), angles);
    }
    PureState zeros = tilted_product_state(std::vector<int>(num_qubits, 0), angles);
    PureState ones = tilted_product_state(std::vector<int>(num_qubits, 1), angles);
    std::vector<complex> amps(zeros.dim());
    const double h = 1.0 / std::numbers::sqrt2;
    for (size_t k = 0; k < amps.size(); k++) {
        amps[k] = h * (zeros[k] + ones[k]);
    }
    return PureState::from_amplitudes(std::move(amps));
}

std::vector<double> charge_weights(const PureState &state) {
    std::vector<double> w(state.num_qubits() + 1, 0.0);
    auto amps = state.amplitudes();
    for (size_t idx = 0; idx < amps.size(); idx++) {
        w[static_cast<size_t>(std::popcount(idx))] += std::norm(amps[idx]);
    }
    return w;
}

std::vector<double> ferro_charge_weights(size_t num_qubits, double theta) {
    double c2 = std::cos(theta / 2) * std::cos(theta / 2);
    double s2 = std::sin(theta / 2) * std::sin(theta / 2);
    std::vector<double> w(num_qubits + 1);
    double n = static_cast<double>(num_qubits);
    for (size_t q = 0; q <= num_qubits; q++) {
        double k = static_cast<double>(q);
        double log_binom = std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
        w[q] = std::exp(log_binom) * std::pow(c2, n - k) * std::pow(s2, k);
    }
    return w;
}

}  // namespace symrestore
