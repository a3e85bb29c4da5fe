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


#include "symrestore/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace symrestore::oracle {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) {
            s += x;
        }
        return s;
    }
    size_t h = v.size() / 2;
    return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

// ln(1 + e^x) without overflow.
double softplus(double x) {
    if (x > 0) {
        return x + std::log1p(std::exp(-x));
    }
    return std::log1p(std::exp(x));
}

void check_sizes(long n, long a) {
    if (n < 1) {
        throw std::invalid_argument("number of qubits must be >= 1, got " + std::to_string(n));
    }
    if (a < 0 || a > n) {
        throw std::invalid_argument("subsystem size must lie in [0, N], got " + std::to_string(a) +
                                    " for N=" + std::to_string(n));
    }
}

void check_theta(double theta) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi + 1e-12)) {
        throw std::invalid_argument("theta must lie in [0, pi], got " + std::to_string(theta));
    }
}

std::vector<double> log_ratios_from_weights(long n, std::span<const double> weights) {
    if (static_cast<long>(weights.size()) != n + 1) {
        throw std::invalid_argument("expected N+1 = " + std::to_string(n + 1) + " sector weights, got " +
                                    std::to_string(weights.size()));
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw std::invalid_argument("sector weights must be non-negative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw std::invalid_argument("sector weights must sum to 1, got " + std::to_string(total));
    }
    std::vector<double> lx(weights.size());
    for (long q = 0; q <= n; q++) {
        double w = weights[static_cast<size_t>(q)];
        lx[static_cast<size_t>(q)] = w > 0.0 ? std::log(w) - log_binomial(n, q) : kNegInf;
    }
    return lx;
}

std::vector<double> log_ratios_for_theta(long n, double theta) {
    check_theta(theta);
    double lc2 = 2.0 * std::log(std::abs(std::cos(theta / 2)));
    double ls2 = 2.0 * std::log(std::abs(std::sin(theta / 2)));
    std::vector<double> lx(static_cast<size_t>(n + 1));
    for (long q = 0; q <= n; q++) {
        // 0 * -inf must stay 0 at the endpoints.
        double t1 = (n - q) == 0 ? 0.0 : static_cast<double>(n - q) * lc2;
        double t2 = q == 0 ? 0.0 : static_cast<double>(q) * ls2;
        lx[static_cast<size_t>(q)] = t1 + t2;
    }
    return lx;
}

}  // namespace

double log_binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        return kNegInf;
    }
    if (k == 0 || k == n) {
        return 0.0;
    }
    return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
           std::lgamma(static_cast<double>(n - k) + 1);
}

double log_sum_exp(std::span<const double> terms) {
    double m = kNegInf;
    for (double t : terms) {
        if (std::isnan(t)) {
            throw std::invalid_argument("log_sum_exp got NaN");
        }
        m = std::max(m, t);
    }
    if (m == kNegInf) {
        return kNegInf;
    }
    std::vector<double> shifted;
    shifted.reserve(terms.size());
    for (double t : terms) {
        shifted.push_back(std::exp(t - m));
    }
    return m + std::log(pairwise_sum(shifted));
}

double log_f_coeff(long q, long p, long a, long b) {
    if (a < 0 || b < 0) {
        throw std::invalid_argument("f coefficient needs a, b >= 0");
    }
    long lo = std::max({0L, q - b, p - b});
    long hi = std::min({a, q, p});
    std::vector<double> terms;
    for (long k = lo; k <= hi; k++) {
        terms.push_back(log_binomial(b, q - k) + log_binomial(b, p - k) + log_binomial(a, k));
    }
    return log_sum_exp(terms);
}

double f_coeff(long q, long p, long a, long b) {
    return std::exp(log_f_coeff(q, p, a, b));
}

NonsymAsymmetry nonsym_late_asymmetry(long num_qubits, long subsystem_size) {
    check_sizes(num_qubits, subsystem_size);
    NonsymAsymmetry out;
    long a = subsystem_size;
    if (a == 0) {
        return out;
    }
    const double ln2 = std::numbers::ln2;
    double x = static_cast<double>(2 * a - num_qubits) * ln2;
    double t_exact = log_binomial(2 * a, a) - static_cast<double>(num_qubits) * ln2;
    double t_stirling = x - 0.5 * std::log(std::numbers::pi * static_cast<double>(a));
    out.exact = softplus(x) - softplus(t_exact);
    out.stirling = softplus(x) - softplus(t_stirling);
    return out;
}

double nonsym_late_purity(long num_qubits, long subsystem_size) {
    check_sizes(num_qubits, subsystem_size);
    const double ln2 = std::numbers::ln2;
    double la = static_cast<double>(subsystem_size) * ln2;
    double lb = static_cast<double>(num_qubits - subsystem_size) * ln2;
    double ln = static_cast<double>(num_qubits) * ln2;
    double num = std::max(la, lb) + std::log1p(std::exp(-std::abs(la - lb)));
    return std::exp(num - softplus(ln));
}

double PurityPair::renyi2_asymmetry() const {
    return std::log1p(std::max(excess, 0.0) / purity_aq);
}

U1SecondMoment::U1SecondMoment(long num_qubits, long subsystem_size) : n_(num_qubits), a_(subsystem_size) {
    check_sizes(num_qubits, subsystem_size);
    long b = n_ - a_;
    size_t m = static_cast<size_t>(n_ + 1);
    log_f_ab_.resize(m * m);
    log_f_ba_.resize(m * m);
    for (long q = 0; q <= n_; q++) {
        for (long p = q; p <= n_; p++) {
            double ab = log_f_coeff(q, p, a_, b);
            double ba = log_f_coeff(q, p, b, a_);
            log_f_ab_[static_cast<size_t>(q) * m + static_cast<size_t>(p)] = ab;
            log_f_ab_[static_cast<size_t>(p) * m + static_cast<size_t>(q)] = ab;
            log_f_ba_[static_cast<size_t>(q) * m + static_cast<size_t>(p)] = ba;
            log_f_ba_[static_cast<size_t>(p) * m + static_cast<size_t>(q)] = ba;
        }
    }
    log_diag_factor_.resize(m);
    for (long q = 0; q <= n_; q++) {
        log_diag_factor_[static_cast<size_t>(q)] = -std::log1p(std::exp(-log_binomial(n_, q)));
    }
}

PurityPair U1SecondMoment::purities_from_log_ratios(std::span<const double> log_x) const {
    if (static_cast<long>(log_x.size()) != n_ + 1) {
        throw std::invalid_argument("expected N+1 log ratios");
    }
    std::vector<double> shared;   // terms in both purities
    std::vector<double> only_a;   // off-diagonal f(q, p, b, a) terms
    for (long q = 0; q <= n_; q++) {
        double lq = log_x[static_cast<size_t>(q)];
        if (lq == kNegInf) {
            continue;
        }
        for (long p = 0; p <= n_; p++) {
            double lp = log_x[static_cast<size_t>(p)];
            if (lp == kNegInf) {
                continue;
            }
            if (p == q) {
                double base = 2 * lq + log_diag_factor_[static_cast<size_t>(q)];
                shared.push_back(base + at(log_f_ab_, q, q));
                shared.push_back(base + at(log_f_ba_, q, q));
            } else {
                shared.push_back(lq + lp + at(log_f_ab_, q, p));
                only_a.push_back(lq + lp + at(log_f_ba_, q, p));
            }
        }
    }
    double l_shared = log_sum_exp(shared);
    double l_only = log_sum_exp(only_a);
    PurityPair out;
    out.purity_aq = std::exp(l_shared);
    double l_a = l_only == kNegInf ? l_shared : std::max(l_shared, l_only) + std::log1p(std::exp(-std::abs(l_shared - l_only)));
    out.purity_a = std::exp(l_a);
    out.excess = std::exp(l_only);
    return out;
}

PurityPair U1SecondMoment::purities(std::span<const double> weights) const {
    auto lx = log_ratios_from_weights(n_, weights);
    return purities_from_log_ratios(lx);
}

PurityPair U1SecondMoment::purities_for_theta(double theta) const {
    auto lx = log_ratios_for_theta(n_, theta);
    return purities_from_log_ratios(lx);
}

PurityPair u1_late_purities(const LateTimeQuery &query) {
    U1SecondMoment moment(query.num_qubits, query.subsystem_size);
    if (!query.weights.empty()) {
        return moment.purities(query.weights);
    }
    if (!query.theta) {
        throw std::invalid_argument("late-time query needs either theta or sector weights");
    }
    return moment.purities_for_theta(*query.theta);
}

double u1_late_asymmetry_exact(const LateTimeQuery &query) {
    return u1_late_purities(query).renyi2_asymmetry();
}

double gaussian_base(double theta) {
    if (!(theta > 0.0 && theta < std::numbers::pi)) {
        throw std::invalid_argument("gaussian form needs 0 < theta < pi, got " + std::to_string(theta));
    }
    double t = std::tan(theta / 2);
    double l = std::log(t * t);
    return 2.0 * std::exp(-0.5 * l * l);
}

GaussianEstimate u1_late_asymmetry_gaussian(long num_qubits, long subsystem_size, double theta) {
    check_sizes(num_qubits, subsystem_size);
    double g = gaussian_base(theta);
    GaussianEstimate out;
    out.valid = g >= 1.0;
    long a = subsystem_size;
    if (a == 0) {
        return out;
    }
    double x = static_cast<double>(2 * a - num_qubits) * std::log(g);
    double t = x - 0.5 * std::log(std::numbers::pi * static_cast<double>(a));
    out.value = softplus(x) - softplus(t);
    return out;
}

DensityMatrix averaged_rho_a_first_order(long num_qubits, long subsystem_size, double theta) {
    check_sizes(num_qubits, subsystem_size);
    check_theta(theta);
    double c2 = std::cos(theta / 2) * std::cos(theta / 2);
    double s2 = std::sin(theta / 2) * std::sin(theta / 2);
    size_t dim = size_t{1} << subsystem_size;
    ComplexMatrix rho = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (size_t i = 0; i < dim; i++) {
        int qp = std::popcount(i);
        rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
            std::pow(c2, subsystem_size - qp) * std::pow(s2, qp);
    }
    return DensityMatrix(std::move(rho));
}

DensityMatrix averaged_rho_a_first_order(long num_qubits, long subsystem_size, std::span<const double> weights) {
    check_sizes(num_qubits, subsystem_size);
    auto lx = log_ratios_from_weights(num_qubits, weights);
    long b = num_qubits - subsystem_size;
    std::vector<double> per_charge(static_cast<size_t>(subsystem_size + 1));
    for (long qp = 0; qp <= subsystem_size; qp++) {
        std::vector<double> terms;
        for (long q = 0; q <= num_qubits; q++) {
            terms.push_back(lx[static_cast<size_t>(q)] + log_binomial(b, q - qp));
        }
        per_charge[static_cast<size_t>(qp)] = std::exp(log_sum_exp(terms));
    }
    size_t dim = size_t{1} << subsystem_size;
    ComplexMatrix rho = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (size_t i = 0; i < dim; i++) {
        rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
            per_charge[static_cast<size_t>(std::popcount(i))];
    }
    return DensityMatrix(std::move(rho));
}

std::vector<double> uniform_theta_grid(double step, double hi) {
    if (!(step > 0.0) || !(hi >= step)) {
        throw std::invalid_argument("theta grid needs 0 < step <= hi");
    }
    auto count = static_cast<size_t>(std::floor(hi / step + 1e-9));
    std::vector<double> grid(count);
    for (size_t k = 0; k < count; k++) {
        grid[k] = static_cast<double>(k + 1) * step;
    }
    return grid;
}

ThetaScanResult theta_scan(long num_qubits, double a_fraction, std::span<const double> grid) {
    if (grid.size() < 2) {
        throw std::invalid_argument("theta scan needs at least two grid points");
    }
    const double max_step = kMaxThetaStepOverPi * std::numbers::pi * (1.0 + 1e-9);
    for (size_t k = 1; k < grid.size(); k++) {
        double d = grid[k] - grid[k - 1];
        if (!(d > 0.0)) {
            throw std::invalid_argument("theta grid must be strictly ascending");
        }
        if (d > max_step) {
            throw std::invalid_argument("theta grid spacing exceeds 0.002 pi");
        }
    }
    if (!(a_fraction > 0.0 && a_fraction <= 1.0)) {
        throw std::invalid_argument("subsystem fraction must lie in (0, 1]");
    }
    long a = std::lround(a_fraction * static_cast<double>(num_qubits));
    check_sizes(num_qubits, a);
    if (a == 0) {
        throw std::invalid_argument("subsystem fraction rounds to an empty subsystem");
    }

    U1SecondMoment moment(num_qubits, a);
    ThetaScanResult out;
    out.num_qubits = num_qubits;
    out.subsystem_size = a;
    out.thetas.assign(grid.begin(), grid.end());
    out.curve.reserve(grid.size());
    size_t best = 0;
    for (size_t k = 0; k < grid.size(); k++) {
        out.curve.push_back(moment.purities_for_theta(grid[k]).renyi2_asymmetry());
        if (out.curve[k] - out.curve[best] > 1e-12 * out.curve[best]) {
            best = k;
        }
    }
    out.theta_max = grid[best];
    out.theta_c = 2.0 * out.theta_max;
    out.peak = out.curve[best];

    double tol = 1e-12 + 1e-9 * out.peak;
    for (size_t k = 1; k < grid.size(); k++) {
        double d = out.curve[k] - out.curve[k - 1];
        if ((k <= best && d < -tol) || (k > best && d > tol)) {
            out.not_unimodal = true;
            break;
        }
    }
    return out;
}

PowerLawFit fit_power_law(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw std::invalid_argument("power-law fit needs at least two matching points");
    }
    double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        if (!(xs[i] > 0.0 && ys[i] > 0.0)) {
            throw std::invalid_argument("power-law fit needs positive data");
        }
        double lx = std::log(xs[i]);
        double ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0.0) {
        throw std::invalid_argument("power-law fit needs at least two distinct x values");
    }
    double slope = (n * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / n;
    return PowerLawFit{std::exp(intercept), -slope};
}

}  // namespace symrestore::oracle
