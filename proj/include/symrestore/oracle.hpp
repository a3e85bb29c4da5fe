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

#ifndef SYMRESTORE_ORACLE_HPP
#define SYMRESTORE_ORACLE_HPP

#include <optional>
#include <span>
#include <vector>

#include "symrestore/quantum_core.hpp"

namespace symrestore {

/// Late-time (global random unitary) predictions for the Renyi-2 asymmetry.
///
/// Sums of binomial products are accumulated in the log domain: every term is
/// carried as its logarithm and reduced with a max-shifted pairwise sum, so
/// C(100, 50)-sized coefficients never overflow.
namespace oracle {

/// ln C(n, k); -inf outside 0 <= k <= n.
double log_binomial(long n, long k);

/// ln(sum_i exp(terms[i])) with pairwise summation; -inf for no finite terms.
double log_sum_exp(std::span<const double> terms);

/// ln f(q, p, a, b) with f = sum_{q'} C(b, q - q') C(b, p - q') C(a, q').
double log_f_coeff(long q, long p, long a, long b);
double f_coeff(long q, long p, long a, long b);

struct NonsymAsymmetry {
    /// -ln[(1 + C(2a, a) / 2^N) / (1 + 2^{2a - N})].
    double exact = 0.0;
    /// Same with C(2a, a) replaced by 4^a / sqrt(pi a).
    double stirling = 0.0;
};

/// Haar (non-symmetric) late-time Renyi-2 asymmetry; 0 for a = 0.
NonsymAsymmetry nonsym_late_asymmetry(long num_qubits, long subsystem_size);

/// E[Tr rho_A^2] for a Haar-random state: (2^{N-a} + 2^a) / (2^N + 1).
double nonsym_late_purity(long num_qubits, long subsystem_size);

struct LateTimeQuery {
    long num_qubits = 0;
    long subsystem_size = 0;
    /// Tilted-ferromagnet angle. Used when `weights` is empty.
    std::optional<double> theta;
    /// Charge-sector weights Tr(rho_0 Pi_q), q = 0..N, summing to 1.
    std::vector<double> weights;
};

struct PurityPair {
    double purity_a = 1.0;
    double purity_aq = 1.0;
    /// purity_a - purity_aq, summed on its own so tiny asymmetries keep full
    /// relative precision.
    double excess = 0.0;

    /// ln(purity_a / purity_aq) = log1p(excess / purity_aq) >= 0.
    double renyi2_asymmetry() const;
};

/// Precomputed f tables for one (N, |A|); evaluates the late-time purities for
/// many initial states without recomputing the binomial sums.
class U1SecondMoment {
   public:
    U1SecondMoment(long num_qubits, long subsystem_size);

    long num_qubits() const {
        return n_;
    }
    long subsystem_size() const {
        return a_;
    }

    /// `log_x[q]` = ln(w_q / C(N, q)); -inf marks empty sectors.
    PurityPair purities_from_log_ratios(std::span<const double> log_x) const;
    PurityPair purities(std::span<const double> weights) const;
    PurityPair purities_for_theta(double theta) const;

   private:
    double at(const std::vector<double> &table, long q, long p) const {
        return table[static_cast<size_t>(q * (n_ + 1) + p)];
    }

    long n_;
    long a_;
    std::vector<double> log_f_ab_;  // ln f(q, p, a, b)
    std::vector<double> log_f_ba_;  // ln f(q, p, b, a)
    std::vector<double> log_diag_factor_;  // ln(r_q / (r_q + 1))
};

/// Late-time purities of rho_A and rho_{A,Q} under the U(1) sector-Haar ensemble.
PurityPair u1_late_purities(const LateTimeQuery &query);

/// ln(E[Tr rho_A^2] / E[Tr rho_{A,Q}^2]).
double u1_late_asymmetry_exact(const LateTimeQuery &query);

/// g(theta) = 2 exp[-1/2 ln^2(tan^2(theta/2))].
double gaussian_base(double theta);

struct GaussianEstimate {
    double value = 0.0;
    /// g(theta) >= 1, i.e. theta within about 0.17 pi of pi/2.
    bool valid = false;
};

/// -ln[(1 + g^{2a-N}/sqrt(pi a)) / (1 + g^{2a-N})] for 0 < theta < pi.
GaussianEstimate u1_late_asymmetry_gaussian(long num_qubits, long subsystem_size, double theta);

/// E[rho_A] for the tilted ferromagnet: diagonal with weight
/// cos^{2(a-q')}(theta/2) sin^{2q'}(theta/2) on every basis state of charge q'.
DensityMatrix averaged_rho_a_first_order(long num_qubits, long subsystem_size, double theta);

/// E[rho_A] for arbitrary sector weights w_q:
/// sum_q w_q / C(N, q) C(N - a, q - q') on charge-q' basis states.
DensityMatrix averaged_rho_a_first_order(long num_qubits, long subsystem_size, std::span<const double> weights);

struct ThetaScanResult {
    long num_qubits = 0;
    long subsystem_size = 0;
    double theta_max = 0.0;
    double theta_c = 0.0;
    double peak = 0.0;
    std::vector<double> thetas;
    std::vector<double> curve;
    /// Set when the curve rises or falls on the wrong side of the peak by more
    /// than the tolerance.
    bool not_unimodal = false;
};

/// Maximum grid spacing accepted by theta_scan.
inline constexpr double kMaxThetaStepOverPi = 0.002;

/// Points step, 2 step, ..., up to hi (inclusive within rounding).
std::vector<double> uniform_theta_grid(double step, double hi);

/// argmax of the exact asymmetry over `grid` (ascending) at |A| = round(a_fraction N);
/// values within 1e-12 relative count as ties and go to the smaller angle;
/// theta_c = 2 theta_max.
ThetaScanResult theta_scan(long num_qubits, double a_fraction, std::span<const double> grid);

struct PowerLawFit {
    double prefactor = 0.0;
    double exponent = 0.0;  // y = prefactor * x^{-exponent}
};

/// Least squares on (ln x, ln y).
PowerLawFit fit_power_law(std::span<const double> xs, std::span<const double> ys);

}  // namespace oracle
}  // namespace symrestore

#endif
