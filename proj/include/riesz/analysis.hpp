#pragma once

// Closed-form return laws at the origin and checkers for the self-similarity
// conjectures about the Riesz walk distribution.

#include "riesz/measure.hpp"
#include "riesz/rational.hpp"
#include "riesz/walk.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace riesz {

/// Which case of the return law fired. r is a time representable as
/// m^{k_1} +- m^{k_2} +- ... +- m^{k_p} with p signed digits.
enum class ReturnBranch { start, first_step, before_representable, representable, after_representable, zero };

const char* to_string(ReturnBranch b);

/// mu_t(0) = scale * weight, weight in {1, |alpha|^2, |beta|^2}.
struct ReturnLaw {
    enum class Weight { one, alpha_sq, beta_sq, none };

    std::int64_t time = 0;
    ReturnBranch branch = ReturnBranch::zero;
    int digits = 0; ///< p
    Rational scale; ///< 1/4^p (1 for t = 0, 1)
    Weight weight = Weight::none;

    Rational value(const Rational& alpha_sq, const Rational& beta_sq) const;
    double value(double alpha_sq, double beta_sq) const;
};

/// Case analysis of mu_t(0) for Psi_0 = [alpha, beta]^T delta_0 on the m-fold walk (m >= 3).
ReturnLaw classify_return_time(std::int64_t t, int m = 4);

/// Throws ArgumentError unless |alpha|^2 + |beta|^2 = 1 within 1e-12.
double return_prob_closed_form(std::int64_t t, Amplitude alpha, Amplitude beta, int m = 4);

/// Psi_0 = [1, 0]^T delta_0.
Rational return_prob_simple(std::int64_t t, int m = 4);

/// Psi_n(0) = [alpha mu_n + beta mu_{n-1}, alpha mu_{n+1} + beta mu_n].
Spinor origin_amplitude_moments(std::int64_t n, Amplitude alpha, Amplitude beta, const MeasureSpec& spec);

/// Exact mu_n(0) from the moment formula for a real initial state.
Rational origin_probability_moments(std::int64_t n, const Rational& alpha, const Rational& beta,
                                    const MeasureSpec& spec);

/// min_{1<=k<=k_max} mu_{m^k}(0) for Psi_0 = [1,0]^T delta_0. m = 2 is rejected.
Rational localization_witness(const MeasureSpec& spec, int k_max);

/// nu_t(x) = mu_t(x-1) + mu_t(x), x >= 1. Entries past the row are zero.
double nu(std::span<const double> row, std::int64_t x);

/// s(k) = 4 + 16 + ... + 4^k.
std::int64_t s_sum(int k);

// Point sets describing the support at time 4^n. All returned sorted ascending.
std::vector<std::int64_t> support_set_K(int n);
std::vector<Rational> support_set_Ktilde(int n);
std::vector<Rational> cantor_R(int n);
std::vector<Rational> quarter_M(int n);

struct SiteDeviation {
    std::int64_t x = 0;
    double nu = 0;
    double epsilon = 0; ///< nu / (3/4 * 2^{-(n-1)}) - 1
};

struct DistributionReport {
    int n = 0;
    double origin_mass = 0;
    std::vector<SiteDeviation> sites; ///< one per x in K_n
    double max_abs_epsilon = 0;
    double max_leakage = 0; ///< largest mu(x) off {0} u K_n u (K_n - 1)
    bool any_exact_epsilon = false;
};

/// row = mu_{4^n}(.) for Psi_0 = [1,0]^T delta_0.
DistributionReport check_conjecture_distribution(int n, std::span<const double> row);

/// max_k |P(X_2t/2t in T_k(t)) - P(X_8t/8t in T_k(t))| in the integer-aligned
/// form: cell 0 is the origin, cell k >= 1 is {2k-1, 2k} at 2t and {8k-7..8k} at 8t.
/// Throws ArgumentError if a row is longer than its time allows.
double check_selfsimilarity(std::int64_t t, std::span<const double> row_2t, std::span<const double> row_8t);

struct HistogramPoint {
    Rational position; ///< x / 4^n at the right end of a cluster of occupied sites
    double mass = 0;
};

struct LimitHistogram {
    int n = 0;
    double origin_mass = 0;
    std::vector<HistogramPoint> points;
    double min_support_point = 1; ///< smallest x / 4^n carrying mass, x >= 1
    double max_distance_to_ktilde = 0;
    bool contained = false; ///< all non-origin mass in [2/3 - 4^{1-n}, 1]
    bool converges = false; ///< every occupied x / 4^n within 4^{1-n} of Ktilde_n
};

/// Occupied sites (mu > mass_floor) are grouped into runs of adjacent sites.
LimitHistogram limit_histogram(int n, std::span<const double> row, double mass_floor = 1e-12);

/// Closed-form mu_t(0) for t in [center - half_width, center + half_width].
std::vector<Rational> return_window(std::int64_t center, std::int64_t half_width);

} // namespace riesz
