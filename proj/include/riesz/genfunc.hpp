#pragma once

// Generating-function route to the origin amplitude of the Riesz walk.
//
// The reduced walk on pairs (2x-1, 2x) has coins with a_x = d_x = rho_x,
// b_x = -c_x = xi_x. First-return weights to the right of x satisfy
//   fhat_x(z) = z^2 (b_{x+1} + Delta_{x+1} fhat_{x+1}(z)) / (1 - c_{x+1} fhat_{x+1}(z)),
// and the origin amplitude generating function is
//   Psi0(z) = (1 + xi_1 fhat_1(z^2)) / ((1 - xi_1 z^4) + (xi_1 - z^4) fhat_1(z^2)).

#include "riesz/measure.hpp"
#include "riesz/rational.hpp"
#include "riesz/series.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace riesz {

using RationalMatrix2 = std::array<std::array<Rational, 2>, 2>;

/// Coin entries of one site. a and d may be irrational (rho), so the product
/// a*d is carried exactly and the entries themselves as doubles.
struct CoinWeights {
    double a = 0;
    double d = 0;
    Rational ad;
    Rational b;
    Rational c;

    Rational delta() const { return ad - b * c; }

    /// P~ = [[0,0],[b,a]], Q~ = [[d,c],[0,0]], R~ = [[0,0],[d,c]], S~ = [[b,c],[0,0]].
    std::array<double, 4> p_tilde() const;
    std::array<double, 4> q_tilde() const;
    std::array<double, 4> r_tilde() const;
    std::array<double, 4> s_tilde() const;
};

/// Site weights 0..xi.size(): site 0 is the reflecting boundary
/// (a = d = 0, b = -c = -1), site x >= 1 uses xi[x-1].
class PathWeightMatrices {
public:
    explicit PathWeightMatrices(std::span<const Rational> xi);

    std::size_t sites() const noexcept { return weights_.size(); }
    const CoinWeights& operator[](std::size_t x) const { return weights_.at(x); }

private:
    std::vector<CoinWeights> weights_;
};

/// fhat^(+)_x at a real point z, continued fraction cut at level x + depth
/// with terminal value 0.
double fhat_plus(const PathWeightMatrices& w, std::size_t x, double z, std::size_t depth);

/// Series mode in the lemma variable. Valid order 2 * depth.
ExactSeries fhat_plus_series(const PathWeightMatrices& w, std::size_t x, std::size_t depth);

/// fhat^(-)_x: first returns to x staying at or left of x. The boundary at
/// site 0 makes fhat^(-)_1 = z^2.
ExactSeries fhat_minus_series(const PathWeightMatrices& w, std::size_t x, std::size_t order);

/// Exact xi_1..xi_count of the Riesz measure.
std::vector<Rational> riesz_xi(std::size_t count);

/// Psi0^L(z) to `order` (m = 4 only). depth 0 picks order/2 + 2; smaller
/// explicit depths throw because they would not certify every coefficient.
ExactSeries psi_hat_origin(const MeasureSpec& spec, std::size_t order, std::size_t depth = 0);

/// [[mu_n, mu_{n-1}], [mu_{n+1}, mu_n]]: the origin block of U^n.
RationalMatrix2 origin_transfer(std::int64_t n, const MeasureSpec& spec = MeasureSpec::riesz());

} // namespace riesz
