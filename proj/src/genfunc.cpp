#include "riesz/genfunc.hpp"

#include "riesz/errors.hpp"
#include "riesz/schur.hpp"

#include <cmath>
#include <string>

namespace riesz {

std::array<double, 4> CoinWeights::p_tilde() const { return {0.0, 0.0, b.get_d(), a}; }
std::array<double, 4> CoinWeights::q_tilde() const { return {d, c.get_d(), 0.0, 0.0}; }
std::array<double, 4> CoinWeights::r_tilde() const { return {0.0, 0.0, d, c.get_d()}; }
std::array<double, 4> CoinWeights::s_tilde() const { return {b.get_d(), c.get_d(), 0.0, 0.0}; }

PathWeightMatrices::PathWeightMatrices(std::span<const Rational> xi)
{
    weights_.reserve(xi.size() + 1);
    CoinWeights boundary;
    boundary.ad = 0;
    boundary.b = -1;
    boundary.c = 1;
    weights_.push_back(boundary);
    for (const auto& v : xi) {
        CoinWeights w;
        w.ad = 1 - v * v;
        const double rho = std::sqrt(w.ad.get_d());
        w.a = rho;
        w.d = rho;
        w.b = v;
        w.c = -v;
        weights_.push_back(std::move(w));
    }
}

namespace {

void require_sites(const PathWeightMatrices& w, std::size_t last)
{
    if (last >= w.sites())
        throw PreconditionError("continued fraction reaches site " + std::to_string(last) + " but weights cover 0.." +
                                std::to_string(w.sites() - 1));
}

} // namespace

double fhat_plus(const PathWeightMatrices& w, std::size_t x, double z, std::size_t depth)
{
    if (depth == 0)
        throw ArgumentError("fhat_plus: depth must be at least 1");
    require_sites(w, x + depth);
    const double z2 = z * z;
    double f = 0.0;
    for (std::size_t level = x + depth; level > x; --level) {
        const auto& cw = w[level];
        f = z2 * (cw.b.get_d() + cw.delta().get_d() * f) / (1.0 - cw.c.get_d() * f);
    }
    return f;
}

ExactSeries fhat_plus_series(const PathWeightMatrices& w, std::size_t x, std::size_t depth)
{
    if (depth == 0)
        throw ArgumentError("fhat_plus_series: depth must be at least 1");
    require_sites(w, x + depth);
    const std::size_t order = 2 * depth;

    // fhat at level x + j only feeds fhat_x through a factor z^(2j), so it is
    // carried to order - 2j. The terminal level is the zero series.
    ExactSeries f(0);
    for (std::size_t j = depth; j >= 1; --j) {
        const auto& cw = w[x + j];
        const std::size_t inner = order - 2 * j;
        const auto numerator = ExactSeries::constant(cw.b, inner) + cw.delta() * f;
        const auto denominator = ExactSeries::constant(Rational(1), inner) - cw.c * f;
        f = series_shift_up(series_mul(numerator, series_reciprocal(denominator)), 2);
    }
    return f;
}

ExactSeries fhat_minus_series(const PathWeightMatrices& w, std::size_t x, std::size_t order)
{
    if (x == 0)
        throw ArgumentError("fhat_minus_series: site must be at least 1");
    if (order < 2)
        throw ArgumentError("fhat_minus_series: order must be at least 2");
    require_sites(w, x - 1);
    ExactSeries f(order);
    for (std::size_t site = 1; site <= x; ++site) {
        const auto& cw = w[site - 1];
        const auto below = f.truncated(order - 2);
        const auto numerator = ExactSeries::constant(cw.c, order - 2) + cw.delta() * below;
        const auto denominator = ExactSeries::constant(Rational(1), order - 2) - cw.b * below;
        f = series_shift_up(series_mul(numerator, series_reciprocal(denominator)), 2);
    }
    return f;
}

std::vector<Rational> riesz_xi(std::size_t count)
{
    const auto seq = verblunsky_parameters(MeasureSpec::riesz(), 4 * count, Precision::exact);
    return nonzero_xi_exact(seq, 4);
}

ExactSeries psi_hat_origin(const MeasureSpec& spec, std::size_t order, std::size_t depth)
{
    if (spec.fold() != 4)
        throw ArgumentError("psi_hat_origin: the coin/shift reduction needs the Riesz sieve (m = 4), got m = " +
                            std::to_string(spec.fold()));
    if (depth == 0)
        depth = order / 2 + 2;
    // fhat_1(z^2) is certified to z^(4 depth + 1).
    if (4 * depth + 1 < order)
        throw ArgumentError("psi_hat_origin: depth " + std::to_string(depth) + " certifies coefficients only to z^" +
                            std::to_string(4 * depth + 1) + ", below the requested order " + std::to_string(order));

    const auto xi = riesz_xi(depth + 1);
    const PathWeightMatrices weights(xi);
    const auto f1 = series_compose_monomial(fhat_plus_series(weights, 1, depth), 2).truncated(order);

    ExactSeries z4(order);
    if (order >= 4)
        z4[4] = 1;
    const Rational& xi1 = xi[0];
    const auto one = ExactSeries::constant(Rational(1), order);
    const auto numerator = one + xi1 * f1;
    const auto denominator = (one - xi1 * z4) + series_mul(ExactSeries::constant(xi1, order) - z4, f1);
    return series_mul(numerator, series_reciprocal(denominator));
}

RationalMatrix2 origin_transfer(std::int64_t n, const MeasureSpec& spec)
{
    if (n < 0)
        throw ArgumentError("origin_transfer: n must be non-negative");
    const Rational here = moment(n, spec);
    return {{{here, moment(n - 1, spec)}, {moment(n + 1, spec), here}}};
}

} // namespace riesz
