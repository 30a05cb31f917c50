#pragma once

// Truncated formal power series in one variable.
//
// A series of valid order N stores the coefficients of z^0..z^N; everything
// beyond z^N is unknown (not zero). Every operation returns the largest order
// to which its result is actually determined by its inputs.

#include "riesz/errors.hpp"
#include "riesz/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace riesz {

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static bool negligible(const Rational& v, double) { return sgn(v) == 0; }
    static double magnitude(const Rational& v) { return std::abs(v.get_d()); }
    static std::string str(const Rational& v) { return v.get_str(); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static bool negligible(double v, double tol) { return std::abs(v) <= tol; }
    static double magnitude(double v) { return std::abs(v); }
    static std::string str(double v) { return std::to_string(v); }
};

template <class Scalar>
concept SeriesScalar = requires { ScalarTraits<Scalar>::exact; };

template <SeriesScalar Scalar>
class TruncatedSeries {
public:
    using scalar_type = Scalar;
    static constexpr bool exact = ScalarTraits<Scalar>::exact;

    /// The zero series known to order `valid_order`.
    explicit TruncatedSeries(std::size_t valid_order = 0) : coeffs_(valid_order + 1, Scalar(0)) {}

    /// Coefficients z^0..z^N; N = coeffs.size() - 1.
    explicit TruncatedSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw ArgumentError("TruncatedSeries: need at least one coefficient");
    }

    TruncatedSeries(std::initializer_list<Scalar> coeffs)
        : TruncatedSeries(std::vector<Scalar>(coeffs))
    {
    }

    static TruncatedSeries constant(const Scalar& c, std::size_t valid_order)
    {
        TruncatedSeries s(valid_order);
        s.coeffs_[0] = c;
        return s;
    }

    std::size_t valid_order() const noexcept { return coeffs_.size() - 1; }

    const Scalar& operator[](std::size_t n) const { return coeffs_.at(n); }
    Scalar& operator[](std::size_t n) { return coeffs_.at(n); }

    std::span<const Scalar> coeffs() const noexcept { return coeffs_; }

    /// Forget every coefficient above `order`.
    TruncatedSeries truncated(std::size_t order) const
    {
        if (order > valid_order())
            throw PreconditionError("truncated: order " + std::to_string(order) +
                                    " exceeds valid order " + std::to_string(valid_order()));
        return TruncatedSeries(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs)
    {
        coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            coeffs_[n] += rhs.coeffs_[n];
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& rhs)
    {
        coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            coeffs_[n] -= rhs.coeffs_[n];
        return *this;
    }

    TruncatedSeries& operator*=(const Scalar& c)
    {
        for (auto& v : coeffs_)
            v *= c;
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Scalar& c) { return a *= c; }
    friend TruncatedSeries operator*(const Scalar& c, TruncatedSeries a) { return a *= c; }
    friend TruncatedSeries operator-(TruncatedSeries a)
    {
        for (auto& v : a.coeffs_)
            v = -v;
        return a;
    }

    /// Adds c to the constant term.
    friend TruncatedSeries operator+(TruncatedSeries a, const Scalar& c)
    {
        a.coeffs_[0] += c;
        return a;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const Scalar& c)
    {
        a.coeffs_[0] -= c;
        return a;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return a.coeffs_ == b.coeffs_;
    }

    friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s)
    {
        bool first = true;
        for (std::size_t n = 0; n < s.coeffs_.size(); ++n) {
            if (ScalarTraits<Scalar>::negligible(s.coeffs_[n], 0.0))
                continue;
            if (!first)
                os << " + ";
            os << ScalarTraits<Scalar>::str(s.coeffs_[n]);
            if (n > 0)
                os << "*z^" << n;
            first = false;
        }
        if (first)
            os << "0";
        return os << " + O(z^" << s.valid_order() + 1 << ")";
    }

private:
    std::vector<Scalar> coeffs_;
};

using ExactSeries = TruncatedSeries<Rational>;
using RealSeries = TruncatedSeries<double>;

namespace detail {

// Coefficient n of the Cauchy product, terms with a zero factor skipped.
template <class Scalar>
Scalar cauchy_coefficient(std::span<const Scalar> a, std::span<const Scalar> b, std::size_t n)
{
    Scalar acc(0);
    for (std::size_t k = 0; k <= n; ++k) {
        if (ScalarTraits<Scalar>::negligible(a[k], 0.0) || ScalarTraits<Scalar>::negligible(b[n - k], 0.0))
            continue;
        acc += a[k] * b[n - k];
    }
    return acc;
}

} // namespace detail

/// Cauchy product, single-threaded. Reference for the parallel kernel.
template <class Scalar>
TruncatedSeries<Scalar> series_mul_serial(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b)
{
    const std::size_t order = std::min(a.valid_order(), b.valid_order());
    TruncatedSeries<Scalar> out(order);
    for (std::size_t n = 0; n <= order; ++n)
        out[n] = detail::cauchy_coefficient(a.coeffs(), b.coeffs(), n);
    return out;
}

/// Cauchy product truncated at min(valid_order(a), valid_order(b)).
/// Coefficients are independent, so the double field splits them across threads.
template <class Scalar>
TruncatedSeries<Scalar> series_mul(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b)
{
    if constexpr (std::is_same_v<Scalar, double>) {
        const std::size_t order = std::min(a.valid_order(), b.valid_order());
        TruncatedSeries<double> out(order);
        const auto ac = a.coeffs();
        const auto bc = b.coeffs();
        const long long last = static_cast<long long>(order);
#pragma omp parallel for schedule(dynamic, 64) if (order > 512)
        for (long long n = 0; n <= last; ++n)
            out[static_cast<std::size_t>(n)] = detail::cauchy_coefficient(ac, bc, static_cast<std::size_t>(n));
        return out;
    } else {
        return series_mul_serial(a, b);
    }
}

inline constexpr double kReciprocalTolerance = 1e-14;
inline constexpr double kShiftTolerance = 1e-12;

/// b with a*b = 1 to valid_order(a).
template <class Scalar>
TruncatedSeries<Scalar> series_reciprocal(const TruncatedSeries<Scalar>& a)
{
    if (ScalarTraits<Scalar>::negligible(a[0], kReciprocalTolerance))
        throw PreconditionError("non-invertible series: constant term is zero");
    const std::size_t order = a.valid_order();
    TruncatedSeries<Scalar> b(order);
    const Scalar inv0 = Scalar(1) / a[0];
    b[0] = inv0;
    for (std::size_t n = 1; n <= order; ++n) {
        Scalar acc(0);
        for (std::size_t k = 1; k <= n; ++k) {
            if (ScalarTraits<Scalar>::negligible(a[k], 0.0) || ScalarTraits<Scalar>::negligible(b[n - k], 0.0))
                continue;
            acc += a[k] * b[n - k];
        }
        b[n] = -acc * inv0;
    }
    return b;
}

/// a / z^k. The low k coefficients must vanish.
template <class Scalar>
TruncatedSeries<Scalar> series_shift_down(const TruncatedSeries<Scalar>& a, std::size_t k)
{
    if (k == 0)
        throw ArgumentError("series_shift_down: k must be at least 1");
    if (k > a.valid_order())
        throw PreconditionError("series_shift_down: shifting by " + std::to_string(k) +
                                " leaves nothing of a series with valid order " +
                                std::to_string(a.valid_order()));
    for (std::size_t n = 0; n < k; ++n) {
        if (!ScalarTraits<Scalar>::negligible(a[n], kShiftTolerance))
            throw PreconditionError("series not divisible by z^" + std::to_string(k) + ": coefficient of z^" +
                                    std::to_string(n) + " is " + ScalarTraits<Scalar>::str(a[n]));
    }
    auto c = a.coeffs();
    return TruncatedSeries<Scalar>(std::vector<Scalar>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
}

/// z^k * a. Valid order grows by k.
template <class Scalar>
TruncatedSeries<Scalar> series_shift_up(const TruncatedSeries<Scalar>& a, std::size_t k)
{
    std::vector<Scalar> c(k, Scalar(0));
    c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
    return TruncatedSeries<Scalar>(std::move(c));
}

/// a(z^m), valid to order m*N + m - 1.
template <class Scalar>
TruncatedSeries<Scalar> series_compose_monomial(const TruncatedSeries<Scalar>& a, long long m)
{
    if (m <= 0)
        throw ArgumentError("series_compose_monomial: exponent must be positive, got " + std::to_string(m));
    const auto step = static_cast<std::size_t>(m);
    TruncatedSeries<Scalar> out(step * a.valid_order() + step - 1);
    for (std::size_t n = 0; n <= a.valid_order(); ++n)
        out[n * step] = a[n];
    return out;
}

/// Rounds an exact series to doubles.
inline RealSeries to_real(const ExactSeries& s)
{
    std::vector<double> c;
    c.reserve(s.valid_order() + 1);
    for (const auto& v : s.coeffs())
        c.push_back(v.get_d());
    return RealSeries(std::move(c));
}

} // namespace riesz
