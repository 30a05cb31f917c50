#include "riesz/measure.hpp"

#include "riesz/errors.hpp"

#include <string>

namespace riesz {

MeasureSpec::MeasureSpec(int m) : m_(m)
{
    if (m < 2)
        throw ArgumentError("fold parameter m must be at least 2, got " + std::to_string(m));
}

SignedDigitRep signed_digits(std::int64_t j, int m)
{
    if (m < 3)
        throw ArgumentError("signed_digits needs m >= 3, got " + std::to_string(m));

    SignedDigitRep rep;
    if (j == 0) {
        rep.representable = true;
        return rep;
    }
    const int sign = j < 0 ? -1 : 1;
    std::int64_t r = j < 0 ? -j : j;
    if (r % m != 0)
        return rep;
    r /= m;
    while (r != 0) {
        const std::int64_t d = r % m;
        if (d == 0) {
            rep.digits.push_back(0);
            r /= m;
        } else if (d == 1) {
            rep.digits.push_back(sign);
            r = (r - 1) / m;
        } else if (d == m - 1) {
            rep.digits.push_back(-sign);
            r = (r + 1) / m;
        } else {
            rep.digits.clear();
            return rep;
        }
    }
    for (int d : rep.digits)
        rep.nonzero += d != 0;
    rep.representable = true;
    return rep;
}

Rational moment(std::int64_t j, const MeasureSpec& spec)
{
    if (j < 0)
        j = -j;
    if (spec.fold() == 2)
        return Rational(j % 2 == 0 ? 1 : 0);
    if (j == 0)
        return Rational(1);
    const auto rep = signed_digits(j, spec.fold());
    if (!rep.representable)
        return Rational(0);
    return inverse_power(2, static_cast<unsigned>(rep.nonzero));
}

ExactSeries caratheodory_series(const MeasureSpec& spec, std::size_t order)
{
    ExactSeries F(order);
    F[0] = 1;
    for (std::size_t n = 1; n <= order; ++n)
        F[n] = 2 * moment(static_cast<std::int64_t>(n), spec);
    return F;
}

ExactSeries compressed_caratheodory_series(const MeasureSpec& spec, std::size_t order)
{
    ExactSeries G(order);
    G[0] = 1;
    const auto m = static_cast<std::size_t>(spec.fold());
    for (std::size_t n = 1; n <= order; ++n)
        G[n] = 2 * moment(static_cast<std::int64_t>(n * m), spec);
    return G;
}

template <class Scalar>
TruncatedSeries<Scalar> schur_series(const TruncatedSeries<Scalar>& F)
{
    if (F[0] != Scalar(1))
        throw ArgumentError("not a Caratheodory series: constant term is " + ScalarTraits<Scalar>::str(F[0]));
    if (F.valid_order() < 1)
        throw PreconditionError("schur_series: Caratheodory series must be known to order >= 1");
    const auto numerator = F - Scalar(1);
    const auto denominator = F + Scalar(1);
    return series_shift_down(series_mul(numerator, series_reciprocal(denominator)), 1);
}

template ExactSeries schur_series(const ExactSeries&);
template RealSeries schur_series(const RealSeries&);

} // namespace riesz
