#pragma once

// Moments of the m-fold Riesz-type measures
//   prod_{k>=1} (1 + cos(m^k theta)) dtheta / 2pi
// and their Caratheodory / Schur series. m = 4 is the Riesz measure.

#include "riesz/rational.hpp"
#include "riesz/series.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace riesz {

class MeasureSpec {
public:
    /// Throws ArgumentError for m < 2.
    explicit MeasureSpec(int m);

    static MeasureSpec riesz() { return MeasureSpec(4); }

    int fold() const noexcept { return m_; }

    friend bool operator==(const MeasureSpec&, const MeasureSpec&) = default;

private:
    int m_;
};

/// j = sum_i digits[i] * m^(i+1), digits in {-1, 0, +1}.
struct SignedDigitRep {
    std::vector<int> digits;
    int nonzero = 0;
    bool representable = false;
};

/// Balanced base-m expansion of j over the exponents m^1, m^2, ... with
/// digits restricted to {-1, 0, +1}. Unique when it exists (m >= 3).
SignedDigitRep signed_digits(std::int64_t j, int m);

/// mu_j of the measure. Real moments, so mu_{-j} = mu_j.
Rational moment(std::int64_t j, const MeasureSpec& spec);

/// F(z) = 1 + 2 sum_{n>=1} mu_n z^n to the given order.
ExactSeries caratheodory_series(const MeasureSpec& spec, std::size_t order);

/// G with F(z) = G(z^m): the Caratheodory coefficients at multiples of m.
ExactSeries compressed_caratheodory_series(const MeasureSpec& spec, std::size_t order);

/// f(z) = (1/z) (F - 1) / (F + 1). Valid order drops by one.
template <class Scalar>
TruncatedSeries<Scalar> schur_series(const TruncatedSeries<Scalar>& caratheodory);

extern template ExactSeries schur_series(const ExactSeries&);
extern template RealSeries schur_series(const RealSeries&);

} // namespace riesz
