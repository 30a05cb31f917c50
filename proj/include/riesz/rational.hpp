#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace riesz {

using Rational = mpq_class;

/// "p/q" (or "p" when the denominator is 1).
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

/// 1 / base^exponent.
inline Rational inverse_power(unsigned base, unsigned exponent)
{
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), base, exponent);
    return Rational(mpz_class(1), den);
}

} // namespace riesz
