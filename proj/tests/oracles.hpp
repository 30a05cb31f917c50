#pragma once

// Independent reference computations used only by the tests.

#include "riesz/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace riesz::oracle {

/// Every signed sum sum_{k=1..K} d_k m^k with d_k in {-1,0,1}, mapped to its
/// count of nonzero digits. Throws if one value has two different digit counts.
inline std::map<std::int64_t, int> signed_power_sums(int m, int max_exponent)
{
    std::map<std::int64_t, int> sums;
    std::vector<int> d(static_cast<std::size_t>(max_exponent), -1);
    while (true) {
        std::int64_t value = 0;
        std::int64_t power = 1;
        int p = 0;
        for (int k = 0; k < max_exponent; ++k) {
            power *= m;
            value += d[static_cast<std::size_t>(k)] * power;
            p += d[static_cast<std::size_t>(k)] != 0;
        }
        auto [it, inserted] = sums.emplace(value, p);
        if (!inserted && it->second != p)
            throw std::logic_error("signed power sum is not unique");
        std::size_t i = 0;
        while (i < d.size() && d[i] == 1)
            d[i++] = -1;
        if (i == d.size())
            break;
        ++d[i];
    }
    return sums;
}

/// Moment by enumeration: 1/2^p if j is a signed sum of distinct powers m^1..m^K.
inline Rational brute_force_moment(std::int64_t j, int m, const std::map<std::int64_t, int>& sums)
{
    auto it = sums.find(j);
    if (it == sums.end())
        return Rational(0);
    return inverse_power(2, static_cast<unsigned>(it->second));
}

} // namespace riesz::oracle
