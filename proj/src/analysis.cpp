#include "riesz/analysis.hpp"

#include "riesz/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

namespace riesz {

const char* to_string(ReturnBranch b)
{
    switch (b) {
    case ReturnBranch::start:
        return "start";
    case ReturnBranch::first_step:
        return "first_step";
    case ReturnBranch::before_representable:
        return "before_representable";
    case ReturnBranch::representable:
        return "representable";
    case ReturnBranch::after_representable:
        return "after_representable";
    case ReturnBranch::zero:
        return "zero";
    }
    return "?";
}

Rational ReturnLaw::value(const Rational& alpha_sq, const Rational& beta_sq) const
{
    switch (weight) {
    case Weight::one:
        return scale;
    case Weight::alpha_sq:
        return scale * alpha_sq;
    case Weight::beta_sq:
        return scale * beta_sq;
    case Weight::none:
        break;
    }
    return Rational(0);
}

double ReturnLaw::value(double alpha_sq, double beta_sq) const
{
    switch (weight) {
    case Weight::one:
        return scale.get_d();
    case Weight::alpha_sq:
        return scale.get_d() * alpha_sq;
    case Weight::beta_sq:
        return scale.get_d() * beta_sq;
    case Weight::none:
        break;
    }
    return 0.0;
}

namespace {

// p for a positive multiple of m that is a signed sum of distinct powers, else -1.
int representable_digits(std::int64_t r, int m)
{
    if (r <= 0)
        return -1;
    const auto rep = signed_digits(r, m);
    return rep.representable ? rep.nonzero : -1;
}

std::int64_t ipow(std::int64_t base, int exponent)
{
    std::int64_t v = 1;
    for (int i = 0; i < exponent; ++i)
        v *= base;
    return v;
}

void require_normalized(Amplitude alpha, Amplitude beta)
{
    const double n = std::norm(alpha) + std::norm(beta);
    if (std::abs(n - 1.0) > 1e-12)
        throw ArgumentError("initial state is not normalized: |alpha|^2 + |beta|^2 = " + std::to_string(n));
}

} // namespace

ReturnLaw classify_return_time(std::int64_t t, int m)
{
    if (t < 0)
        throw ArgumentError("return time must be non-negative");
    if (m < 3)
        throw ArgumentError("closed-form return law needs m >= 3, got " + std::to_string(m));

    ReturnLaw law;
    law.time = t;
    law.scale = 1;
    if (t == 0) {
        law.branch = ReturnBranch::start;
        law.weight = ReturnLaw::Weight::one;
        return law;
    }
    if (t == 1) {
        law.branch = ReturnBranch::first_step;
        law.weight = ReturnLaw::Weight::beta_sq;
        return law;
    }
    // Representable times are multiples of m >= 3, so at most one offset hits.
    struct Offset {
        std::int64_t delta;
        ReturnBranch branch;
        ReturnLaw::Weight weight;
    };
    constexpr Offset offsets[] = {
        {1, ReturnBranch::before_representable, ReturnLaw::Weight::alpha_sq},
        {0, ReturnBranch::representable, ReturnLaw::Weight::one},
        {-1, ReturnBranch::after_representable, ReturnLaw::Weight::beta_sq},
    };
    for (const auto& o : offsets) {
        const int p = representable_digits(t + o.delta, m);
        if (p < 0)
            continue;
        law.branch = o.branch;
        law.weight = o.weight;
        law.digits = p;
        law.scale = inverse_power(4, static_cast<unsigned>(p));
        return law;
    }
    law.branch = ReturnBranch::zero;
    law.weight = ReturnLaw::Weight::none;
    law.scale = 0;
    return law;
}

double return_prob_closed_form(std::int64_t t, Amplitude alpha, Amplitude beta, int m)
{
    require_normalized(alpha, beta);
    return classify_return_time(t, m).value(std::norm(alpha), std::norm(beta));
}

Rational return_prob_simple(std::int64_t t, int m)
{
    return classify_return_time(t, m).value(Rational(1), Rational(0));
}

Spinor origin_amplitude_moments(std::int64_t n, Amplitude alpha, Amplitude beta, const MeasureSpec& spec)
{
    if (n < 0)
        throw ArgumentError("origin_amplitude_moments: n must be non-negative");
    const double prev = moment(n - 1, spec).get_d();
    const double here = moment(n, spec).get_d();
    const double next = moment(n + 1, spec).get_d();
    return {alpha * here + beta * prev, alpha * next + beta * here};
}

Rational origin_probability_moments(std::int64_t n, const Rational& alpha, const Rational& beta,
                                    const MeasureSpec& spec)
{
    if (n < 0)
        throw ArgumentError("origin_probability_moments: n must be non-negative");
    const Rational prev = moment(n - 1, spec);
    const Rational here = moment(n, spec);
    const Rational next = moment(n + 1, spec);
    const Rational left = alpha * here + beta * prev;
    const Rational right = alpha * next + beta * here;
    return left * left + right * right;
}

Rational localization_witness(const MeasureSpec& spec, int k_max)
{
    if (spec.fold() < 3)
        throw ArgumentError("localization_witness: m = 2 gives the trivial walk, use m >= 3");
    if (k_max < 1)
        throw ArgumentError("localization_witness: k_max must be at least 1");
    Rational best = 1;
    std::int64_t t = 1;
    for (int k = 1; k <= k_max; ++k) {
        t *= spec.fold();
        best = std::min(best, origin_probability_moments(t, Rational(1), Rational(0), spec));
    }
    return best;
}

double nu(std::span<const double> row, std::int64_t x)
{
    if (x < 1)
        throw ArgumentError("nu: x must be at least 1");
    auto at = [&](std::int64_t i) { return static_cast<std::size_t>(i) < row.size() ? row[static_cast<std::size_t>(i)] : 0.0; };
    return at(x - 1) + at(x);
}

std::int64_t s_sum(int k)
{
    if (k < 0)
        throw ArgumentError("s_sum: k must be non-negative");
    return (ipow(4, k + 1) - 4) / 3;
}

namespace {

void require_set_index(int n, int lowest)
{
    if (n < lowest || n > 24)
        throw ArgumentError("set index must be in [" + std::to_string(lowest) + ", 24], got " + std::to_string(n));
}

// 1 - scale * sum_{i=1..len} base^{-i} k_i over all binary tuples.
std::vector<Rational> digit_set(int len, unsigned base, const Rational& scale)
{
    std::vector<Rational> out;
    out.reserve(std::size_t{1} << len);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        Rational sum = 0;
        for (int i = 1; i <= len; ++i) {
            if (mask >> (i - 1) & 1)
                sum += inverse_power(base, static_cast<unsigned>(i));
        }
        out.push_back(1 - scale * sum);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<std::int64_t> support_set_K(int n)
{
    require_set_index(n, 1);
    std::vector<std::int64_t> out;
    const std::int64_t top = ipow(4, n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        std::int64_t x = top;
        for (int i = 1; i <= n - 1; ++i) {
            if (mask >> (i - 1) & 1)
                x -= ipow(4, n - i);
        }
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> support_set_Ktilde(int n)
{
    require_set_index(n, 1);
    return digit_set(n - 1, 4, Rational(1));
}

std::vector<Rational> cantor_R(int n)
{
    require_set_index(n, 0);
    return digit_set(n, 3, Rational(2));
}

std::vector<Rational> quarter_M(int n)
{
    require_set_index(n, 0);
    return digit_set(n, 4, Rational(3));
}

DistributionReport check_conjecture_distribution(int n, std::span<const double> row)
{
    DistributionReport report;
    report.n = n;
    report.origin_mass = row.empty() ? 0.0 : row[0];
    const auto K = support_set_K(n);
    const double nominal = 0.75 / std::ldexp(1.0, n - 1);

    std::set<std::int64_t> allowed{0};
    for (auto x : K) {
        const double v = nu(row, x);
        SiteDeviation d{x, v, v / nominal - 1.0};
        report.max_abs_epsilon = std::max(report.max_abs_epsilon, std::abs(d.epsilon));
        report.any_exact_epsilon = report.any_exact_epsilon || d.epsilon == 0.0;
        report.sites.push_back(d);
        allowed.insert(x);
        allowed.insert(x - 1);
    }
    for (std::size_t x = 0; x < row.size(); ++x) {
        if (!allowed.contains(static_cast<std::int64_t>(x)))
            report.max_leakage = std::max(report.max_leakage, row[x]);
    }
    return report;
}

double check_selfsimilarity(std::int64_t t, std::span<const double> row_2t, std::span<const double> row_8t)
{
    if (t < 1)
        throw ArgumentError("check_selfsimilarity: t must be at least 1");
    const auto limit_2t = static_cast<std::size_t>(2 * t + 2);
    const auto limit_8t = static_cast<std::size_t>(8 * t + 2);
    if (row_2t.size() > limit_2t || row_8t.size() > limit_8t)
        throw ArgumentError("check_selfsimilarity: rows of length " + std::to_string(row_2t.size()) + " and " +
                            std::to_string(row_8t.size()) + " do not fit times " + std::to_string(2 * t) + " and " +
                            std::to_string(8 * t));
    auto at = [](std::span<const double> row, std::int64_t x) {
        return static_cast<std::size_t>(x) < row.size() ? row[static_cast<std::size_t>(x)] : 0.0;
    };
    double worst = std::abs(at(row_2t, 0) - at(row_8t, 0));
    for (std::int64_t k = 1; k <= t; ++k) {
        const double coarse = at(row_2t, 2 * k - 1) + at(row_2t, 2 * k);
        double fine = 0.0;
        for (std::int64_t y = 8 * k - 7; y <= 8 * k; ++y)
            fine += at(row_8t, y);
        worst = std::max(worst, std::abs(coarse - fine));
    }
    return worst;
}

LimitHistogram limit_histogram(int n, std::span<const double> row, double mass_floor)
{
    LimitHistogram h;
    h.n = n;
    h.origin_mass = row.empty() ? 0.0 : row[0];
    const std::int64_t scale = ipow(4, n);
    const double slack = std::ldexp(1.0, 2 - 2 * n); // 4^{1-n}
    const auto ktilde = support_set_Ktilde(n);
    std::vector<double> targets;
    for (const auto& k : ktilde)
        targets.push_back(k.get_d());

    double max_point = 0;
    std::size_t x = 1;
    while (x < row.size()) {
        if (row[x] <= mass_floor) {
            ++x;
            continue;
        }
        double mass = 0;
        for (; x < row.size() && row[x] > mass_floor; ++x) {
            const double point = static_cast<double>(x) / static_cast<double>(scale);
            h.min_support_point = std::min(h.min_support_point, point);
            max_point = std::max(max_point, point);
            double nearest = std::numeric_limits<double>::infinity();
            for (double k : targets)
                nearest = std::min(nearest, std::abs(point - k));
            h.max_distance_to_ktilde = std::max(h.max_distance_to_ktilde, nearest);
            mass += row[x];
        }
        h.points.push_back({Rational(static_cast<long>(x - 1), static_cast<unsigned long>(scale)), mass});
        h.points.back().position.canonicalize();
    }
    h.contained = h.min_support_point >= 2.0 / 3.0 - slack && max_point <= 1.0;
    h.converges = h.max_distance_to_ktilde <= slack;
    return h;
}

std::vector<Rational> return_window(std::int64_t center, std::int64_t half_width)
{
    if (half_width < 0 || center - half_width < 0)
        throw ArgumentError("return_window: window leaves the non-negative times");
    std::vector<Rational> out;
    for (std::int64_t t = center - half_width; t <= center + half_width; ++t)
        out.push_back(return_prob_simple(t));
    return out;
}

} // namespace riesz
