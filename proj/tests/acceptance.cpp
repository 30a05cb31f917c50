// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "riesz/analysis.hpp"
#include "riesz/genfunc.hpp"
#include "riesz/measure.hpp"
#include "riesz/schur.hpp"
#include "riesz/walk.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

using namespace riesz;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> info;

    void require(bool ok, const char* fmt, auto... args)
    {
        char buf[256];
        std::snprintf(buf, sizeof buf, fmt, args...);
        if (!detail.empty())
            detail += "; ";
        detail += buf;
        pass = pass && ok;
    }
};

double origin_left(const WalkState& s)
{
    return s[0].left.real();
}

double mass_beyond(const WalkState& s, std::size_t x0)
{
    double m = 0;
    for (std::size_t x = x0 + 1; x <= s.support_end(); ++x)
        m += s[x].norm_squared();
    return m;
}

Spinor site_or_zero(const WalkState& s, std::size_t x)
{
    return x <= s.support_end() ? s[x] : Spinor{};
}

// 1
Outcome return_law_full_horizon()
{
    Outcome o;
    const WalkOperator op(MeasureSpec::riesz(), 1365);
    double worst = 0, zero_worst = 0;
    evolve({}, op, 1365, [&](const WalkState& s) {
        const auto t = static_cast<std::int64_t>(s.time());
        const double expected = return_prob_simple(t).get_d();
        const double sim = probability(s, 0);
        worst = std::max(worst, std::abs(sim - expected));
        if (expected == 0.0)
            zero_worst = std::max(zero_worst, sim);
    });
    o.require(worst <= 1e-9, "max|sim-closed|=%.2e (tol 1e-9)", worst);
    o.require(zero_worst < 1e-18, "max mass where closed form is 0: %.2e (tol 1e-18)", zero_worst);
    return o;
}

// 2
Outcome quarter_returns_and_general_states()
{
    Outcome o;
    const WalkOperator op(MeasureSpec::riesz(), 1024);
    std::vector<std::size_t> times{4, 16, 64, 256, 1024};
    const auto rows = distributions_at(op, times);
    double worst = 0;
    for (const auto& row : rows)
        worst = std::max(worst, std::abs(row[0] - 0.25));
    o.require(worst <= 1e-9, "max|mu_{4^k}(0)-1/4| k=1..5: %.2e (tol 1e-9)", worst);

    const WalkOperator general(MeasureSpec::riesz(), 340);
    std::mt19937_64 rng(20240611);
    std::normal_distribution<double> gauss;
    double gworst = 0;
    for (int trial = 0; trial < 20; ++trial) {
        Amplitude a{gauss(rng), gauss(rng)};
        Amplitude b{gauss(rng), gauss(rng)};
        const double norm = std::sqrt(std::norm(a) + std::norm(b));
        a /= norm;
        b /= norm;
        evolve({a, b}, general, 340, [&](const WalkState& s) {
            const double expected = return_prob_closed_form(static_cast<std::int64_t>(s.time()), a, b);
            gworst = std::max(gworst, std::abs(probability(s, 0) - expected));
        });
    }
    o.require(gworst <= 1e-9, "20 random states, t<=340: max diff %.2e (tol 1e-9)", gworst);
    return o;
}

// 3
Outcome distribution_values()
{
    Outcome o;
    const WalkOperator op(MeasureSpec::riesz(), 64);
    const std::size_t times[] = {4, 16, 64};
    const auto rows = distributions_at(op, times);
    const double d4 = std::abs(nu(rows[0], 4) - 0.75);
    const double d16 = std::max(std::abs(nu(rows[1], 12) - 0.375), std::abs(nu(rows[1], 16) - 0.375));
    o.require(d4 <= 1e-12, "nu_4(4) off by %.1e", d4);
    o.require(d16 <= 1e-12, "nu_16(12,16) off by %.1e", d16);
    const std::int64_t xs[] = {44, 48, 60, 64};
    const double quoted[] = {0.1895, 0.1854, 0.1840, 0.1909};
    double d64 = 0;
    for (int i = 0; i < 4; ++i)
        d64 = std::max(d64, std::abs(nu(rows[2], xs[i]) - quoted[i]));
    o.require(d64 <= 5e-4, "nu_64 at 44,48,60,64 = %.6f %.6f %.6f %.6f, max off %.1e (tol 5e-4)", nu(rows[2], 44),
              nu(rows[2], 48), nu(rows[2], 60), nu(rows[2], 64), d64);
    return o;
}

// 4
Outcome distribution_at_powers_of_four()
{
    Outcome o;
    const WalkOperator op(MeasureSpec::riesz(), 256);
    const std::size_t times[] = {16, 64, 256};
    const auto rows = distributions_at(op, times);
    for (int n = 2; n <= 4; ++n) {
        const auto rep = check_conjecture_distribution(n, rows[static_cast<std::size_t>(n - 2)]);
        const double mass = std::abs(rep.origin_mass - 0.25);
        o.require(mass <= 1e-9 && rep.max_leakage <= 1e-9 && rep.max_abs_epsilon < 0.03 && !rep.any_exact_epsilon,
                  "n=%d: |mass-1/4|=%.1e leak=%.1e max|eps|=%.4f", n, mass, rep.max_leakage, rep.max_abs_epsilon);
    }
    return o;
}

// 5
Outcome cells_two_t_vs_eight_t()
{
    Outcome o;
    std::vector<std::size_t> times;
    for (std::size_t t = 1; t <= 128; t *= 2) {
        times.push_back(2 * t);
        times.push_back(8 * t);
    }
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    const WalkOperator op(MeasureSpec::riesz(), times.back());
    const auto rows = distributions_at(op, times);
    auto row = [&](std::size_t t) {
        return rows[static_cast<std::size_t>(std::lower_bound(times.begin(), times.end(), t) - times.begin())];
    };
    double worst = 0;
    for (std::size_t t = 1; t <= 128; t *= 2)
        worst = std::max(worst, check_selfsimilarity(static_cast<std::int64_t>(t), row(2 * t), row(8 * t)));
    o.require(worst <= 1e-9, "t=1..128: max cell deviation %.2e (tol 1e-9)", worst);
    return o;
}

// 6
Outcome origin_three_routes()
{
    Outcome o;
    const auto spec = MeasureSpec::riesz();
    const auto psi = psi_hat_origin(spec, 200);
    std::size_t exact_mismatch = 0;
    double sim_worst = 0;
    evolve({}, WalkOperator(spec, 200), 200, [&](const WalkState& s) {
        const auto n = static_cast<std::int64_t>(s.time());
        const Rational mu = moment(n, spec);
        if (psi[static_cast<std::size_t>(n)] != mu)
            ++exact_mismatch;
        sim_worst = std::max(sim_worst, std::abs(origin_left(s) - mu.get_d()));
        sim_worst = std::max(sim_worst, std::abs(s[0].left.imag()));
    });
    o.require(exact_mismatch == 0, "series vs moment exact mismatches: %zu", exact_mismatch);
    o.require(sim_worst <= 1e-10, "simulation vs moment: %.2e (tol 1e-10)", sim_worst);
    return o;
}

// 7
Outcome schur_parameters()
{
    Outcome o;
    const auto spec = MeasureSpec::riesz();
    const auto exact = verblunsky_parameters(spec, 160, Precision::exact);
    const bool head = sgn(exact.exact_alpha(0)) == 0 && sgn(exact.exact_alpha(1)) == 0 &&
                      sgn(exact.exact_alpha(2)) == 0 && exact.exact_alpha(3) == Rational(1, 2) &&
                      exact.exact_alpha(7) == Rational(-1, 3);
    o.require(head, "alpha_0..2=0, alpha_3=%s, alpha_7=%s", exact.exact_alpha(3).get_str().c_str(),
              exact.exact_alpha(7).get_str().c_str());

    std::size_t off_sieve = 0;
    for (std::size_t k = 0; k < 160; ++k)
        if (k % 4 != 3 && sgn(exact.exact_alpha(k)) != 0)
            ++off_sieve;
    o.require(off_sieve == 0 && exact.size() == 160, "nonzero off the sieve in 160: %zu", off_sieve);

    const auto real = verblunsky_parameters(spec, 65, Precision::real);
    double diff = 0;
    for (std::size_t k = 0; k <= 64; ++k)
        diff = std::max(diff, std::abs(real.alpha(k) - exact.exact_alpha(k).get_d()));
    o.require(diff <= 1e-12, "exact vs double k<=64: %.2e (tol 1e-12)", diff);

    const auto f = schur_series(caratheodory_series(spec, 17));
    const bool coeffs = f[3] == Rational(1, 2) && f[7] == Rational(-1, 4) && f[11] == Rational(3, 8) &&
                        f[15] == Rational(3, 16);
    o.require(coeffs, "f at z^3,7,11,15 = %s %s %s %s", f[3].get_str().c_str(), f[7].get_str().c_str(),
              f[11].get_str().c_str(), f[15].get_str().c_str());
    return o;
}

// 8
Outcome structural_invariants()
{
    Outcome o;
    const WalkOperator op(MeasureSpec::riesz(), 1365);
    const auto xi = nonzero_xi(op.parameters(), 4);
    double norm_worst = 0, speed_worst = 0, fact_worst = 0;
    bool parity = true;
    std::optional<WalkState> factored;
    evolve({}, op, 1365, [&](const WalkState& s) {
        norm_worst = std::max(norm_worst, std::abs(s.norm_squared() - 1.0));
        parity = parity && satisfies_parity(s, 1e-12);
        speed_worst = std::max(speed_worst, mass_beyond(s, s.time()));
        if (s.time() > 256)
            return;
        factored = factored ? coin_shift_step(*factored, xi) : s;
        const std::size_t end = std::max(s.support_end(), factored->support_end());
        for (std::size_t x = 0; x <= end; ++x) {
            const auto a = site_or_zero(s, x);
            const auto b = site_or_zero(*factored, x);
            fact_worst = std::max({fact_worst, std::abs(a.left - b.left), std::abs(a.right - b.right)});
        }
    });
    o.require(norm_worst <= 1e-12, "norm drift %.2e", norm_worst);
    o.require(parity, "parity %s", parity ? "holds" : "violated");
    o.require(speed_worst == 0.0, "mass beyond x=t: %.1e", speed_worst);
    o.require(fact_worst <= 1e-12, "factorized vs block t<=256: %.2e (tol 1e-12)", fact_worst);
    return o;
}

// 9
Outcome other_folds()
{
    Outcome o;
    double m2 = 0;
    evolve({}, MeasureSpec(2), 100, [&](const WalkState& s) { m2 = std::max(m2, std::abs(probability(s, 0) - 1.0)); });
    o.require(m2 <= 1e-12, "m=2: max|mu_t(0)-1| %.1e", m2);

    for (int m : {3, 5}) {
        const MeasureSpec spec(m);
        double worst = 0, quarter = 0;
        std::int64_t next_power = m;
        evolve({}, spec, 200, [&](const WalkState& s) {
            const auto t = static_cast<std::int64_t>(s.time());
            const double sim = probability(s, 0);
            worst = std::max(worst, std::abs(sim - origin_amplitude_moments(t, 1.0, 0.0, spec).norm_squared()));
            if (t == next_power && t <= m * m * m) {
                quarter = std::max(quarter, std::abs(sim - 0.25));
                next_power *= m;
            }
        });
        o.require(worst <= 1e-9 && quarter <= 1e-9, "m=%d: moment formula %.1e, mu_{m^k}(0) vs 1/4 %.1e", m, worst,
                  quarter);
    }
    return o;
}

// 10
Outcome return_windows()
{
    Outcome o;
    for (int k = 2; k <= 3; ++k) {
        const std::int64_t a = std::int64_t{1} << (2 * k);
        const std::int64_t h = s_sum(k - 1);
        const auto base = return_window(a, h);
        const bool same = return_window(4 * a, h) == base;

        std::vector<Rational> squared;
        for (const auto& v : base)
            squared.push_back(v * v);
        const auto plus = return_window(4 * a + a, h);
        const auto minus = return_window(4 * a - a, h);
        const bool square = plus == squared && minus == squared;

        std::vector<Rational> quarter;
        for (const auto& v : base)
            quarter.push_back(v / 4);
        const bool is_quarter = plus == quarter && minus == quarter;

        o.require(same, "k=%d: W(4^%d)==W(4^%d) %s", k, k + 1, k, same ? "yes" : "no");
        o.require(square, "W(4^%d+-4^%d)==W(4^%d)^2 %s", k + 1, k, k, square ? "yes" : "no");
        char buf[160];
        std::snprintf(buf, sizeof buf, "k=%d: W(4^%d+-4^%d) == W(4^%d)/4 holds: %s (at the centre %s vs %s)", k, k + 1,
                      k, k, is_quarter ? "yes" : "no", plus[static_cast<std::size_t>(h)].get_str().c_str(),
                      base[static_cast<std::size_t>(h)].get_str().c_str());
        o.info.emplace_back(buf);
    }
    return o;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "return law, t in [0, 1365]", return_law_full_horizon},
        {2, "mu_{4^k}(0) = 1/4 and general initial states", quarter_returns_and_general_states},
        {3, "distribution values at t = 4, 16, 64", distribution_values},
        {4, "distribution at t = 4^n, n = 2..4", distribution_at_powers_of_four},
        {5, "cells at 2t against 8t", cells_two_t_vs_eight_t},
        {6, "origin amplitude by three routes, n <= 200", origin_three_routes},
        {7, "Schur parameters and Schur function", schur_parameters},
        {8, "unitarity, parity, finite speed, factorized dynamics", structural_invariants},
        {9, "folds m = 2, 3, 5", other_folds},
        {10, "return-probability windows", return_windows},
    };

    int passed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %2d %s: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), secs);
        for (const auto& line : out.info)
            std::printf("       info: %s\n", line.c_str());
        passed += out.pass ? 1 : 0;
    }
    std::printf("%d/%zu criteria passed\n", passed, criteria.size());
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
