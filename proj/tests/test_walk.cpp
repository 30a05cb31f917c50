#include "doctest.h"

#include "riesz/walk.hpp"

#include <cmath>
#include <random>

using namespace riesz;

namespace {

const double kHalfRoot3 = std::sqrt(3.0) / 2;

const WalkOperator& riesz_operator()
{
    static const WalkOperator op(MeasureSpec::riesz(), 400);
    return op;
}

bool close(const Mat2& a, const Mat2& b, double tol = 1e-15)
{
    return std::abs(a.a00 - b.a00) <= tol && std::abs(a.a01 - b.a01) <= tol && std::abs(a.a10 - b.a10) <= tol &&
           std::abs(a.a11 - b.a11) <= tol;
}

double max_deviation(const WalkState& a, const WalkState& b)
{
    const std::size_t n = std::max(a.sites().size(), b.sites().size());
    double worst = 0;
    for (std::size_t x = 0; x < n; ++x) {
        const Spinor u = x < a.sites().size() ? a[x] : Spinor{};
        const Spinor v = x < b.sites().size() ? b[x] : Spinor{};
        worst = std::max({worst, std::abs(u.left - v.left), std::abs(u.right - v.right)});
    }
    return worst;
}

} // namespace

TEST_CASE("Riesz blocks")
{
    const auto& b = riesz_operator().blocks();
    CHECK(close(b.r[0], {0, 1, 0, 0}));
    CHECK(close(b.q[1], {0, 0, 0, 1}));
    CHECK(close(b.r[1], {0, 0, 0.5, 0}));
    CHECK(close(b.p[1], {kHalfRoot3, 0, 0, 0}));
}

TEST_CASE("m = 2 blocks keep the walker at the origin")
{
    const auto seq = verblunsky_parameters(MeasureSpec(2), parameter_budget(5));
    const auto b = build_blocks(seq, 6);
    CHECK(close(b.r[0], {0, 1, 1, 0}));
    CHECK(close(b.p[0], {0, 0, 0, 0}));
    CHECK(close(b.q[1], {0, 0, 0, 0}));
}

TEST_CASE("build_blocks needs enough parameters")
{
    const auto seq = verblunsky_parameters(MeasureSpec::riesz(), 10);
    CHECK_NOTHROW(build_blocks(seq, 4));
    CHECK_THROWS_AS(build_blocks(seq, 5), PreconditionError);
}

TEST_CASE("block operator is unitary on a window")
{
    // Dense matrix on sites 0..W; columns for sites <= W-1 are complete.
    const std::size_t W = 40;
    const auto& b = riesz_operator().blocks();
    const std::size_t dim = 2 * (W + 1);
    std::vector<double> U(dim * dim, 0.0);
    auto put = [&](std::size_t row_site, std::size_t col_site, const Mat2& m) {
        U[(2 * row_site) * dim + 2 * col_site] = m.a00;
        U[(2 * row_site) * dim + 2 * col_site + 1] = m.a01;
        U[(2 * row_site + 1) * dim + 2 * col_site] = m.a10;
        U[(2 * row_site + 1) * dim + 2 * col_site + 1] = m.a11;
    };
    for (std::size_t x = 0; x <= W; ++x) {
        put(x, x, b.r[x]);
        if (x + 1 <= W) {
            put(x + 1, x, b.p[x]);
            put(x, x + 1, b.q[x + 1]);
        }
    }
    const std::size_t complete = 2 * W;
    for (std::size_t i = 0; i < complete; ++i) {
        for (std::size_t j = 0; j < complete; ++j) {
            double dot = 0;
            for (std::size_t k = 0; k < dim; ++k)
                dot += U[k * dim + i] * U[k * dim + j];
            CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) <= 1e-12);
        }
    }
}

TEST_CASE("hand-propagated first steps")
{
    const auto& b = riesz_operator().blocks();
    const auto psi0 = WalkState::localized(1.0, 0.0);
    const auto psi1 = step(psi0, b);
    CHECK(psi1.time() == 1);
    CHECK(std::abs(psi1[1].left - 1.0) <= 1e-15);
    CHECK(psi1.norm_squared() == doctest::Approx(1.0));
    CHECK(probability(psi1, 0) == 0.0);

    const auto psi2 = step(psi1, b);
    CHECK(std::abs(psi2[1].right - 0.5) <= 1e-15);
    CHECK(std::abs(psi2[2].left - kHalfRoot3) <= 1e-15);
    CHECK(std::abs(psi2[1].left) <= 1e-15);
    CHECK(probability(psi2, 2) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(probability(psi2, static_cast<std::int64_t>(psi2.support_end()) + 5) == 0.0);

    const auto zero = step(WalkState::localized(0.0, 0.0), b);
    CHECK(zero.norm_squared() == 0.0);
}

TEST_CASE("evolve pipeline")
{
    const auto states = evolve({1.0, 0.0}, MeasureSpec::riesz(), 4);
    REQUIRE(states.size() == 5);
    CHECK(probability(states[3], 0) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(probability(states[4], 0) == doctest::Approx(0.25).epsilon(1e-14));

    const auto flipped = evolve({0.0, 1.0}, MeasureSpec::riesz(), 1);
    CHECK(probability(flipped[1], 0) == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(evolve({1.0, 1.0}, MeasureSpec::riesz(), 3), ArgumentError);
}

TEST_CASE("step needs block coverage")
{
    const auto seq = verblunsky_parameters(MeasureSpec::riesz(), 10);
    const auto b = build_blocks(seq, 2);
    WalkState s = WalkState::localized(1.0, 0.0);
    s = step(s, b);
    s = step(s, b);
    CHECK_THROWS_AS(step(s, b), PreconditionError);
}

TEST_CASE("parallel step matches serial step exactly")
{
    const WalkOperator op(MeasureSpec::riesz(), 3000);
    std::mt19937 rng(3);
    std::normal_distribution<double> g;
    std::vector<Spinor> sites(2500);
    for (auto& s : sites)
        s = {{g(rng), g(rng)}, {g(rng), g(rng)}};
    const WalkState state(0, sites);
    const auto a = step(state, op.blocks());
    const auto b = step_serial(state, op.blocks());
    CHECK(max_deviation(a, b) == 0.0);
}

TEST_CASE("norm, parity and finite speed")
{
    const auto& op = riesz_operator();
    for (const InitialState init : {InitialState{1.0, 0.0}, InitialState{0.0, 1.0}}) {
        evolve(init, op, 400, [&](const WalkState& s) {
            CHECK(std::abs(s.norm_squared() - 1.0) <= 1e-12);
            if (init.beta == 0.0)
                CHECK(satisfies_parity(s));
            for (std::size_t x = s.time() + 2; x <= s.support_end(); ++x)
                CHECK(probability(s, static_cast<std::int64_t>(x)) == 0.0);
        });
    }
}

TEST_CASE("coin/shift factorization")
{
    const auto& op = riesz_operator();
    const auto xi = nonzero_xi(op.parameters(), 4);

    SUBCASE("two factorized steps equal two matrix steps")
    {
        auto a = WalkState::localized(1.0, 0.0);
        auto b = a;
        for (int i = 0; i < 2; ++i) {
            a = step(a, op.blocks());
            b = coin_shift_step(b, xi);
        }
        CHECK(max_deviation(a, b) <= 1e-14);
    }

    SUBCASE("agreement and the origin boundary relation over 256 steps")
    {
        auto a = WalkState::localized(1.0, 0.0);
        auto b = a;
        Amplitude previous_right = 0.0;
        for (int t = 1; t <= 256; ++t) {
            a = step(a, op.blocks());
            b = coin_shift_step(b, xi);
            CHECK(max_deviation(a, b) <= 1e-12);
            if (t % 2 == 0)
                CHECK(b[0].left == previous_right);
            previous_right = b[0].right;
        }
    }

    SUBCASE("xi = 0 swaps the pair")
    {
        std::vector<Spinor> sites(4);
        sites[1].left = 0.6;
        sites[2].right = 0.8;
        const WalkState s(1, sites);
        const std::vector<double> zeros(4, 0.0);
        const auto out = coin_shift_step(s, zeros);
        CHECK(out[1].right == Amplitude(0.8));
        CHECK(out[2].left == Amplitude(0.6));
    }

    SUBCASE("parity violation")
    {
        std::vector<Spinor> sites(2);
        sites[1].left = 1.0;
        CHECK_THROWS_AS(coin_shift_step(WalkState(0, sites), xi), PreconditionError);
    }
}
