#pragma once

// CGMV quantum walk on the half-line {0, 1, 2, ...}.
//
// The one-step operator is block pentadiagonal:
//   Psi_{t+1}(x) = P_{x-1} Psi_t(x-1) + R_x Psi_t(x) + Q_{x+1} Psi_t(x+1)
// with 2x2 blocks built from the Verblunsky parameters.

#include "riesz/measure.hpp"
#include "riesz/schur.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace riesz {

using Amplitude = std::complex<double>;

struct Spinor {
    Amplitude left;
    Amplitude right;

    double norm_squared() const { return std::norm(left) + std::norm(right); }
};

/// Amplitudes over the occupied prefix [0, support_end] of the half-line.
class WalkState {
public:
    /// Psi_0 = [alpha, beta]^T delta_0.
    static WalkState localized(Amplitude alpha, Amplitude beta);

    WalkState(std::size_t time, std::vector<Spinor> sites);

    std::size_t time() const noexcept { return time_; }
    std::size_t support_end() const noexcept { return sites_.size() - 1; }
    std::span<const Spinor> sites() const noexcept { return sites_; }
    const Spinor& operator[](std::size_t x) const { return sites_.at(x); }

    double norm_squared() const;

    /// mu_t(x) for x = 0..support_end.
    std::vector<double> probabilities() const;

private:
    std::size_t time_;
    std::vector<Spinor> sites_;
};

/// mu_t(x) = |L(x)|^2 + |R(x)|^2; zero off the support.
double probability(const WalkState& state, std::int64_t x);

/// Even t: only L(even x), R(odd x) nonzero. Odd t: only R(even x), L(odd x).
bool satisfies_parity(const WalkState& state, double tolerance = 1e-12);

struct Mat2 {
    double a00 = 0, a01 = 0, a10 = 0, a11 = 0;

    Spinor apply(const Spinor& v) const
    {
        return {a00 * v.left + a01 * v.right, a10 * v.left + a11 * v.right};
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

struct CgmvBlocks {
    std::size_t max_x = 0;
    std::vector<Mat2> p; ///< P_0..P_max_x
    std::vector<Mat2> r; ///< R_0..R_max_x
    std::vector<Mat2> q; ///< Q_0..Q_max_x; Q_0 unused and zero
};

/// Needs alpha_0..alpha_{2 max_x + 1}. A terminated sequence is padded with
/// alpha = 0 past its end (rho = 0 at the end decouples those sites).
CgmvBlocks build_blocks(const VerblunskySequence& seq, std::size_t max_x);

/// One application of the block operator. Sites are updated in parallel.
WalkState step(const WalkState& state, const CgmvBlocks& blocks);

/// Single-threaded reference for step().
WalkState step_serial(const WalkState& state, const CgmvBlocks& blocks);

/// Factorized Riesz dynamics: even -> odd time shifts L up and R down by one
/// site; odd -> even time applies C_x = [[xi_x, rho_x], [rho_x, -xi_x]] to
/// (L(2x-1), R(2x)), with xi_0 = -1 reflecting at the origin.
/// xi[0] holds xi_1. Throws PreconditionError on a parity violation.
WalkState coin_shift_step(const WalkState& state, std::span<const double> xi);

struct InitialState {
    Amplitude alpha{1.0, 0.0};
    Amplitude beta{0.0, 0.0};
};

/// Everything needed to evolve one measure's walk up to a fixed horizon.
class WalkOperator {
public:
    WalkOperator(const MeasureSpec& spec, std::size_t horizon, Precision precision = Precision::automatic);

    const MeasureSpec& measure() const noexcept { return spec_; }
    std::size_t horizon() const noexcept { return horizon_; }
    const VerblunskySequence& parameters() const noexcept { return parameters_; }
    const CgmvBlocks& blocks() const noexcept { return blocks_; }

    WalkState advance(const WalkState& state) const { return step(state, blocks_); }

private:
    MeasureSpec spec_;
    std::size_t horizon_;
    VerblunskySequence parameters_;
    CgmvBlocks blocks_;
};

/// Calls visit(Psi_t) for t = 0..steps. Throws ArgumentError unless
/// |alpha|^2 + |beta|^2 = 1 within 1e-12.
void evolve(const InitialState& initial, const WalkOperator& op, std::size_t steps,
            const std::function<void(const WalkState&)>& visit);

void evolve(const InitialState& initial, const MeasureSpec& spec, std::size_t steps,
            const std::function<void(const WalkState&)>& visit, Precision precision = Precision::automatic);

/// All states Psi_0..Psi_steps.
std::vector<WalkState> evolve(const InitialState& initial, const MeasureSpec& spec, std::size_t steps,
                              Precision precision = Precision::automatic);

/// Probability rows mu_t(.) at the requested times (ascending), Psi_0 = [1,0] delta_0
/// unless given.
std::vector<std::vector<double>> distributions_at(const WalkOperator& op, std::span<const std::size_t> times,
                                                  const InitialState& initial = {});

} // namespace riesz
