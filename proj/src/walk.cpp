#include "riesz/walk.hpp"

#include "riesz/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace riesz {

WalkState WalkState::localized(Amplitude alpha, Amplitude beta)
{
    return WalkState(0, {Spinor{alpha, beta}});
}

WalkState::WalkState(std::size_t time, std::vector<Spinor> sites) : time_(time), sites_(std::move(sites))
{
    if (sites_.empty())
        sites_.push_back({});
}

double WalkState::norm_squared() const
{
    double total = 0;
    for (const auto& s : sites_)
        total += s.norm_squared();
    return total;
}

std::vector<double> WalkState::probabilities() const
{
    std::vector<double> mu(sites_.size());
    std::transform(sites_.begin(), sites_.end(), mu.begin(), [](const Spinor& s) { return s.norm_squared(); });
    return mu;
}

double probability(const WalkState& state, std::int64_t x)
{
    if (x < 0 || static_cast<std::size_t>(x) > state.support_end())
        return 0.0;
    return state[static_cast<std::size_t>(x)].norm_squared();
}

bool satisfies_parity(const WalkState& state, double tolerance)
{
    const bool even_time = state.time() % 2 == 0;
    const auto sites = state.sites();
    for (std::size_t x = 0; x < sites.size(); ++x) {
        const bool even_site = x % 2 == 0;
        // Even time keeps L on even sites; odd time keeps L on odd sites.
        const bool left_allowed = even_time == even_site;
        const Amplitude& forbidden = left_allowed ? sites[x].right : sites[x].left;
        if (std::abs(forbidden) > tolerance)
            return false;
    }
    return true;
}

CgmvBlocks build_blocks(const VerblunskySequence& seq, std::size_t max_x)
{
    const std::size_t needed = 2 * max_x + 2;
    std::vector<double> a(needed, 0.0);
    std::vector<double> rho(needed, 1.0);
    const std::size_t available = std::min(seq.size(), needed);
    if (available < needed && !seq.terminated_at())
        throw PreconditionError("build_blocks: sites up to " + std::to_string(max_x) + " need " +
                                std::to_string(needed) + " Verblunsky parameters, have " +
                                std::to_string(seq.size()));
    for (std::size_t k = 0; k < available; ++k) {
        a[k] = seq.alpha(k);
        rho[k] = seq.rho(k);
    }

    CgmvBlocks b;
    b.max_x = max_x;
    b.p.resize(max_x + 1);
    b.r.resize(max_x + 1);
    b.q.resize(max_x + 1);
    b.r[0] = {a[0], rho[0], rho[0] * a[1], -a[0] * a[1]};
    for (std::size_t x = 0; x <= max_x; ++x) {
        b.p[x] = {rho[2 * x] * rho[2 * x + 1], -a[2 * x] * rho[2 * x + 1], 0.0, 0.0};
        if (x == 0)
            continue;
        b.r[x] = {-a[2 * x - 1] * a[2 * x], -a[2 * x - 1] * rho[2 * x], rho[2 * x] * a[2 * x + 1],
                  -a[2 * x] * a[2 * x + 1]};
        b.q[x] = {0.0, 0.0, rho[2 * x - 1] * a[2 * x], rho[2 * x - 1] * rho[2 * x]};
    }
    return b;
}

WalkState coin_shift_step(const WalkState& state, std::span<const double> xi)
{
    if (!satisfies_parity(state))
        throw PreconditionError("coin_shift_step: state at t = " + std::to_string(state.time()) +
                                " violates the parity pattern");
    const auto in = state.sites();
    const std::size_t n = in.size();
    std::vector<Spinor> out(n + 1);

    if (state.time() % 2 == 0) {
        for (std::size_t x = 0; x < n; ++x) {
            out[x + 1].left = in[x].left;
            if (x > 0)
                out[x - 1].right = in[x].right;
        }
    } else {
        out[0].left = in[0].right;
        for (std::size_t x = 1; 2 * x - 1 < n; ++x) {
            if (x > xi.size())
                throw PreconditionError("coin_shift_step: coin " + std::to_string(x) + " needs xi_" +
                                        std::to_string(x) + ", have " + std::to_string(xi.size()));
            const double c = xi[x - 1];
            const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
            const Amplitude l = in[2 * x - 1].left;
            const Amplitude r = 2 * x < n ? in[2 * x].right : Amplitude{};
            out[2 * x - 1].right = c * l + s * r;
            out[2 * x].left = s * l - c * r;
        }
    }
    return WalkState(state.time() + 1, std::move(out));
}

WalkOperator::WalkOperator(const MeasureSpec& spec, std::size_t horizon, Precision precision)
    : spec_(spec),
      horizon_(horizon),
      parameters_(verblunsky_parameters(spec, parameter_budget(horizon), precision)),
      blocks_(build_blocks(parameters_, horizon + 1))
{
}

namespace {

void require_normalized(const InitialState& initial)
{
    const double n = std::norm(initial.alpha) + std::norm(initial.beta);
    if (std::abs(n - 1.0) > 1e-12)
        throw ArgumentError("initial state is not normalized: |alpha|^2 + |beta|^2 = " + std::to_string(n));
}

} // namespace

void evolve(const InitialState& initial, const WalkOperator& op, std::size_t steps,
            const std::function<void(const WalkState&)>& visit)
{
    require_normalized(initial);
    if (steps > op.horizon())
        throw PreconditionError("evolve: operator built for " + std::to_string(op.horizon()) + " steps, asked for " +
                                std::to_string(steps));
    WalkState state = WalkState::localized(initial.alpha, initial.beta);
    visit(state);
    for (std::size_t t = 0; t < steps; ++t) {
        state = op.advance(state);
        visit(state);
    }
}

void evolve(const InitialState& initial, const MeasureSpec& spec, std::size_t steps,
            const std::function<void(const WalkState&)>& visit, Precision precision)
{
    require_normalized(initial);
    evolve(initial, WalkOperator(spec, steps, precision), steps, visit);
}

std::vector<WalkState> evolve(const InitialState& initial, const MeasureSpec& spec, std::size_t steps,
                              Precision precision)
{
    std::vector<WalkState> states;
    states.reserve(steps + 1);
    evolve(initial, spec, steps, [&](const WalkState& s) { states.push_back(s); }, precision);
    return states;
}

std::vector<std::vector<double>> distributions_at(const WalkOperator& op, std::span<const std::size_t> times,
                                                  const InitialState& initial)
{
    if (!std::is_sorted(times.begin(), times.end()))
        throw ArgumentError("distributions_at: times must be ascending");
    std::vector<std::vector<double>> rows;
    if (times.empty())
        return rows;
    std::size_t next = 0;
    evolve(initial, op, times.back(), [&](const WalkState& s) {
        while (next < times.size() && times[next] == s.time()) {
            rows.push_back(s.probabilities());
            ++next;
        }
    });
    return rows;
}

} // namespace riesz
