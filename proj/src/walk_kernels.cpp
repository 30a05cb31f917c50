#include "riesz/errors.hpp"
#include "riesz/walk.hpp"

#include <string>

namespace riesz {

namespace {

// Below this many sites the fork/join costs more than the update.
constexpr long long kParallelSites = 2048;

void require_coverage(const WalkState& state, const CgmvBlocks& blocks)
{
    const std::size_t reach = state.support_end() + 1;
    if (blocks.max_x < reach)
        throw PreconditionError("step: blocks cover sites up to " + std::to_string(blocks.max_x) +
                                ", evolution needs max_x >= " + std::to_string(reach));
}

inline Spinor site_update(std::span<const Spinor> in, const CgmvBlocks& b, std::size_t x)
{
    const std::size_t n = in.size();
    Spinor v{};
    if (x < n)
        v = b.r[x].apply(in[x]);
    if (x > 0 && x - 1 < n) {
        const Spinor w = b.p[x - 1].apply(in[x - 1]);
        v.left += w.left;
        v.right += w.right;
    }
    if (x + 1 < n) {
        const Spinor w = b.q[x + 1].apply(in[x + 1]);
        v.left += w.left;
        v.right += w.right;
    }
    return v;
}

} // namespace

WalkState step_serial(const WalkState& state, const CgmvBlocks& blocks)
{
    require_coverage(state, blocks);
    const auto in = state.sites();
    std::vector<Spinor> out(in.size() + 1);
    for (std::size_t x = 0; x < out.size(); ++x)
        out[x] = site_update(in, blocks, x);
    return WalkState(state.time() + 1, std::move(out));
}

WalkState step(const WalkState& state, const CgmvBlocks& blocks)
{
    require_coverage(state, blocks);
    const auto in = state.sites();
    std::vector<Spinor> out(in.size() + 1);
    const long long count = static_cast<long long>(out.size());
#pragma omp parallel for schedule(static) if (count > kParallelSites)
    for (long long x = 0; x < count; ++x)
        out[static_cast<std::size_t>(x)] = site_update(in, blocks, static_cast<std::size_t>(x));
    return WalkState(state.time() + 1, std::move(out));
}

} // namespace riesz
