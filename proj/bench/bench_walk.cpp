#include "riesz/measure.hpp"
#include "riesz/schur.hpp"
#include "riesz/series.hpp"
#include "riesz/walk.hpp"

#include <benchmark/benchmark.h>

using namespace riesz;

namespace {

// Sieve-shaped parameters; the Schur pipeline itself is too slow at these widths.
VerblunskySequence synthetic_parameters(std::size_t count)
{
    std::vector<double> alphas(count, 0.0);
    for (std::size_t k = 3; k < count; k += 4)
        alphas[k] = (k / 4) % 2 ? -0.3 : 0.4;
    return VerblunskySequence::from_real(std::move(alphas), std::nullopt);
}

// A state spread over `sites` sites, and blocks wide enough to step it.
struct StepFixture {
    CgmvBlocks blocks;
    WalkState state;

    explicit StepFixture(std::size_t sites)
        : blocks(build_blocks(synthetic_parameters(2 * sites + 6), sites + 2)),
          state(0, std::vector<Spinor>(sites, Spinor{{0.1, 0.0}, {0.0, 0.1}}))
    {
    }
};

template <WalkState (*Kernel)(const WalkState&, const CgmvBlocks&)>
void BM_Step(benchmark::State& st)
{
    const StepFixture fx(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(Kernel(fx.state, fx.blocks));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <RealSeries (*Mul)(const RealSeries&, const RealSeries&)>
void BM_SeriesMul(benchmark::State& st)
{
    const auto f = to_real(caratheodory_series(MeasureSpec::riesz(), static_cast<std::size_t>(st.range(0))));
    for (auto _ : st)
        benchmark::DoNotOptimize(Mul(f, f));
}

void BM_Schur(benchmark::State& st)
{
    const auto precision = st.range(1) ? Precision::exact : Precision::real;
    for (auto _ : st)
        benchmark::DoNotOptimize(
            verblunsky_parameters(MeasureSpec::riesz(), static_cast<std::size_t>(st.range(0)), precision));
}

void BM_Evolve(benchmark::State& st)
{
    const auto steps = static_cast<std::size_t>(st.range(0));
    const WalkOperator op(MeasureSpec::riesz(), steps);
    for (auto _ : st) {
        double origin = 0;
        evolve({}, op, steps, [&](const WalkState& s) { origin += probability(s, 0); });
        benchmark::DoNotOptimize(origin);
    }
}

} // namespace

BENCHMARK(BM_Step<step>)->Name("step/parallel")->RangeMultiplier(4)->Range(256, 65536);
BENCHMARK(BM_Step<step_serial>)->Name("step/serial")->RangeMultiplier(4)->Range(256, 65536);
BENCHMARK(BM_SeriesMul<series_mul<double>>)->Name("series_mul/parallel")->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(BM_SeriesMul<series_mul_serial<double>>)->Name("series_mul/serial")->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(BM_Schur)->Name("schur")->ArgsProduct({{64, 256}, {0, 1}})->ArgNames({"count", "exact"});
BENCHMARK(BM_Evolve)->Name("evolve")->Arg(1365)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
