// Serial reference kernels against their OpenMP counterparts.
#include "perron/lattice.hpp"
#include "perron/samplers.hpp"

#include <benchmark/benchmark.h>

using namespace perron;

namespace {

Execution mode(const benchmark::State& state)
{
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state)
{
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_SampleOmega(benchmark::State& state)
{
    SamplerConfig c;
    c.seed = 1;
    c.execution = mode(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_omega(static_cast<int>(state.range(1)), 2000, c));
    state.SetItemsProcessed(state.iterations() * 2000);
    label(state);
}
BENCHMARK(BM_SampleOmega)->ArgsProduct({{0, 1}, {21, 64}})->Unit(benchmark::kMillisecond);

void BM_SamplePerronWeighted(benchmark::State& state)
{
    SamplerConfig c;
    c.seed = 2;
    c.method = SamplerMethod::perron_weighted;
    c.execution = mode(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_perron_weighted(21, 2000, c));
    state.SetItemsProcessed(state.iterations() * 2000);
    label(state);
}
BENCHMARK(BM_SamplePerronWeighted)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MetropolisChains(benchmark::State& state)
{
    SamplerConfig c;
    c.seed = 3;
    c.method = SamplerMethod::perron_mh;
    c.mh_chains = 4;
    c.mh_burnin = 2000;
    c.mh_thin = 10;
    c.execution = mode(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_perron_mh(21, 4 * 500, c));
    label(state);
}
BENCHMARK(BM_MetropolisChains)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LatticeCount(benchmark::State& state)
{
    LatticeOptions o;
    o.execution = mode(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_classes(3, make_rational(3), o));
    label(state);
}
BENCHMARK(BM_LatticeCount)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
