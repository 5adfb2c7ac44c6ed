#include <benchmark/benchmark.h>

#include "rpl/norms.hpp"
#include "rpl/rough_fields.hpp"

namespace {

rpl::SampleSet heavy_samples(int n) {
    const rpl::Grid grid(n);
    return rpl::SampleSet::from_triangle_values(grid,
                                                rpl::lognormal_triangle_values(grid, 7, 3.0));
}

void BM_LebesgueNorm(benchmark::State& state) {
    const rpl::NormEvaluator ev(heavy_samples(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(ev.lebesgue(1.4));
}

void BM_MarcinkiewiczNorm(benchmark::State& state) {
    const rpl::NormEvaluator ev(heavy_samples(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(ev.marcinkiewicz(1.5));
}

void BM_LuxemburgNorm(benchmark::State& state) {
    const rpl::NormEvaluator ev(heavy_samples(static_cast<int>(state.range(0))));
    const rpl::ZygmundParams zp = rpl::ZygmundParams::with_convex_const(1.5, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(ev.luxemburg(zp));
}

void BM_ZygmundNorm(benchmark::State& state) {
    const rpl::NormEvaluator ev(heavy_samples(static_cast<int>(state.range(0))));
    const rpl::ZygmundParams zp = rpl::ZygmundParams::with_convex_const(1.5, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(ev.zygmund(zp));
}

void BM_GrandNorm(benchmark::State& state) {
    const rpl::NormEvaluator ev(heavy_samples(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(ev.grand(1.5, 1.0));
}

} // namespace

BENCHMARK(BM_LebesgueNorm)->Arg(64)->Arg(128);
BENCHMARK(BM_MarcinkiewiczNorm)->Arg(64)->Arg(128);
BENCHMARK(BM_LuxemburgNorm)->Arg(64)->Arg(128);
BENCHMARK(BM_ZygmundNorm)->Arg(64)->Arg(128);
BENCHMARK(BM_GrandNorm)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
