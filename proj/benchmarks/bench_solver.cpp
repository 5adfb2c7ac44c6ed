#include <benchmark/benchmark.h>

#include "rpl/hodge.hpp"
#include "rpl/rough_fields.hpp"
#include "rpl/solver.hpp"

namespace {

rpl::VectorField smooth_data(const rpl::Grid& grid) {
    rpl::RoughRecipe r;
    r.kind = rpl::RoughRecipe::Kind::SmoothRandom;
    r.seed = 7;
    return rpl::rough_field(r, grid);
}

void BM_PoissonSolve(benchmark::State& state) {
    const rpl::Grid grid(static_cast<int>(state.range(0)));
    const rpl::ScalarField rhs = rpl::divergence_weak(smooth_data(grid));
    for (auto _ : state) benchmark::DoNotOptimize(rpl::poisson_solve(rhs));
}

void BM_HodgeDecompose(benchmark::State& state) {
    const rpl::Grid grid(static_cast<int>(state.range(0)));
    const rpl::VectorField F = smooth_data(grid);
    for (auto _ : state) benchmark::DoNotOptimize(rpl::hodge_decompose(F));
}

void BM_DirichletSolve(benchmark::State& state) {
    const rpl::Grid grid(static_cast<int>(state.range(0)));
    const rpl::VectorField f = smooth_data(grid);
    const rpl::OperatorSpec spec = rpl::OperatorSpec::identity(3.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(rpl::solve_dirichlet(spec, f, rpl::ScalarField(grid), 1e-10));
}

} // namespace

BENCHMARK(BM_PoissonSolve)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HodgeDecompose)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirichletSolve)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
