#include <benchmark/benchmark.h>

#include <cmath>

#include "rcpde/ekman_oracle.hpp"
#include "rcpde/linalg.hpp"
#include "rcpde/monte_carlo.hpp"
#include "rcpde/problem.hpp"
#include "rcpde/quadrature.hpp"

namespace {

void BM_MatExp(benchmark::State& state) {
    const rcpde::Matrix2 m{-0.5, 1.0, -1.0, -0.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(rcpde::mat_exp(m));
    }
}
BENCHMARK(BM_MatExp);

void BM_SweepKernel(benchmark::State& state) {
    const auto p = rcpde::ekman_problem(1.0, 1.0);
    const auto grid = rcpde::QuadratureGrid::from_step(20.0, 20.0 / static_cast<double>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rcpde::sweep_kernel(p, grid, 1.0));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SweepKernel)->Arg(100)->Arg(400)->Arg(1600);

void BM_MidpointInverse(benchmark::State& state) {
    const auto p = rcpde::ekman_problem(1.0, 1.0);
    const auto grid = rcpde::QuadratureGrid::from_step(20.0, 0.05);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rcpde::midpoint_inverse(p, grid, 1.0, 1.0));
    }
}
BENCHMARK(BM_MidpointInverse);

void BM_ExactSolution(benchmark::State& state) {
    const rcpde::ScalarFunction g = [](double) { return 1.0; };
    for (auto _ : state) {
        benchmark::DoNotOptimize(rcpde::exact_solution(1.0, 1.0, g, 1.0, 1.0));
    }
}
BENCHMARK(BM_ExactSolution);

void BM_McMoments(benchmark::State& state) {
    const auto coeffs = rcpde::RandomCoefficients::ekman_example();
    rcpde::MonteCarloConfig cfg;
    cfg.K = 256;
    cfg.seed = 1;
    cfg.grid = rcpde::QuadratureGrid::from_step(10.0, 0.1);
    for (int i = 0; i <= 50; ++i) cfg.z_grid.push_back(0.1 * i);
    cfg.threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rcpde::mc_moments(coeffs, cfg));
    }
}
BENCHMARK(BM_McMoments)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
