#include <benchmark/benchmark.h>

#include "spinflip/catalog.hpp"
#include "spinflip/harness.hpp"
#include "spinflip/measures.hpp"
#include "spinflip/stokes.hpp"

using namespace spinflip;

static void BM_HermitianEigen(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DensityMatrix rho = random_density(n, 1 << n, 42);
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(rho.mat()));
}
BENCHMARK(BM_HermitianEigen)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

static void BM_SnSquared(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DensityMatrix rho = random_density(n, 1 << n, 42);
    for (auto _ : state) benchmark::DoNotOptimize(s_n_squared(rho));
}
BENCHMARK(BM_SnSquared)->Arg(2)->Arg(4)->Arg(6);

static void BM_StokesTensor(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DensityMatrix rho = random_density(n, 1 << n, 42);
    for (auto _ : state) benchmark::DoNotOptimize(stokes_from_density(rho));
}
BENCHMARK(BM_StokesTensor)->Arg(2)->Arg(3)->Arg(4);

static void BM_ConcurrenceMixed(benchmark::State& state) {
    const DensityMatrix rho = random_density(2, 4, 42);
    for (auto _ : state) benchmark::DoNotOptimize(concurrence_mixed(rho));
}
BENCHMARK(BM_ConcurrenceMixed);

static void BM_PartialTrace(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DensityMatrix rho = random_density(n, 1 << n, 42);
    for (auto _ : state) benchmark::DoNotOptimize(partial_trace(rho, {n}));
}
BENCHMARK(BM_PartialTrace)->Arg(3)->Arg(5)->Arg(7);

BENCHMARK_MAIN();
