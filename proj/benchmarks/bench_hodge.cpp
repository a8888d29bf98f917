#include "benchmark/benchmark.h"

#include "k3scan/hodge.hpp"

using namespace k3scan;

static void BM_EulerQuintic(benchmark::State& state)
{
    const WeightVector w({1, 1, 1, 1, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(euler_characteristic(w));
}
BENCHMARK(BM_EulerQuintic);

static void BM_EulerLargeDegree(benchmark::State& state)
{
    const WeightVector w({903, 602, 258, 42, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(euler_characteristic(w));
}
BENCHMARK(BM_EulerLargeDegree);

static void BM_HodgeNumbersSmall(benchmark::State& state)
{
    const WeightVector w({42, 27, 8, 4, 3});
    for (auto _ : state)
        benchmark::DoNotOptimize(hodge_numbers(w));
}
BENCHMARK(BM_HodgeNumbersSmall);

static void BM_HodgeNumbersLargeDegree(benchmark::State& state)
{
    const WeightVector w({903, 602, 258, 42, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(hodge_numbers(w));
}
BENCHMARK(BM_HodgeNumbersLargeDegree);

static void BM_PoincareSeriesFullMilnorRing(benchmark::State& state)
{
    const WeightVector w({903, 602, 258, 42, 1});
    const std::vector<int> all{1, 2, 3, 4, 5};
    for (auto _ : state)
        benchmark::DoNotOptimize(restricted_poincare_series(w, all));
}
BENCHMARK(BM_PoincareSeriesFullMilnorRing);
