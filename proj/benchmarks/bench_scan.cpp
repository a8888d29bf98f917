#include "benchmark/benchmark.h"

#include "k3scan/pencilscan.hpp"
#include "k3scan/transversality.hpp"

using namespace k3scan;

static void BM_ScanWorkedExample(benchmark::State& state)
{
    const WeightVector w({42, 27, 8, 4, 3});
    for (auto _ : state)
        benchmark::DoNotOptimize(scan_weight(w));
}
BENCHMARK(BM_ScanWorkedExample);

static void BM_ScanLargeDegree(benchmark::State& state)
{
    const WeightVector w({903, 602, 258, 42, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(scan_weight(w));
}
BENCHMARK(BM_ScanLargeDegree);

static void BM_TransversalSubsetCriterion(benchmark::State& state)
{
    // fresh degree per iteration, so every call runs the full criterion
    const WeightVector w({882, 588, 251, 36, 7});
    Int d = 1764;
    for (auto _ : state)
        benchmark::DoNotOptimize(is_transversal(w, d++));
}
BENCHMARK(BM_TransversalSubsetCriterion);

static void BM_EnumerateK3Systems(benchmark::State& state)
{
    const Int d_max = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_cy_weight_systems(4, d_max));
}
BENCHMARK(BM_EnumerateK3Systems)->Arg(24)->Arg(48)->Arg(84);
