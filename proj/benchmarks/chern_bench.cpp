#include "detloci/chern/chern.hpp"

#include <benchmark/benchmark.h>

using namespace detloci;

static void BM_Example1(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(chern::example_tables(1, n, n));
}
BENCHMARK(BM_Example1)->DenseRange(2, 10, 4);

static void BM_Example2(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(chern::example_tables(2, n, n));
}
BENCHMARK(BM_Example2)->DenseRange(3, 10, 3);

static void BM_DifferenceClass(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto p = chern::DeterminantalProblem::trivial(n, 6, 6, 0);
    for (auto _ : state) benchmark::DoNotOptimize(p.difference_class());
}
BENCHMARK(BM_DifferenceClass)->DenseRange(4, 8, 2);
