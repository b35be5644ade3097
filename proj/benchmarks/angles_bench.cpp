#include "detloci/angles/angles.hpp"
#include "detloci/suite/generators.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace detloci;

static void BM_MaxAngle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    const auto u = suite::gen::random_subspace(rng, n, n / 2);
    const auto v = suite::gen::random_subspace(rng, n, n / 2);
    for (auto _ : state) benchmark::DoNotOptimize(angles::max_angle(u, v));
}
BENCHMARK(BM_MaxAngle)->RangeMultiplier(2)->Range(4, 64);

static void BM_MinAngle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(2);
    const auto u = suite::gen::random_subspace(rng, n, n / 2 + 1);
    const auto v = suite::gen::random_subspace(rng, n, n / 2 + 1);
    for (auto _ : state) benchmark::DoNotOptimize(angles::min_angle(u, v));
}
BENCHMARK(BM_MinAngle)->RangeMultiplier(2)->Range(4, 64);

static void BM_MinAngleDual(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(2);
    const auto u = suite::gen::random_subspace(rng, n, n / 2 + 1);
    const auto v = suite::gen::random_subspace(rng, n, n / 2 + 1);
    for (auto _ : state) benchmark::DoNotOptimize(angles::min_angle_dual(u, v));
}
BENCHMARK(BM_MinAngleDual)->RangeMultiplier(2)->Range(4, 64);
