#include "detloci/grassmann/grassmann.hpp"
#include "detloci/suite/generators.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace detloci;

static void BM_PlueckerFloat(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(3);
    const grassmann::GrassmannPoint p(suite::gen::gaussian_cmatrix(rng, 2, n));
    for (auto _ : state) benchmark::DoNotOptimize(grassmann::pluecker_embed(p));
}
BENCHMARK(BM_PlueckerFloat)->DenseRange(4, 8, 2);

static void BM_PlueckerRelationsExact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(4);
    const auto p = grassmann::pluecker_embed(suite::gen::integer_matrix(rng, 2, n, 9));
    for (auto _ : state) benchmark::DoNotOptimize(grassmann::pluecker_relations(p));
}
BENCHMARK(BM_PlueckerRelationsExact)->DenseRange(4, 6, 1);

static void BM_FsDistance(benchmark::State& state) {
    std::mt19937_64 rng(5);
    const grassmann::GrassmannPoint p(suite::gen::gaussian_cmatrix(rng, 2, 5));
    const grassmann::GrassmannPoint q(suite::gen::gaussian_cmatrix(rng, 2, 5));
    for (auto _ : state) benchmark::DoNotOptimize(grassmann::fs_distance(p, q));
}
BENCHMARK(BM_FsDistance);

static void BM_CurvatureAtBase(benchmark::State& state) {
    std::mt19937_64 rng(6);
    const auto t = suite::gen::gaussian_cmatrix(rng, 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(grassmann::curvature_at_base(t));
}
BENCHMARK(BM_CurvatureAtBase);

static void BM_RankVarietyTangent(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const grassmann::MorphismSample phi{suite::gen::gaussian_cmatrix(rng, 3, 4)};
    for (auto _ : state) benchmark::DoNotOptimize(grassmann::rank_variety_tangent_rank(phi));
}
BENCHMARK(BM_RankVarietyTangent);
