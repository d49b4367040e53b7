#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "cpsurf/cpsurf.hpp"

namespace {

void BM_DecomposeBeta(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cpsurf::decompose_beta(state.range(0)));
  }
}
BENCHMARK(BM_DecomposeBeta)->Arg(10)->Arg(30)->Arg(100);

void BM_VerifyBeta(benchmark::State& state) {
  const auto d = cpsurf::decompose_beta(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cpsurf::verify(d));
}
BENCHMARK(BM_VerifyBeta)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_VerifySimplex(benchmark::State& state) {
  const auto d = cpsurf::decompose_simplex(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cpsurf::verify(d));
}
BENCHMARK(BM_VerifySimplex)->Arg(13)->Arg(35)->Unit(benchmark::kMillisecond);

void BM_IsomorphicRelabeled(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  const auto a = cpsurf::cross_torus_part(1, 2, k).complex();
  cpsurf::VertexMap perm(static_cast<std::size_t>(2 * k));
  std::iota(perm.begin(), perm.end(), cpsurf::Vertex{0});
  std::shuffle(perm.begin(), perm.end(), std::mt19937_64(1));
  const auto b = a.relabeled(perm, 2 * k);
  for (auto _ : state) benchmark::DoNotOptimize(cpsurf::is_isomorphic(a, b));
}
BENCHMARK(BM_IsomorphicRelabeled)->Arg(8)->Arg(20)->Arg(30);

void BM_Census(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cpsurf::count_cst_torus_types(state.range(0)));
  }
}
BENCHMARK(BM_Census)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
