#include <benchmark/benchmark.h>

#include "paley/gf2.hpp"
#include "paley/rng.hpp"

using namespace paley;

namespace {

Gf2Matrix random_matrix(std::size_t n, uint64_t seed) {
  CounterRng rng(seed, 0);
  Gf2Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    auto words = m.row_words(r);
    for (auto& w : words) w = rng.next();
  }
  return m;
}

}  // namespace

static void BM_Rank(benchmark::State& state) {
  const Gf2Matrix m = random_matrix(std::size_t(state.range(0)), 17);
  for (auto _ : state) {
    std::size_t r = m.rank();
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(128, 1024)->Complexity();

static void BM_SolveAffine(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  const Gf2Matrix m = random_matrix(n, 23);
  const BitVec b = m.mul(m.row(0));  // guaranteed consistent
  for (auto _ : state) {
    AffineSolutionSpace s = solve_affine(m, b);
    benchmark::DoNotOptimize(s.dimension());
  }
}
BENCHMARK(BM_SolveAffine)->Arg(256)->Arg(512);
