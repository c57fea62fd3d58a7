#include <benchmark/benchmark.h>

#include "paley/census.hpp"
#include "paley/ffield.hpp"
#include "paley/paley_graph.hpp"

using namespace paley;

// Throughput of the incremental subset walk, in subsets per second.
static void BM_ExhaustiveCensus(benchmark::State& state) {
  const PaleyStructure p(FiniteField::from_order(101));
  const uint32_t r = uint32_t(state.range(0));
  for (auto _ : state) {
    ParityCounts counts =
        exhaustive_parity_census(p.adjacency(), r, uint64_t(1) << 40);
    benchmark::DoNotOptimize(counts.even);
  }
  state.SetItemsProcessed(int64_t(state.iterations()) *
                          int64_t(binom_u64(101, r)));
}
BENCHMARK(BM_ExhaustiveCensus)->Arg(3)->Arg(4);

static void BM_SampledCensus(benchmark::State& state) {
  const PaleyStructure p(FiniteField::from_order(10009));
  for (auto _ : state) {
    ParityCounts counts =
        sampled_parity_census(p.adjacency(), 5, 10000, 1, 1);
    benchmark::DoNotOptimize(counts.even);
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * 10000);
}
BENCHMARK(BM_SampledCensus);

static void BM_PaleyConstruction(benchmark::State& state) {
  const FiniteField f = FiniteField::from_order(uint64_t(state.range(0)));
  for (auto _ : state) {
    PaleyStructure p(f);
    benchmark::DoNotOptimize(p.order());
  }
}
BENCHMARK(BM_PaleyConstruction)->Arg(101)->Arg(1009);

static void BM_CharacterSum(benchmark::State& state) {
  const FiniteField f = FiniteField::from_order(17);
  const std::vector<uint32_t> w{0, 3, 9};
  for (auto _ : state) {
    mpz_class a = character_sum_A(f, w, 4);
    benchmark::DoNotOptimize(a.get_si());
  }
}
BENCHMARK(BM_CharacterSum);
