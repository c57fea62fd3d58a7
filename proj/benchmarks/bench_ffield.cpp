#include <benchmark/benchmark.h>

#include "paley/ffield.hpp"

using paley::FiniteField;

static void BM_PrimeMul(benchmark::State& state) {
  const FiniteField f = FiniteField::from_order(10009);
  uint32_t x = 2, y = 4999;
  for (auto _ : state) {
    x = f.mul(x, y);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_PrimeMul);

static void BM_ExtensionMul(benchmark::State& state) {
  const FiniteField f = FiniteField::from_order(81);
  uint32_t x = 5, y = 77;
  for (auto _ : state) {
    x = f.mul(x ? x : 5, y);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_ExtensionMul);

static void BM_Pow(benchmark::State& state) {
  const FiniteField f = FiniteField::from_order(10009);
  for (auto _ : state) {
    uint32_t r = f.pow(4999, (f.q() - 1) / 2);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Pow);

static void BM_EtaTable(benchmark::State& state) {
  const FiniteField f = FiniteField::from_order(10009);
  uint32_t x = 1;
  for (auto _ : state) {
    int e = f.eta(x);
    benchmark::DoNotOptimize(e);
    x = x + 1 == f.q() ? 1 : x + 1;
  }
}
BENCHMARK(BM_EtaTable);

static void BM_FieldConstruction(benchmark::State& state) {
  const uint32_t q = uint32_t(state.range(0));
  for (auto _ : state) {
    FiniteField f = FiniteField::from_order(q);
    benchmark::DoNotOptimize(f.q());
  }
}
BENCHMARK(BM_FieldConstruction)->Arg(101)->Arg(10009)->Arg(81);

BENCHMARK_MAIN();
