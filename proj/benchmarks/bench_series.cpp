#include <benchmark/benchmark.h>

#include "morava/series.hpp"

using namespace morava;

static void BM_SymmetricGenfun(benchmark::State& state) {
  long long M = state.range(0);
  for (auto _ : state) {
    TruncatedSeries s = chi_symmetric_genfun(3, 2, M);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SymmetricGenfun)->Arg(10)->Arg(20)->Arg(40);

static void BM_CardinalitySeries(benchmark::State& state) {
  long long M = state.range(0);
  for (auto _ : state) {
    TruncatedSeries s = sym_cardinality_series(3, M);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_CardinalitySeries)->Arg(20)->Arg(40)->Arg(80);

static void BM_SeriesReciprocal(benchmark::State& state) {
  TruncatedSeries s = TruncatedSeries::one_minus_power(
      state.range(0), 1, Rational(Integer(1), Integer(3)));
  for (auto _ : state) {
    TruncatedSeries r = s.reciprocal();
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SeriesReciprocal)->Arg(32)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
