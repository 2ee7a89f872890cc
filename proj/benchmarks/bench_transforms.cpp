#include <benchmark/benchmark.h>

#include "morava/binomial.hpp"
#include "morava/space.hpp"

using namespace morava;

static void BM_InverseTransform(benchmark::State& state) {
  // chi of K(C3,2): values around 3^C(n,2), sizable near the tail
  std::vector<Rational> x;
  for (long long n = 0; n < state.range(0); ++n)
    x.emplace_back(pow_integer(3, binomial(n, 2)));
  for (auto _ : state) {
    auto xbar = inverse_binomial_transform(x);
    benchmark::DoNotOptimize(xbar);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_InverseTransform)->Arg(16)->Arg(32)->Arg(64)->Complexity();

static void BM_RoundTrip(benchmark::State& state) {
  std::vector<Rational> x;
  for (long long n = 0; n < 32; ++n)
    x.emplace_back(Integer(n * n + 1), Integer(n + 2));
  for (auto _ : state) {
    auto back = binomial_transform(inverse_binomial_transform(x));
    benchmark::DoNotOptimize(back);
  }
}
BENCHMARK(BM_RoundTrip);

static void BM_QBinomial(benchmark::State& state) {
  long long a = state.range(0);
  for (auto _ : state) {
    Rational v = qbinomial(a, static_cast<unsigned long>(a / 2), 3);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_QBinomial)->Arg(8)->Arg(16)->Arg(32);

static void BM_CupFiberChi(benchmark::State& state) {
  long long n = state.range(0);
  for (auto _ : state) {
    Rational v = cup_fiber_chi(2, 3, n);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_CupFiberChi)->Arg(6)->Arg(10)->Arg(14);
