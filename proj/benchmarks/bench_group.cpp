#include <benchmark/benchmark.h>

#include "morava/group.hpp"

using namespace morava;

static void BM_ChiBgRecursion(benchmark::State& state) {
  FiniteGroup G = FiniteGroup::heisenberg3();
  long long n = state.range(0);
  for (auto _ : state) {
    // fresh evaluator each round: measures the full memo build
    Integer v = chi_bg(G, 3, n);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ChiBgRecursion)->Arg(4)->Arg(8)->Arg(12);

static void BM_ChiBgSymmetric(benchmark::State& state) {
  FiniteGroup G = FiniteGroup::symmetric(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    Integer v = chi_bg(G, 3, 2);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ChiBgSymmetric)->Arg(4)->Arg(5)->Arg(6);

static void BM_BruteForceTuples(benchmark::State& state) {
  FiniteGroup G = FiniteGroup::quaternion8();
  long long n = state.range(0);
  for (auto _ : state) {
    Integer v = brute_force_commuting_tuples(G, 2, n);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_BruteForceTuples)->Arg(2)->Arg(3)->Arg(4);

static void BM_AbelianLattice(benchmark::State& state) {
  FiniteGroup G = FiniteGroup::heisenberg3();
  for (auto _ : state) {
    auto subs = abelian_subgroups(G);
    benchmark::DoNotOptimize(subs);
  }
}
BENCHMARK(BM_AbelianLattice);

static void BM_HkrClosedForm(benchmark::State& state) {
  FiniteGroup G = FiniteGroup::dihedral4();
  for (auto _ : state) {
    ExpoPoly e = hkr_chi(G, 2);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_HkrClosedForm);

static void BM_GroupConstruction(benchmark::State& state) {
  for (auto _ : state) {
    FiniteGroup G = FiniteGroup::symmetric(5);
    benchmark::DoNotOptimize(G);
  }
}
BENCHMARK(BM_GroupConstruction);
