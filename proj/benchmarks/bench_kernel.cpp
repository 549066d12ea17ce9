#include <benchmark/benchmark.h>

#include "carter/families.hpp"
#include "carter/kernel.hpp"

using namespace carter;

static void BM_SchreierSims(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  auto const gens = symmetric_group(n).generators();
  for (auto _ : state) {
    FiniteGroup g(n, gens);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSims)->Arg(8)->Arg(14)->Arg(20);

static void BM_ElementIndex(benchmark::State& state) {
  auto const gens = symmetric_group(static_cast<std::size_t>(state.range(0))).generators();
  for (auto _ : state) {
    FiniteGroup g(gens.front().degree(), gens);
    benchmark::DoNotOptimize(g.elements().size());
  }
}
BENCHMARK(BM_ElementIndex)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

// Centralizer of a transposition: filtering the element list against the
// chain backtrack.
static void BM_Centralizer(benchmark::State& state) {
  auto const g = symmetric_group(7);
  g.elements();
  auto const z = Permutation::parse("(1 2)", 7);
  auto const method = state.range(0) ? SearchMethod::backtrack : SearchMethod::enumerate;
  for (auto _ : state) benchmark::DoNotOptimize(centralizer(g, z, method).order());
  state.SetLabel(state.range(0) ? "backtrack" : "enumerate");
}
BENCHMARK(BM_Centralizer)->Arg(0)->Arg(1);

static void BM_Normalizer(benchmark::State& state) {
  auto const g = symmetric_group(7);
  g.elements();
  SubgroupHandle h(g, {Permutation::parse("(1 2 3)(4 5 6)", 7)});
  auto const method = state.range(0) ? SearchMethod::backtrack : SearchMethod::enumerate;
  for (auto _ : state) benchmark::DoNotOptimize(normalizer(g, h, method).order());
  state.SetLabel(state.range(0) ? "backtrack" : "enumerate");
}
BENCHMARK(BM_Normalizer)->Arg(0)->Arg(1);
