#include <benchmark/benchmark.h>

#include "carter/carter.hpp"
#include "carter/families.hpp"
#include "carter/lattice.hpp"

using namespace carter;

static void BM_SubgroupClasses(benchmark::State& state) {
  auto const gens = symmetric_group(static_cast<std::size_t>(state.range(0))).generators();
  for (auto _ : state) {
    // Fresh group each time so the element index is rebuilt too.
    FiniteGroup g(gens.front().degree(), gens);
    benchmark::DoNotOptimize(all_subgroup_classes(g, 1000).size());
  }
}
BENCHMARK(BM_SubgroupClasses)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_CarterExhaustive(benchmark::State& state) {
  auto const g = dihedral_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(carter_subgroups(g).total_count);
}
BENCHMARK(BM_CarterExhaustive)->Arg(12)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_CarterPruned(benchmark::State& state) {
  Limits limits;
  limits.pruned_carter = 30000;
  auto const base = state.range(0) ? symmetric_group(5) : alternating_group(5);
  auto const g = wreath_product(base, cyclic_group(2));
  for (auto _ : state) benchmark::DoNotOptimize(carter_subgroups(g, limits).total_count);
  state.SetLabel(state.range(0) ? "Sym5 wr C2" : "Alt5 wr C2");
}
BENCHMARK(BM_CarterPruned)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_Theorem(benchmark::State& state) {
  auto const g = symmetric_group(5);
  for (auto _ : state) benchmark::DoNotOptimize(check_theorem(g).verdict);
}
BENCHMARK(BM_Theorem)->Unit(benchmark::kMillisecond);
