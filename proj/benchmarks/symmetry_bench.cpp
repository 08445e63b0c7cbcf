#include <benchmark/benchmark.h>

#include "wesym/code.hpp"
#include "wesym/roots.hpp"
#include "wesym/symgroup.hpp"

using namespace wesym;

namespace {

HomPoly binary_rm(unsigned r, unsigned m) {
  return HomPoly(weight_enumerator_smart(reed_muller(make_field(2), r, m)));
}

void BM_FindRoots(benchmark::State& state) {
  const HomPoly w = binary_rm(2, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_roots(w));
}
BENCHMARK(BM_FindRoots)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SymmetryGroup(benchmark::State& state) {
  const HomPoly w = binary_rm(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(symmetry_group(w, 2u));
}
BENCHMARK(BM_SymmetryGroup)->Args({1, 3})->Args({2, 5})->Args({2, 6})->Unit(benchmark::kMillisecond);

void BM_TernaryGolay(benchmark::State& state) {
  const HomPoly w(weight_enumerator(named_code("golay12_ternary")));
  for (auto _ : state) benchmark::DoNotOptimize(symmetry_group(w, 3u));
}
BENCHMARK(BM_TernaryGolay)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
