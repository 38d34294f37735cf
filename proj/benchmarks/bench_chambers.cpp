#include <benchmark/benchmark.h>

#include "arr/chambers.hpp"
#include "arr/param.hpp"
#include "arr/roots.hpp"

using namespace arr;

namespace {

void BM_EnumerateChambersLemma(benchmark::State& state) {
  Arrangement a = lemma_arrangement();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_chambers(a));
}
BENCHMARK(BM_EnumerateChambersLemma);

void BM_EnumerateChambersWeylD4(benchmark::State& state) {
  auto rs = RootSystem::make(RootType::D, 4);
  Arrangement a = ideal_arrangement(rs, ideal_from_generators(rs, {}));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_chambers(a));
}
BENCHMARK(BM_EnumerateChambersWeylD4);

void BM_FindSimpleTriangle(benchmark::State& state) {
  Arrangement a = lemma_family().at(Rat(-2));
  for (auto _ : state) benchmark::DoNotOptimize(find_simple_triangle(a));
}
BENCHMARK(BM_FindSimpleTriangle);

void BM_ZaslavskyWeylD4(benchmark::State& state) {
  auto rs = RootSystem::make(RootType::D, 4);
  Arrangement a = ideal_arrangement(rs, ideal_from_generators(rs, {}));
  for (auto _ : state) benchmark::DoNotOptimize(zaslavsky_count(a));
}
BENCHMARK(BM_ZaslavskyWeylD4);

}  // namespace
