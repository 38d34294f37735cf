#include <benchmark/benchmark.h>

#include "arr/lattice.hpp"
#include "arr/param.hpp"
#include "arr/roots.hpp"

using namespace arr;

namespace {

Arrangement weyl_d(int n) {
  auto rs = RootSystem::make(RootType::D, n);
  return ideal_arrangement(rs, ideal_from_generators(rs, {}));
}

void BM_BuildLatticeWeylD4(benchmark::State& state) {
  Arrangement a = weyl_d(4);
  for (auto _ : state) benchmark::DoNotOptimize(build_lattice(a));
}
BENCHMARK(BM_BuildLatticeWeylD4);

void BM_BuildLatticeWeylD5(benchmark::State& state) {
  Arrangement a = weyl_d(5);
  for (auto _ : state) benchmark::DoNotOptimize(build_lattice(a));
}
BENCHMARK(BM_BuildLatticeWeylD5);

void BM_WhitneyCharpolyLemma(benchmark::State& state) {
  Arrangement a = lemma_arrangement();
  for (auto _ : state) benchmark::DoNotOptimize(whitney_charpoly(a));
}
BENCHMARK(BM_WhitneyCharpolyLemma);

void BM_WhitneyCharpolyWeylD4(benchmark::State& state) {
  Arrangement a = weyl_d(4);
  for (auto _ : state) benchmark::DoNotOptimize(whitney_charpoly(a));
}
BENCHMARK(BM_WhitneyCharpolyWeylD4);

void BM_RestrictIdealD6(benchmark::State& state) {
  auto d6 = RootSystem::make(RootType::D, 6);
  Arrangement a = ideal_arrangement(d6, lemma_ideal_i(d6, 6));
  for (auto _ : state) {
    Flat y = lemma_flat_y(a, 6);
    benchmark::DoNotOptimize(restrict_to(a, y));
  }
}
BENCHMARK(BM_RestrictIdealD6);

}  // namespace
