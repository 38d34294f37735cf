#include <benchmark/benchmark.h>

#include "arr/roots.hpp"
#include "arr/scan.hpp"

using namespace arr;

namespace {

void BM_EnumerateIdealsD5(benchmark::State& state) {
  auto rs = RootSystem::make(RootType::D, 5);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(rs));
}
BENCHMARK(BM_EnumerateIdealsD5);

void BM_EnumerateIdealsD6(benchmark::State& state) {
  auto rs = RootSystem::make(RootType::D, 6);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(rs));
}
BENCHMARK(BM_EnumerateIdealsD6);

void BM_IdealClosure(benchmark::State& state) {
  auto rs = RootSystem::make(RootType::D, 6);
  int g1 = rs.parse_root("e1+e5");
  int g2 = rs.parse_root("e2+e4");
  for (auto _ : state) benchmark::DoNotOptimize(ideal_from_generators(rs, {g1, g2}));
}
BENCHMARK(BM_IdealClosure);

void BM_ScanD4(benchmark::State& state) {
  auto rs = RootSystem::make(RootType::D, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(scan_simple_triangle_restrictions(rs));
}
BENCHMARK(BM_ScanD4);

}  // namespace
