#include <benchmark/benchmark.h>

#include "quartic/weyl.hpp"

using namespace quartic;

namespace {

const lattice::DelPezzo& dp() {
  static const auto value = lattice::DelPezzo::build();
  return value;
}

const std::vector<weyl::GroupElement>& gens() {
  static const auto value = weyl::standard_generators(dp());
  return value;
}

}  // namespace

static void BM_LatticeBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lattice::DelPezzo::build());
}
BENCHMARK(BM_LatticeBuild)->Unit(benchmark::kMillisecond);

static void BM_GroupEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    std::uint64_t order = weyl::group_order(gens());
    benchmark::DoNotOptimize(order);
  }
}
BENCHMARK(BM_GroupEnumeration)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_CycleCensus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(weyl::cycle_census(gens()));
}
BENCHMARK(BM_CycleCensus)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_DisjointSevenTuples(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(weyl::count_disjoint_seven_tuples(dp()));
}
BENCHMARK(BM_DisjointSevenTuples)->Unit(benchmark::kMillisecond);
