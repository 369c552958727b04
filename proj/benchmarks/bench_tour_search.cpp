#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "bittp/tour_search.hpp"

using namespace bittp;

static void BM_ConstructTour(benchmark::State& state) {
  const auto inst = bench::make_instance(static_cast<std::size_t>(state.range(0)));
  const NeighborLists neighbors(inst);
  Rng rng(8);
  for (auto _ : state) benchmark::DoNotOptimize(construct_tour(inst, neighbors, rng));
}
BENCHMARK(BM_ConstructTour)->Arg(280)->Arg(4461)->Unit(benchmark::kMillisecond);

static void BM_NeighborLists(benchmark::State& state) {
  const auto inst = bench::make_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(NeighborLists(inst));
}
BENCHMARK(BM_NeighborLists)->Arg(4461)->Unit(benchmark::kMillisecond);
