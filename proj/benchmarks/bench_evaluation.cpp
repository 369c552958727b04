#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "bittp/evaluation.hpp"

using namespace bittp;

static void BM_TravelTime(benchmark::State& state) {
  const auto inst = bench::make_instance(static_cast<std::size_t>(state.range(0)));
  Rng rng(2);
  const Tour tour(bench::shuffled_tour(inst.num_cities(), rng));
  PackingPlan plan(inst.num_items());
  for (std::size_t j = 0; j < inst.num_items(); j += 3) plan.try_add(inst, static_cast<ItemIndex>(j));
  for (auto _ : state) benchmark::DoNotOptimize(travel_time(inst, tour, plan));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TravelTime)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oN);

static void BM_SingleItemDelta(benchmark::State& state) {
  const auto inst = bench::make_instance(static_cast<std::size_t>(state.range(0)));
  Rng rng(3);
  const Tour tour(bench::shuffled_tour(inst.num_cities(), rng));
  const PackingPlan plan(inst.num_items());
  const TourProfile profile(inst, tour, plan);
  std::size_t pos = 0;
  for (auto _ : state) {
    pos = (pos + 7919) % profile.size();
    benchmark::DoNotOptimize(profile.time_with_change(pos, 10));
  }
}
BENCHMARK(BM_SingleItemDelta)->RangeMultiplier(4)->Range(256, 16384);
