#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "bittp/packing.hpp"
#include "bittp/tour_search.hpp"

using namespace bittp;

static void BM_RandomizedPacking(benchmark::State& state) {
  const auto inst = bench::make_instance(static_cast<std::size_t>(state.range(0)));
  Rng rng(4);
  const Tour tour = construct_tour(inst, rng);
  for (auto _ : state) benchmark::DoNotOptimize(randomized_packing(inst, tour, 12, 0.5, 41, rng));
}
BENCHMARK(BM_RandomizedPacking)->Arg(280)->Arg(1000)->Arg(4461)->Unit(benchmark::kMillisecond);

static void BM_ScoreItems(benchmark::State& state) {
  const auto inst = bench::make_instance(static_cast<std::size_t>(state.range(0)));
  Rng rng(5);
  const Tour tour(bench::shuffled_tour(inst.num_cities(), rng));
  for (auto _ : state) benchmark::DoNotOptimize(score_items(inst, tour, 0.3, 0.5, 0.2));
}
BENCHMARK(BM_ScoreItems)->Arg(280)->Arg(4461)->Unit(benchmark::kMicrosecond);
