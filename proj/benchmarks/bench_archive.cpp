#include <benchmark/benchmark.h>

#include <vector>

#include "bittp/archive.hpp"
#include "bittp/rng.hpp"

using namespace bittp;

static void BM_ArchiveUpdate(benchmark::State& state) {
  // Candidates near a front of the requested size, most of them rejected.
  Rng rng(6);
  const auto size = static_cast<std::size_t>(state.range(0));
  std::vector<Solution> stream;
  for (std::size_t i = 0; i < 1 << 14; ++i) {
    Solution s;
    s.profit = uniform01(rng) * static_cast<double>(size);
    s.time = s.profit + uniform01(rng) * 2.0;
    stream.push_back(s);
  }
  Archive archive;
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(archive.update(stream[k]));
    k = (k + 1) & (stream.size() - 1);
  }
  state.counters["front"] = static_cast<double>(archive.size());
}
BENCHMARK(BM_ArchiveUpdate)->Arg(100)->Arg(10000);

static void BM_BestForAlpha(benchmark::State& state) {
  Archive archive;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    Solution s;
    s.profit = static_cast<double>(i);
    s.time = static_cast<double>(i * i) / 100.0;
    archive.update(s);
  }
  Rng rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(archive.best_for_alpha(uniform01(rng), 1.0).profit);
}
BENCHMARK(BM_BestForAlpha)->Arg(100)->Arg(1000);
