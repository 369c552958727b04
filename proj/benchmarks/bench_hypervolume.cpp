#include <benchmark/benchmark.h>

#include <vector>

#include "bittp/hypervolume.hpp"

using namespace bittp;

static std::vector<ObjectivePoint> concave_front(std::size_t n) {
  std::vector<ObjectivePoint> pts;
  for (std::size_t i = 1; i <= n; ++i) {
    const double g = static_cast<double>(i) / static_cast<double>(n);
    pts.push_back({g, g * g * 0.999});
  }
  return pts;
}

static void BM_Hypervolume(benchmark::State& state) {
  const auto pts = concave_front(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hypervolume(pts));
}
BENCHMARK(BM_Hypervolume)->Arg(100)->Arg(10000);

static void BM_SubsetSelect(benchmark::State& state) {
  const auto pts = concave_front(static_cast<std::size_t>(state.range(0)));
  const auto k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(subset_select(pts, k));
}
BENCHMARK(BM_SubsetSelect)->Args({200, 20})->Args({1000, 100})->Unit(benchmark::kMillisecond);
