#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "bittp/instance.hpp"
#include "bittp/rng.hpp"

namespace bittp::bench {

// One item per non-depot city, profit tied to weight.
inline ProblemInstance make_instance(std::size_t n, std::uint64_t seed = 1) {
  Rng rng(seed);
  ProblemInstance::Data d;
  d.name = "bench";
  d.knapsack_data_type = "bounded strongly corr";
  for (std::size_t i = 0; i < n; ++i) {
    d.coords.push_back({std::floor(uniform01(rng) * 10000.0), std::floor(uniform01(rng) * 10000.0)});
  }
  std::int64_t total = 0;
  for (std::size_t c = 1; c < n; ++c) {
    Item it;
    it.weight = 1 + static_cast<std::int64_t>(rng() % 1000);
    it.profit = it.weight + 100;
    it.city = static_cast<City>(c);
    total += it.weight;
    d.items.push_back(it);
  }
  d.capacity = total / 5;
  d.min_speed = 0.1;
  d.max_speed = 1.0;
  d.renting_rate = 5.61;
  return ProblemInstance(std::move(d));
}

inline std::vector<City> shuffled_tour(std::size_t n, Rng& rng) {
  std::vector<City> t(n);
  std::iota(t.begin(), t.end(), City{0});
  std::shuffle(t.begin() + 1, t.end(), rng);
  return t;
}

}  // namespace bittp::bench
