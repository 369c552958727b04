#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "bittp/hypervolume.hpp"

namespace bittp::testing {

std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(BITTP_FIXTURE_DIR) / name;
}

ProblemInstance toy3() {
  ProblemInstance::Data d;
  d.name = "toy3";
  d.coords = {{0, 0}, {3, 0}, {0, 4}};
  d.items = {{100, 3, 1}, {60, 2, 2}};
  d.capacity = 5;
  d.min_speed = 0.1;
  d.max_speed = 1.0;
  d.renting_rate = 1.0;
  return ProblemInstance(std::move(d));
}

namespace {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

ProblemInstance random_instance(Rng& rng, const RandomInstanceSpec& spec) {
  ProblemInstance::Data d;
  d.name = "random";
  for (std::size_t i = 0; i < spec.n; ++i) {
    double x = uniform01(rng) * spec.coord_range;
    double y = uniform01(rng) * spec.coord_range;
    if (spec.integer_coords) {
      x = std::floor(x);
      y = std::floor(y);
    }
    d.coords.push_back({x, y});
  }
  std::int64_t total = 0;
  for (std::size_t j = 0; j < spec.m; ++j) {
    Item it;
    it.profit = uniform_int(rng, 0, spec.max_profit);
    it.weight = uniform_int(rng, 1, spec.max_weight);
    it.city = static_cast<City>(uniform_int(rng, 1, static_cast<std::int64_t>(spec.n) - 1));
    total += it.weight;
    d.items.push_back(it);
  }
  d.capacity = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(spec.capacity_fraction * static_cast<double>(total))));
  d.min_speed = spec.min_speed;
  d.max_speed = spec.max_speed;
  d.renting_rate = spec.renting_rate;
  return ProblemInstance(std::move(d));
}

ProblemInstance random_small_instance(Rng& rng, std::size_t n_lo, std::size_t n_hi, std::size_t m_lo,
                                      std::size_t m_hi) {
  RandomInstanceSpec spec;
  spec.n = static_cast<std::size_t>(uniform_int(rng, static_cast<std::int64_t>(n_lo), static_cast<std::int64_t>(n_hi)));
  spec.m = static_cast<std::size_t>(uniform_int(rng, static_cast<std::int64_t>(m_lo), static_cast<std::int64_t>(m_hi)));
  spec.capacity_fraction = 0.2 + 0.6 * uniform01(rng);
  spec.renting_rate = 0.05 + 1.95 * uniform01(rng);
  return random_instance(rng, spec);
}

std::vector<City> random_tour(Rng& rng, std::size_t n) {
  std::vector<City> t(n);
  std::iota(t.begin(), t.end(), City{0});
  std::shuffle(t.begin() + 1, t.end(), rng);
  return t;
}

std::vector<bool> random_plan(Rng& rng, const ProblemInstance& inst) {
  const std::size_t m = inst.num_items();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  const double q = uniform01(rng);
  std::vector<bool> sel(m, false);
  std::int64_t w = 0;
  for (std::size_t j : order) {
    const std::int64_t wj = inst.items()[j].weight;
    if (uniform01(rng) < q && w + wj <= inst.capacity()) {
      sel[j] = true;
      w += wj;
    }
  }
  return sel;
}

std::int64_t naive_distance(const ProblemInstance& inst, City a, City b) {
  const Point p = inst.coords()[static_cast<std::size_t>(a)];
  const Point q = inst.coords()[static_cast<std::size_t>(b)];
  const double e = std::hypot(p.x - q.x, p.y - q.y);
  if (inst.edge_weight_kind() == EdgeWeightKind::ceil_euclidean) {
    // hypot and sqrt can differ in the last bit; settle exact squares exactly.
    const double sq = (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y);
    const double r = std::round(e);
    if (r * r == sq) return static_cast<std::int64_t>(r);
    return static_cast<std::int64_t>(std::ceil(e));
  }
  return static_cast<std::int64_t>(std::floor(e + 0.5));
}

std::int64_t naive_weight_after(const ProblemInstance& inst, const std::vector<City>& tour,
                                const std::vector<bool>& selected, std::size_t pos) {
  std::int64_t w = 0;
  for (std::size_t k = 0; k <= pos; ++k) {
    for (std::size_t j = 0; j < inst.num_items(); ++j) {
      if (selected[j] && inst.items()[j].city == tour[k]) w += inst.items()[j].weight;
    }
  }
  return w;
}

double naive_travel_time(const ProblemInstance& inst, const std::vector<City>& tour,
                         const std::vector<bool>& selected) {
  const std::size_t n = tour.size();
  const double vmax = inst.max_speed();
  const double vmin = inst.min_speed();
  const double cap = static_cast<double>(inst.capacity());
  double h = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = static_cast<double>(naive_weight_after(inst, tour, selected, i));
    const double v = vmax - w * (vmax - vmin) / cap;
    const City next = i + 1 < n ? tour[i + 1] : tour[0];
    h += static_cast<double>(naive_distance(inst, tour[i], next)) / v;
  }
  return h;
}

double naive_profit(const ProblemInstance& inst, const std::vector<bool>& selected) {
  double g = 0.0;
  for (std::size_t j = 0; j < inst.num_items(); ++j) {
    if (selected[j]) g += static_cast<double>(inst.items()[j].profit);
  }
  return g;
}

std::vector<std::vector<City>> all_tours(std::size_t n) {
  std::vector<City> t(n);
  std::iota(t.begin(), t.end(), City{0});
  std::vector<std::vector<City>> out;
  do {
    out.push_back(t);
  } while (std::next_permutation(t.begin() + 1, t.end()));
  return out;
}

std::int64_t brute_force_tour_length(const ProblemInstance& inst) {
  std::int64_t best = -1;
  for (const auto& t : all_tours(inst.num_cities())) {
    std::int64_t len = 0;
    for (std::size_t i = 0; i < t.size(); ++i) len += naive_distance(inst, t[i], t[(i + 1) % t.size()]);
    if (best < 0 || len < best) best = len;
  }
  return best;
}

namespace {

// Calls fn(selected_mask, profit, time) for every feasible plan on `tour`.
template <typename Fn>
void for_each_plan(const ProblemInstance& inst, const std::vector<City>& tour, Fn&& fn) {
  const std::size_t n = tour.size();
  const std::size_t m = inst.num_items();
  std::vector<std::size_t> pos_of(n);
  for (std::size_t i = 0; i < n; ++i) pos_of[static_cast<std::size_t>(tour[i])] = i;
  std::vector<double> legs(n);
  for (std::size_t i = 0; i < n; ++i) legs[i] = static_cast<double>(naive_distance(inst, tour[i], tour[(i + 1) % n]));
  const double vmax = inst.max_speed();
  const double vmin = inst.min_speed();
  const double cap = static_cast<double>(inst.capacity());
  std::vector<std::int64_t> picked(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::int64_t total = 0;
    double profit = 0.0;
    std::fill(picked.begin(), picked.end(), 0);
    for (std::size_t j = 0; j < m; ++j) {
      if (mask >> j & 1) {
        const Item& it = inst.items()[j];
        total += it.weight;
        profit += static_cast<double>(it.profit);
        picked[pos_of[static_cast<std::size_t>(it.city)]] += it.weight;
      }
    }
    if (total > inst.capacity()) continue;
    double time = 0.0;
    std::int64_t w = 0;
    for (std::size_t i = 0; i < n; ++i) {
      w += picked[i];
      time += legs[i] / (vmax - static_cast<double>(w) * (vmax - vmin) / cap);
    }
    fn(mask, profit, time);
  }
}

}  // namespace

std::vector<ObjectivePoint> brute_force_front(const ProblemInstance& inst) {
  std::vector<ObjectivePoint> all;
  for (const auto& t : all_tours(inst.num_cities())) {
    for_each_plan(inst, t, [&](std::uint64_t, double g, double h) { all.push_back({g, h}); });
  }
  // Non-dominated filter by sweep: profit descending, keep strictly faster.
  std::sort(all.begin(), all.end(), [](const ObjectivePoint& a, const ObjectivePoint& b) {
    return a.profit > b.profit || (a.profit == b.profit && a.time < b.time);
  });
  std::vector<ObjectivePoint> front;
  for (const auto& p : all) {
    if (front.empty() || p.time < front.back().time) front.push_back(p);
  }
  std::reverse(front.begin(), front.end());
  return front;
}

double brute_force_best_objective(const ProblemInstance& inst, const std::vector<City>& tour, double alpha) {
  double best = -std::numeric_limits<double>::infinity();
  const double r = inst.renting_rate();
  for_each_plan(inst, tour, [&](std::uint64_t, double g, double h) {
    best = std::max(best, alpha * g - (1.0 - alpha) * r * h);
  });
  return best;
}

std::vector<ObjectivePoint> dominance_filter(const std::vector<ObjectivePoint>& stream) {
  std::vector<ObjectivePoint> out;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    const ObjectivePoint& p = stream[i];
    bool keep = true;
    for (std::size_t k = 0; k < stream.size() && keep; ++k) {
      const ObjectivePoint& q = stream[k];
      const bool weakly_better = q.profit >= p.profit && q.time <= p.time;
      const bool strictly = q.profit > p.profit || q.time < p.time;
      if (weakly_better && strictly) keep = false;
      if (k < i && q.profit == p.profit && q.time == p.time) keep = false;
    }
    if (keep) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const ObjectivePoint& a, const ObjectivePoint& b) { return a.profit < b.profit; });
  return out;
}

double brute_force_subset_hv(const std::vector<ObjectivePoint>& points, std::size_t k, const ObjectivePoint& ref) {
  const std::size_t n = points.size();
  double best = 0.0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > k) continue;
    std::vector<ObjectivePoint> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) subset.push_back(points[i]);
    }
    best = std::max(best, hypervolume(subset, ref));
  }
  return best;
}

std::vector<ObjectivePoint> random_front(Rng& rng, std::size_t size) {
  std::vector<double> g(size), h(size);
  for (auto& v : g) v = uniform01(rng);
  for (auto& v : h) v = uniform01(rng);
  std::sort(g.begin(), g.end());
  std::sort(h.begin(), h.end());
  std::vector<ObjectivePoint> out;
  for (std::size_t i = 0; i < size; ++i) {
    if (i > 0 && (g[i] == g[i - 1] || h[i] == h[i - 1])) continue;
    out.push_back({g[i], h[i]});
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace bittp::testing
