#include "bittp/tour_search.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <utility>

#include "bittp/error.hpp"
#include "spatial_grid.hpp"

namespace bittp {
namespace {

// Array-backed cyclic tour with position lookup. Moves are expressed through
// 2-opt reversals; the shorter side of the cycle is the one reversed, so
// orientation may flip between moves and callers must re-read succ/pred.
class CyclicTour {
 public:
  explicit CyclicTour(std::vector<City>& order) : t_(order), pos_(order.size()) {
    for (std::size_t i = 0; i < t_.size(); ++i) pos_[static_cast<std::size_t>(t_[i])] = i;
  }

  std::size_t size() const noexcept { return t_.size(); }
  std::size_t pos(City c) const noexcept { return pos_[static_cast<std::size_t>(c)]; }
  City succ(City c) const noexcept {
    const std::size_t p = pos(c) + 1;
    return t_[p == t_.size() ? 0 : p];
  }
  City pred(City c) const noexcept {
    const std::size_t p = pos(c);
    return t_[p == 0 ? t_.size() - 1 : p - 1];
  }
  // Offset of c after `from` walking forward.
  std::size_t forward_offset(City from, City c) const noexcept {
    return (pos(c) + size() - pos(from)) % size();
  }

  // With succ(a1) == a2 and succ(b1) == b2: replaces edges (a1,a2),(b1,b2)
  // by (a1,b1),(a2,b2).
  void two_opt(City a1, City b1) {
    const City a2 = succ(a1);
    reverse_path(pos(a2), pos(b1));
  }

  // Removes edges {u1,u2},{v1,v2} and adds {u1,v1},{u2,v2}, whichever the
  // current orientation.
  void exchange(City u1, City u2, City v1, City v2) {
    if (succ(u1) == u2) {
      two_opt(u1, v1);
    } else {
      (void)v1;
      two_opt(u2, v2);
    }
  }

 private:
  void reverse_path(std::size_t from, std::size_t to) {
    const std::size_t n = size();
    std::size_t len = (to + n - from) % n + 1;
    if (2 * len > n) {
      // Reverse the complement instead; same cycle, opposite orientation.
      const std::size_t new_from = (to + 1) % n;
      const std::size_t new_to = (from + n - 1) % n;
      from = new_from;
      to = new_to;
      len = n - len;
    }
    for (std::size_t k = 0; k < len / 2; ++k) {
      const City a = t_[from];
      const City b = t_[to];
      t_[from] = b;
      t_[to] = a;
      pos_[static_cast<std::size_t>(b)] = from;
      pos_[static_cast<std::size_t>(a)] = to;
      from = from + 1 == n ? 0 : from + 1;
      to = to == 0 ? n - 1 : to - 1;
    }
  }

  std::vector<City>& t_;
  std::vector<std::size_t> pos_;
};

class Descent {
 public:
  Descent(const ProblemInstance& inst, const NeighborLists& neighbors, std::vector<City>& order)
      : inst_(inst), nb_(neighbors), tour_(order), queued_(order.size(), false) {}

  void run(Rng& rng) {
    std::vector<City> start(tour_.size());
    for (std::size_t i = 0; i < start.size(); ++i) start[i] = static_cast<City>(i);
    std::shuffle(start.begin(), start.end(), rng);
    for (City c : start) push(c);
    for (;;) {
      while (!queue_.empty()) {
        const City a = queue_.front();
        queue_.pop_front();
        queued_[static_cast<std::size_t>(a)] = false;
        if (improve_two_opt(a) || improve_or_opt(a)) push(a);
      }
      // A city is not requeued when only its neighbours' edges change, so
      // confirm with a full pass before stopping.
      for (City c : start) {
        if (improve_two_opt(c) || improve_or_opt(c)) push(c);
      }
      if (queue_.empty()) break;
    }
  }

 private:
  std::int64_t d(City a, City b) const noexcept { return inst_.distance_unchecked(a, b); }

  void push(City c) {
    if (!queued_[static_cast<std::size_t>(c)]) {
      queued_[static_cast<std::size_t>(c)] = true;
      queue_.push_back(c);
    }
  }

  bool improve_two_opt(City a) {
    if (tour_.size() < 4) return false;
    for (int dir = 0; dir < 2; ++dir) {
      // dir 0: edge (a, succ a); dir 1: edge (pred a, a).
      const City a_other = dir == 0 ? tour_.succ(a) : tour_.pred(a);
      const std::int64_t d_removed = d(a, a_other);
      for (City c : nb_.of(a)) {
        const std::int64_t d_added = d(a, c);
        if (d_added >= d_removed) break;
        const City c_other = dir == 0 ? tour_.succ(c) : tour_.pred(c);
        if (c == a_other || c_other == a) continue;
        const std::int64_t delta = d_added + d(a_other, c_other) - d_removed - d(c, c_other);
        if (delta < 0) {
          if (dir == 0) {
            tour_.two_opt(a, c);
          } else {
            tour_.two_opt(a_other, c_other);
          }
          push(a_other);
          push(c);
          push(c_other);
          return true;
        }
      }
    }
    return false;
  }

  bool improve_or_opt(City a) {
    const std::size_t n = tour_.size();
    for (std::size_t len = 1; len <= 3; ++len) {
      if (n < len + 3) break;
      City b = a;
      for (std::size_t k = 1; k < len; ++k) b = tour_.succ(b);
      const City p = tour_.pred(a);
      const City q = tour_.succ(b);
      const std::int64_t removed_base = d(p, a) + d(b, q) - d(p, q);
      if (removed_base <= 0) continue;

      for (int end = 0; end < 2; ++end) {
        const City anchor = end == 0 ? a : b;
        for (City c : nb_.of(anchor)) {
          if (d(anchor, c) >= removed_base) break;
          if (tour_.forward_offset(a, c) < len) continue;
          for (int side = 0; side < 2; ++side) {
            const City x = side == 0 ? c : tour_.pred(c);
            const City y = side == 0 ? tour_.succ(c) : c;
            if (tour_.forward_offset(a, x) < len || tour_.forward_offset(a, y) < len) continue;
            if (y == p) continue;
            const std::int64_t removed = removed_base + d(x, y);
            const std::int64_t reversed = d(x, b) + d(a, y);
            const std::int64_t forward = d(x, a) + d(b, y);
            const bool use_forward = len > 1 && forward < reversed;
            const std::int64_t delta = (use_forward ? forward : reversed) - removed;
            if (delta >= 0) continue;

            // p a..b q ... x y  ->  p q ... x b..a y  (-> x a..b y)
            tour_.exchange(p, a, x, y);
            if (x != q) tour_.exchange(p, x, q, b);
            if (use_forward) tour_.exchange(x, b, a, y);
            for (City touched : {p, q, a, b, x, y}) push(touched);
            return true;
          }
        }
      }
    }
    return false;
  }

  const ProblemInstance& inst_;
  const NeighborLists& nb_;
  CyclicTour tour_;
  std::vector<bool> queued_;
  std::deque<City> queue_;
};

std::vector<City> nearest_neighbor_order(const ProblemInstance& inst, const NeighborLists& neighbors,
                                         City start) {
  const std::size_t n = inst.num_cities();
  detail::SpatialGrid grid(inst.coords());
  std::vector<City> order;
  order.reserve(n);
  City current = start;
  grid.deactivate(current);
  order.push_back(current);
  while (order.size() < n) {
    std::optional<City> next;
    for (City c : neighbors.of(current)) {
      if (grid.active(c)) {
        next = c;
        break;
      }
    }
    if (!next) next = grid.nearest_active(current);
    current = *next;
    grid.deactivate(current);
    order.push_back(current);
  }
  return order;
}

double tour_time_reversed(const ProblemInstance& inst, std::span<const City> t,
                          std::span<const std::int64_t> city_weight, std::size_t i, std::size_t j) {
  // Visit order of t with positions i+1..j reversed, evaluated exactly like
  // travel_time() would on the materialized tour.
  const std::size_t n = t.size();
  auto at = [&](std::size_t k) -> City { return (k > i && k <= j) ? t[i + 1 + j - k] : t[k]; };
  double time = 0.0;
  std::int64_t w = 0;
  City here = at(0);
  for (std::size_t k = 0; k < n; ++k) {
    const City next = at(k + 1 == n ? 0 : k + 1);
    w += city_weight[static_cast<std::size_t>(here)];
    time += static_cast<double>(inst.distance_unchecked(here, next)) / speed_unchecked(inst, w);
    here = next;
  }
  return time;
}

}  // namespace

NeighborLists::NeighborLists(const ProblemInstance& inst, std::size_t k) {
  const std::size_t n = inst.num_cities();
  k_ = std::min(k, n - 1);
  flat_.resize(n * k_);
  detail::SpatialGrid grid(inst.coords());
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<City> near = grid.k_nearest(static_cast<City>(c), k_);
    std::stable_sort(near.begin(), near.end(), [&](City a, City b) {
      const auto da = inst.distance_unchecked(static_cast<City>(c), a);
      const auto db = inst.distance_unchecked(static_cast<City>(c), b);
      return da < db || (da == db && a < b);
    });
    std::copy(near.begin(), near.end(), flat_.begin() + static_cast<std::ptrdiff_t>(c * k_));
  }
}

std::int64_t local_search(const ProblemInstance& inst, const NeighborLists& neighbors,
                          std::vector<City>& tour, Rng& rng) {
  Descent(inst, neighbors, tour).run(rng);
  std::int64_t len = 0;
  for (std::size_t i = 0; i < tour.size(); ++i) {
    len += inst.distance_unchecked(tour[i], tour[(i + 1) % tour.size()]);
  }
  return len;
}

Tour construct_tour(const ProblemInstance& inst, const NeighborLists& neighbors, Rng& rng) {
  const std::size_t n = inst.num_cities();
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<City> order = nearest_neighbor_order(inst, neighbors, static_cast<City>(pick(rng)));
  local_search(inst, neighbors, order, rng);

  const auto depot = std::find(order.begin(), order.end(), City{0});
  std::rotate(order.begin(), depot, order.end());
  if (uniform01(rng) < 0.5) std::reverse(order.begin() + 1, order.end());
  return Tour(std::move(order));
}

Tour construct_tour(const ProblemInstance& inst, Rng& rng) {
  const NeighborLists neighbors(inst);
  return construct_tour(inst, neighbors, rng);
}

double average_pair_distance(const ProblemInstance& inst) {
  const std::size_t n = inst.num_cities();
  if (n <= kExactPairDistanceLimit) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        sum += inst.distance_unchecked(static_cast<City>(i), static_cast<City>(j));
      }
    }
    const auto pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    return static_cast<double>(sum) / pairs;
  }
  Rng rng(derive_seed(static_cast<std::uint64_t>(n), "average-pair-distance"));
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  long double sum = 0.0L;
  for (std::size_t s = 0; s < kPairDistanceSamples; ++s) {
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    sum += static_cast<long double>(inst.distance_unchecked(static_cast<City>(i), static_cast<City>(j)));
  }
  return static_cast<double>(sum / static_cast<long double>(kPairDistanceSamples));
}

std::optional<Tour> two_opt_exploit(const ProblemInstance& inst, const Solution& sol, double alpha,
                                    double beta, double ell, const TwoOptOptions& options) {
  if (beta == -std::numeric_limits<double>::infinity()) return std::nullopt;
  const std::size_t n = sol.tour.size();
  if (n < 4) return std::nullopt;

  std::vector<std::int64_t> city_weight(n, 0);
  for (ItemIndex j : sol.plan.selected_items()) {
    city_weight[static_cast<std::size_t>(inst.item(j).city)] += inst.item(j).weight;
  }
  const std::span<const City> t = sol.tour.cities();
  const double tolerance = ell * beta;
  const double renting = inst.renting_rate();

  double best_f = scalarize(sol.profit, sol.time, alpha, renting);
  std::optional<std::pair<std::size_t, std::size_t>> best;

  auto consider = [&](std::size_t i, std::size_t j) {
    const City a = t[i], b = t[i + 1], c = t[j], e = t[j + 1 == n ? 0 : j + 1];
    const std::int64_t delta = inst.distance_unchecked(a, c) + inst.distance_unchecked(b, e) -
                               inst.distance_unchecked(a, b) - inst.distance_unchecked(c, e);
    if (!(static_cast<double>(delta) <= tolerance)) return;
    const double time = tour_time_reversed(inst, t, city_weight, i, j);
    const double f = scalarize(sol.profit, time, alpha, renting);
    if (f > best_f) {
      best_f = f;
      best = std::make_pair(i, j);
    }
  };

  if (options.candidates == nullptr) {
    for (std::size_t i = 0; i + 2 < n; ++i) {
      for (std::size_t j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        consider(i, j);
      }
    }
  } else {
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[static_cast<std::size_t>(t[k])] = k;
    std::vector<std::pair<std::size_t, std::size_t>> moves;
    for (std::size_t i = 0; i < n; ++i) {
      for (City c : options.candidates->of(t[i])) {
        std::size_t lo = i, hi = pos[static_cast<std::size_t>(c)];
        if (lo > hi) std::swap(lo, hi);
        if (hi < lo + 2 || (lo == 0 && hi == n - 1)) continue;
        moves.emplace_back(lo, hi);
      }
    }
    std::sort(moves.begin(), moves.end());
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
    for (const auto& [i, j] : moves) consider(i, j);
  }

  if (!best) return std::nullopt;
  std::vector<City> order(t.begin(), t.end());
  std::reverse(order.begin() + static_cast<std::ptrdiff_t>(best->first + 1),
               order.begin() + static_cast<std::ptrdiff_t>(best->second + 1));
  return Tour(std::move(order));
}

}  // namespace bittp
