#include "bittp/hypervolume.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bittp/error.hpp"

namespace bittp {

Bounds bounds_of(std::span<const ObjectivePoint> points) {
  if (points.empty()) return {};
  Bounds b{points[0].profit, points[0].profit, points[0].time, points[0].time};
  for (const auto& p : points) {
    b.g_min = std::min(b.g_min, p.profit);
    b.g_max = std::max(b.g_max, p.profit);
    b.h_min = std::min(b.h_min, p.time);
    b.h_max = std::max(b.h_max, p.time);
  }
  return b;
}

Bounds merge(const Bounds& a, const Bounds& b) {
  return {std::min(a.g_min, b.g_min), std::max(a.g_max, b.g_max), std::min(a.h_min, b.h_min),
          std::max(a.h_max, b.h_max)};
}

ObjectivePoint normalize(const ObjectivePoint& p, const Bounds& b) noexcept {
  const double g = b.g_max > b.g_min ? (p.profit - b.g_min) / (b.g_max - b.g_min) : 0.0;
  const double h = b.h_max > b.h_min ? (p.time - b.h_min) / (b.h_max - b.h_min) : 0.0;
  return {g, h};
}

std::vector<ObjectivePoint> normalize(std::span<const ObjectivePoint> points, const Bounds& b) {
  std::vector<ObjectivePoint> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(normalize(p, b));
  return out;
}

bool mutually_nondominated(std::span<const ObjectivePoint> points) {
  std::vector<ObjectivePoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), [](const ObjectivePoint& a, const ObjectivePoint& b) {
    return a.profit < b.profit || (a.profit == b.profit && a.time < b.time);
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (!(sorted[i].profit > sorted[i - 1].profit && sorted[i].time > sorted[i - 1].time)) return false;
  }
  return true;
}

namespace {

void check_reference(std::span<const ObjectivePoint> points, const ObjectivePoint& ref) {
  for (const auto& p : points) {
    if (!(p.profit >= ref.profit && p.time <= ref.time)) {
      throw Error(Errc::ref_point_dominated, "reference point does not bound (" + std::to_string(p.profit) +
                                                 ", " + std::to_string(p.time) + ")");
    }
  }
}

std::vector<std::size_t> profit_order(std::span<const ObjectivePoint> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return points[a].profit < points[b].profit; });
  return order;
}

inline double slab(double g, double g_prev, double h, double h_ref) noexcept { return (g - g_prev) * (h_ref - h); }

}  // namespace

double hypervolume(std::span<const ObjectivePoint> points, const ObjectivePoint& ref) {
  check_reference(points, ref);
  double volume = 0.0;
  double g_prev = ref.profit;
  for (std::size_t i : profit_order(points)) {
    volume += slab(points[i].profit, g_prev, points[i].time, ref.time);
    g_prev = points[i].profit;
  }
  return volume;
}

std::vector<std::size_t> subset_select(std::span<const ObjectivePoint> points, std::size_t k,
                                       const ObjectivePoint& ref) {
  check_reference(points, ref);
  std::vector<std::size_t> order = profit_order(points);
  const std::size_t n = points.size();
  if (k >= n) return order;
  if (k == 0) return {};

  // best[c * n + i]: largest volume of c + 1 points whose rightmost is order[i].
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<double> best(k * n, -1.0);
  std::vector<std::size_t> parent(k * n, kNone);
  for (std::size_t i = 0; i < n; ++i) {
    const ObjectivePoint& p = points[order[i]];
    best[i] = 0.0 + slab(p.profit, ref.profit, p.time, ref.time);
  }
  for (std::size_t c = 1; c < k; ++c) {
    for (std::size_t i = c; i < n; ++i) {
      const ObjectivePoint& p = points[order[i]];
      double v_best = -1.0;
      std::size_t arg = kNone;
      for (std::size_t q = c - 1; q < i; ++q) {
        const double prev = best[(c - 1) * n + q];
        if (prev < 0.0) continue;
        const double v = prev + slab(p.profit, points[order[q]].profit, p.time, ref.time);
        if (v > v_best) {
          v_best = v;
          arg = q;
        }
      }
      best[c * n + i] = v_best;
      parent[c * n + i] = arg;
    }
  }

  // Larger subsets win ties.
  double top = -1.0;
  std::size_t top_c = 0, top_i = kNone;
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      const double v = best[c * n + i];
      if (v >= 0.0 && (v > top || (v == top && c > top_c))) {
        top = v;
        top_c = c;
        top_i = i;
      }
    }
  }

  std::vector<std::size_t> chosen;
  for (std::size_t c = top_c + 1, i = top_i; c-- > 0;) {
    chosen.push_back(order[i]);
    i = parent[c * n + i];
  }
  std::reverse(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace bittp
