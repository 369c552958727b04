#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bittp/evaluation.hpp"

namespace bittp {

// Objective ranges used to map fronts into the unit square.
struct Bounds {
  double g_min = 0.0;
  double g_max = 0.0;
  double h_min = 0.0;
  double h_max = 0.0;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

// Tightest bounds containing every point. Empty input gives all zeros.
Bounds bounds_of(std::span<const ObjectivePoint> points);
Bounds merge(const Bounds& a, const Bounds& b);

// (g - g_min) / (g_max - g_min), likewise for time; a degenerate range maps
// its coordinate to 0.
ObjectivePoint normalize(const ObjectivePoint& p, const Bounds& b) noexcept;
std::vector<ObjectivePoint> normalize(std::span<const ObjectivePoint> points, const Bounds& b);

// Profit maximized from 0, time minimized from 1.
inline constexpr ObjectivePoint kDefaultReference{0.0, 1.0};

bool mutually_nondominated(std::span<const ObjectivePoint> points);

/// Area dominated by a non-dominated front and bounded by `ref`.
///
/// Points are summed left to right in ascending profit as
/// (g_i - g_{i-1}) * (ref.time - h_i) with g_0 = ref.profit. Throws
/// Errc::ref_point_dominated if some point is worse than the reference in
/// either coordinate.
double hypervolume(std::span<const ObjectivePoint> points, const ObjectivePoint& ref = kDefaultReference);

/// Indices of at most `k` points whose hypervolume is maximal.
///
/// Exact dynamic program over points sorted by profit, O(N^2 k) time. The
/// value of the chosen subset equals hypervolume() of that subset bit for
/// bit. Returned indices refer to `points` and are in ascending profit. For
/// k >= N all indices are returned.
std::vector<std::size_t> subset_select(std::span<const ObjectivePoint> points, std::size_t k,
                                       const ObjectivePoint& ref = kDefaultReference);

}  // namespace bittp
