#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bittp/instance.hpp"

namespace bittp::detail {

// Uniform bucket grid over the city coordinates. Supports k-nearest queries
// and nearest-active queries over a shrinking set of cities.
class SpatialGrid {
 public:
  explicit SpatialGrid(std::span<const Point> points);

  // k nearest other cities by Euclidean distance, ties broken by index.
  std::vector<City> k_nearest(City c, std::size_t k) const;

  void deactivate(City c);
  bool active(City c) const noexcept { return slot_[static_cast<std::size_t>(c)] != kInactive; }
  std::size_t active_count() const noexcept { return active_list_.size(); }
  // Closest still-active city to `from`; nullopt when none remain.
  std::optional<City> nearest_active(City from) const;

 private:
  static constexpr std::size_t kInactive = static_cast<std::size_t>(-1);

  std::size_t cell_of(const Point& p, std::size_t& cx, std::size_t& cy) const noexcept;
  double sq_dist(City a, City b) const noexcept;
  // Lower bound on the distance from `p` to any cell outside ring `r`.
  double ring_clearance(const Point& p, std::size_t cx, std::size_t cy, std::size_t r) const noexcept;

  // Calls fn(cell) for every in-bounds cell at Chebyshev distance r.
  template <typename Fn>
  void visit_ring(std::size_t cx, std::size_t cy, std::size_t r, Fn&& fn) const {
    const auto x0 = static_cast<std::ptrdiff_t>(cx), y0 = static_cast<std::ptrdiff_t>(cy);
    const auto rr = static_cast<std::ptrdiff_t>(r);
    const auto nx = static_cast<std::ptrdiff_t>(nx_), ny = static_cast<std::ptrdiff_t>(ny_);
    auto emit = [&](std::ptrdiff_t x, std::ptrdiff_t y) {
      if (x >= 0 && x < nx && y >= 0 && y < ny) fn(static_cast<std::size_t>(y * nx + x));
    };
    if (r == 0) {
      emit(x0, y0);
      return;
    }
    for (std::ptrdiff_t x = x0 - rr; x <= x0 + rr; ++x) {
      emit(x, y0 - rr);
      emit(x, y0 + rr);
    }
    for (std::ptrdiff_t y = y0 - rr + 1; y <= y0 + rr - 1; ++y) {
      emit(x0 - rr, y);
      emit(x0 + rr, y);
    }
  }

  std::span<const Point> points_;
  double min_x_ = 0.0, min_y_ = 0.0, cell_size_ = 1.0;
  std::size_t nx_ = 1, ny_ = 1;
  std::vector<std::vector<City>> cells_;
  std::vector<std::size_t> cell_index_;  // per city
  std::vector<std::size_t> slot_;        // position inside its cell, or kInactive
  std::vector<City> active_list_;
  std::vector<std::size_t> active_slot_;
};

}  // namespace bittp::detail
