#include "spatial_grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <utility>

namespace bittp::detail {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Candidate {
  double sq;
  City city;
  bool operator<(const Candidate& o) const noexcept {
    return sq < o.sq || (sq == o.sq && city < o.city);
  }
};

}  // namespace

SpatialGrid::SpatialGrid(std::span<const Point> points) : points_(points) {
  const std::size_t n = points.size();
  if (n == 0) return;
  double max_x = points[0].x, max_y = points[0].y;
  min_x_ = points[0].x;
  min_y_ = points[0].y;
  for (const Point& p : points) {
    min_x_ = std::min(min_x_, p.x);
    min_y_ = std::min(min_y_, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  const double w = max_x - min_x_;
  const double h = max_y - min_y_;
  const double target_cells = std::max(1.0, static_cast<double>(n) / 2.0);
  if (w > 0.0 && h > 0.0) {
    cell_size_ = std::sqrt(w * h / target_cells);
  } else if (w > 0.0 || h > 0.0) {
    cell_size_ = std::max(w, h) / target_cells;
  } else {
    cell_size_ = 1.0;
  }
  // Keep the grid within a few cells per point for very elongated layouts.
  nx_ = static_cast<std::size_t>(w / cell_size_) + 1;
  ny_ = static_cast<std::size_t>(h / cell_size_) + 1;
  while (nx_ * ny_ > 4 * n + 16) {
    cell_size_ *= 1.5;
    nx_ = static_cast<std::size_t>(w / cell_size_) + 1;
    ny_ = static_cast<std::size_t>(h / cell_size_) + 1;
  }

  cells_.assign(nx_ * ny_, {});
  cell_index_.resize(n);
  slot_.resize(n);
  active_list_.resize(n);
  active_slot_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t cx = 0, cy = 0;
    const std::size_t cell = cell_of(points[i], cx, cy);
    cell_index_[i] = cell;
    slot_[i] = cells_[cell].size();
    cells_[cell].push_back(static_cast<City>(i));
    active_list_[i] = static_cast<City>(i);
    active_slot_[i] = i;
  }
}

std::size_t SpatialGrid::cell_of(const Point& p, std::size_t& cx, std::size_t& cy) const noexcept {
  cx = std::min(nx_ - 1, static_cast<std::size_t>(std::max(0.0, (p.x - min_x_) / cell_size_)));
  cy = std::min(ny_ - 1, static_cast<std::size_t>(std::max(0.0, (p.y - min_y_) / cell_size_)));
  return cy * nx_ + cx;
}

double SpatialGrid::sq_dist(City a, City b) const noexcept {
  const Point& p = points_[static_cast<std::size_t>(a)];
  const Point& q = points_[static_cast<std::size_t>(b)];
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

double SpatialGrid::ring_clearance(const Point& p, std::size_t cx, std::size_t cy,
                                   std::size_t r) const noexcept {
  double clearance = kInf;
  if (cx >= r + 1) clearance = std::min(clearance, p.x - (min_x_ + static_cast<double>(cx - r) * cell_size_));
  if (cx + r + 1 < nx_) {
    clearance = std::min(clearance, (min_x_ + static_cast<double>(cx + r + 1) * cell_size_) - p.x);
  }
  if (cy >= r + 1) clearance = std::min(clearance, p.y - (min_y_ + static_cast<double>(cy - r) * cell_size_));
  if (cy + r + 1 < ny_) {
    clearance = std::min(clearance, (min_y_ + static_cast<double>(cy + r + 1) * cell_size_) - p.y);
  }
  return std::max(0.0, clearance);
}

std::vector<City> SpatialGrid::k_nearest(City c, std::size_t k) const {
  const std::size_t n = points_.size();
  k = std::min(k, n == 0 ? 0 : n - 1);
  std::vector<City> out;
  if (k == 0) return out;

  const Point& p = points_[static_cast<std::size_t>(c)];
  std::size_t cx = 0, cy = 0;
  cell_of(p, cx, cy);
  std::priority_queue<Candidate> heap;  // worst candidate on top

  const std::size_t max_r = std::max(nx_, ny_);
  for (std::size_t r = 0; r <= max_r; ++r) {
    visit_ring(cx, cy, r, [&](std::size_t cell) {
      for (City other : cells_[cell]) {
        if (other == c) continue;
        const Candidate cand{sq_dist(c, other), other};
        if (heap.size() < k) {
          heap.push(cand);
        } else if (cand < heap.top()) {
          heap.pop();
          heap.push(cand);
        }
      }
    });
    const double clear = ring_clearance(p, cx, cy, r);
    if (clear == kInf) break;
    if (heap.size() == k && heap.top().sq < clear * clear) break;
  }

  out.resize(heap.size());
  for (std::size_t i = heap.size(); i-- > 0;) {
    out[i] = heap.top().city;
    heap.pop();
  }
  return out;
}

void SpatialGrid::deactivate(City c) {
  const auto i = static_cast<std::size_t>(c);
  if (slot_[i] == kInactive) return;
  auto& cell = cells_[cell_index_[i]];
  const City moved = cell.back();
  cell[slot_[i]] = moved;
  slot_[static_cast<std::size_t>(moved)] = slot_[i];
  cell.pop_back();
  slot_[i] = kInactive;

  const City moved_active = active_list_.back();
  active_list_[active_slot_[i]] = moved_active;
  active_slot_[static_cast<std::size_t>(moved_active)] = active_slot_[i];
  active_list_.pop_back();
}

std::optional<City> SpatialGrid::nearest_active(City from) const {
  std::optional<Candidate> best;
  auto consider = [&](City other) {
    if (other == from) return;
    const Candidate cand{sq_dist(from, other), other};
    if (!best || cand < *best) best = cand;
  };

  const Point& p = points_[static_cast<std::size_t>(from)];
  std::size_t cx = 0, cy = 0;
  cell_of(p, cx, cy);
  std::size_t cells_visited = 0;
  const std::size_t max_r = std::max(nx_, ny_);
  for (std::size_t r = 0; r <= max_r; ++r) {
    visit_ring(cx, cy, r, [&](std::size_t cell) {
      ++cells_visited;
      for (City other : cells_[cell]) consider(other);
    });
    const double clear = ring_clearance(p, cx, cy, r);
    if (clear == kInf) break;
    if (best && best->sq < clear * clear) break;
    // Sparse tail of a construction: scanning the survivors is cheaper.
    if (cells_visited > active_list_.size() + 16) {
      best.reset();
      for (City other : active_list_) consider(other);
      break;
    }
  }
  if (!best) return std::nullopt;
  return best->city;
}

}  // namespace bittp::detail
