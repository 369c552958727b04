#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "bittp/instance.hpp"

namespace bittp {

/// Visiting order of all cities. Always a permutation that starts at the
/// depot (city 0); the constructor rejects anything else.
class Tour {
 public:
  Tour() = default;
  explicit Tour(std::vector<City> order);

  static Tour identity(std::size_t n);

  std::size_t size() const noexcept { return order_.size(); }
  City operator[](std::size_t pos) const noexcept { return order_[pos]; }
  std::span<const City> cities() const noexcept { return order_; }
  auto begin() const noexcept { return order_.begin(); }
  auto end() const noexcept { return order_.end(); }

  // Sum of the n legs including the closing one.
  std::int64_t length(const ProblemInstance& inst) const;

  friend bool operator==(const Tour&, const Tour&) = default;

 private:
  std::vector<City> order_;
};

/// Item selection with its cached total weight. Mutators take the instance
/// so the capacity bound is enforced at every step.
class PackingPlan {
 public:
  PackingPlan() = default;
  explicit PackingPlan(std::size_t num_items) : selected_(num_items, 0) {}

  // Throws Errc::invalid_plan on duplicates, bad indices or overweight.
  static PackingPlan from_items(const ProblemInstance& inst, std::span<const ItemIndex> items);

  std::size_t num_items() const noexcept { return selected_.size(); }
  bool contains(ItemIndex j) const noexcept { return selected_[static_cast<std::size_t>(j)] != 0; }
  std::int64_t total_weight() const noexcept { return total_weight_; }
  std::size_t count() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool fits(const ProblemInstance& inst, ItemIndex j) const noexcept {
    return !contains(j) && total_weight_ + inst.item(j).weight <= inst.capacity();
  }
  // Adds j when it fits; returns whether the plan changed.
  bool try_add(const ProblemInstance& inst, ItemIndex j);
  void remove(const ProblemInstance& inst, ItemIndex j);

  std::vector<ItemIndex> selected_items() const;

  friend bool operator==(const PackingPlan&, const PackingPlan&) = default;

 private:
  std::vector<std::uint8_t> selected_;
  std::int64_t total_weight_ = 0;
  std::size_t count_ = 0;
};

struct ObjectivePoint {
  double profit = 0.0;  // maximized
  double time = 0.0;    // minimized

  friend bool operator==(const ObjectivePoint&, const ObjectivePoint&) = default;
};

// a weakly dominates b: at least as good in both, strictly better in one.
inline bool dominates(const ObjectivePoint& a, const ObjectivePoint& b) noexcept {
  return a.profit >= b.profit && a.time <= b.time && (a.profit > b.profit || a.time < b.time);
}

struct Solution {
  Tour tour;
  PackingPlan plan;
  double profit = 0.0;
  double time = 0.0;
  // Weight in effect when the solution was produced; informational only.
  double alpha = std::numeric_limits<double>::quiet_NaN();

  ObjectivePoint point() const noexcept { return {profit, time}; }
};

double speed(const ProblemInstance& inst, std::int64_t weight);

// Same formula without the range check, clamped to [v_min, v_max].
inline double speed_unchecked(const ProblemInstance& inst, std::int64_t weight) noexcept {
  const double v = inst.max_speed() - static_cast<double>(weight) * inst.speed_slope();
  return v < inst.min_speed() ? inst.min_speed() : v;
}

// Weight carried after leaving the city at zero-based tour position `pos`.
std::int64_t weight_after(const ProblemInstance& inst, const Tour& tour, const PackingPlan& plan,
                          std::size_t pos);

double travel_time(const ProblemInstance& inst, const Tour& tour, const PackingPlan& plan);
double total_profit(const ProblemInstance& inst, const PackingPlan& plan);

// alpha * g - (1 - alpha) * R * h.  Every scalarization in the library goes
// through this function so the endpoints are bit-exact.
inline double scalarize(double profit, double time, double alpha, double renting_rate) noexcept {
  return alpha * profit - (1.0 - alpha) * renting_rate * time;
}

double weighted_objective(const ProblemInstance& inst, const Tour& tour, const PackingPlan& plan,
                          double alpha);

Solution make_solution(const ProblemInstance& inst, Tour tour, PackingPlan plan,
                       double alpha = std::numeric_limits<double>::quiet_NaN());

// Full feasibility check against the permutation, depot and capacity rules,
// plus cache coherence of the plan and the solution's objectives.
bool is_valid(const ProblemInstance& inst, const Solution& sol);

/// Per-position weights and running travel time for one (tour, plan) pair.
///
/// Lets callers re-evaluate the travel time after weight changes at a tour
/// position by recomputing only the suffix from that position. The suffix
/// walk performs exactly the floating-point operations of travel_time(), so
/// incremental and from-scratch results are bit-identical.
class TourProfile {
 public:
  TourProfile(const ProblemInstance& inst, const Tour& tour, const PackingPlan& plan);

  std::size_t size() const noexcept { return legs_.size(); }
  double travel_time() const noexcept { return prefix_time_.back(); }
  std::size_t position_of(City c) const noexcept { return position_[static_cast<std::size_t>(c)]; }
  std::int64_t leg(std::size_t pos) const noexcept { return legs_[pos]; }
  std::int64_t weight_after(std::size_t pos) const noexcept { return weight_after_[pos]; }
  // Travel time spent before leaving position `pos`.
  double time_before(std::size_t pos) const noexcept { return prefix_time_[pos]; }
  // Distance from the city at `pos` back to the depot along the tour.
  std::int64_t remaining_length(std::size_t pos) const noexcept { return remaining_length_[pos]; }

  // Travel time if `delta` weight is picked up (or dropped) at `pos`.
  double time_with_change(std::size_t pos, std::int64_t delta) const noexcept;

  // Travel time with per-position weight deltas; entries before `first` must be zero.
  double time_with_changes(std::span<const std::int64_t> delta_by_pos, std::size_t first) const noexcept;
  void apply_changes(std::span<const std::int64_t> delta_by_pos, std::size_t first) noexcept;

 private:
  const ProblemInstance* inst_;
  std::vector<std::int64_t> legs_;
  std::vector<std::size_t> position_;
  std::vector<std::int64_t> weight_after_;
  std::vector<double> prefix_time_;
  std::vector<std::int64_t> remaining_length_;
};

}  // namespace bittp
