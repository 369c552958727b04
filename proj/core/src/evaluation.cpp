#include "bittp/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bittp/error.hpp"

namespace bittp {
namespace {

std::int64_t leg_length(const ProblemInstance& inst, const Tour& tour, std::size_t pos) {
  const std::size_t next = pos + 1 == tour.size() ? 0 : pos + 1;
  return inst.distance_unchecked(tour[pos], tour[next]);
}

void check_shapes(const ProblemInstance& inst, const Tour& tour, const PackingPlan& plan) {
  if (tour.size() != inst.num_cities()) {
    throw Error(Errc::invalid_tour, "tour visits " + std::to_string(tour.size()) +
                                        " cities, instance has " + std::to_string(inst.num_cities()));
  }
  if (plan.num_items() != inst.num_items()) {
    throw Error(Errc::invalid_plan, "plan covers " + std::to_string(plan.num_items()) +
                                        " items, instance has " + std::to_string(inst.num_items()));
  }
}

}  // namespace

Tour::Tour(std::vector<City> order) : order_(std::move(order)) {
  if (order_.empty() || order_.front() != 0) {
    throw Error(Errc::invalid_tour, "tour must start at the depot");
  }
  std::vector<bool> seen(order_.size(), false);
  for (City c : order_) {
    if (c < 0 || static_cast<std::size_t>(c) >= order_.size() || seen[static_cast<std::size_t>(c)]) {
      throw Error(Errc::invalid_tour, "tour is not a permutation of the cities");
    }
    seen[static_cast<std::size_t>(c)] = true;
  }
}

Tour Tour::identity(std::size_t n) {
  std::vector<City> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<City>(i);
  return Tour(std::move(order));
}

std::int64_t Tour::length(const ProblemInstance& inst) const {
  std::int64_t total = 0;
  for (std::size_t pos = 0; pos < size(); ++pos) total += leg_length(inst, *this, pos);
  return total;
}

PackingPlan PackingPlan::from_items(const ProblemInstance& inst, std::span<const ItemIndex> items) {
  PackingPlan plan(inst.num_items());
  for (ItemIndex j : items) {
    if (j < 0 || static_cast<std::size_t>(j) >= inst.num_items()) {
      throw Error(Errc::invalid_plan, "item index " + std::to_string(j) + " out of range");
    }
    if (plan.contains(j)) {
      throw Error(Errc::invalid_plan, "item " + std::to_string(j) + " selected twice");
    }
    if (!plan.try_add(inst, j)) {
      throw Error(Errc::invalid_plan, "selection exceeds the knapsack capacity");
    }
  }
  return plan;
}

bool PackingPlan::try_add(const ProblemInstance& inst, ItemIndex j) {
  if (!fits(inst, j)) return false;
  selected_[static_cast<std::size_t>(j)] = 1;
  total_weight_ += inst.item(j).weight;
  ++count_;
  return true;
}

void PackingPlan::remove(const ProblemInstance& inst, ItemIndex j) {
  if (!contains(j)) return;
  selected_[static_cast<std::size_t>(j)] = 0;
  total_weight_ -= inst.item(j).weight;
  --count_;
}

std::vector<ItemIndex> PackingPlan::selected_items() const {
  std::vector<ItemIndex> out;
  out.reserve(count_);
  for (std::size_t j = 0; j < selected_.size(); ++j) {
    if (selected_[j] != 0) out.push_back(static_cast<ItemIndex>(j));
  }
  return out;
}

double speed(const ProblemInstance& inst, std::int64_t weight) {
  if (weight < 0 || weight > inst.capacity()) {
    throw Error(Errc::weight_out_of_range,
                "weight " + std::to_string(weight) + " outside [0, " + std::to_string(inst.capacity()) + "]");
  }
  return speed_unchecked(inst, weight);
}

std::int64_t weight_after(const ProblemInstance& inst, const Tour& tour, const PackingPlan& plan,
                          std::size_t pos) {
  check_shapes(inst, tour, plan);
  if (pos >= tour.size()) {
    throw Error(Errc::position_out_of_range,
                "position " + std::to_string(pos) + " outside a tour of " + std::to_string(tour.size()));
  }
  std::int64_t w = 0;
  for (std::size_t k = 0; k <= pos; ++k) {
    for (ItemIndex j : inst.items_at(tour[k])) {
      if (plan.contains(j)) w += inst.item(j).weight;
    }
  }
  return w;
}

double travel_time(const ProblemInstance& inst, const Tour& tour, const PackingPlan& plan) {
  check_shapes(inst, tour, plan);
  double t = 0.0;
  std::int64_t w = 0;
  for (std::size_t pos = 0; pos < tour.size(); ++pos) {
    for (ItemIndex j : inst.items_at(tour[pos])) {
      if (plan.contains(j)) w += inst.item(j).weight;
    }
    t += static_cast<double>(leg_length(inst, tour, pos)) / speed_unchecked(inst, w);
  }
  return t;
}

double total_profit(const ProblemInstance& inst, const PackingPlan& plan) {
  if (plan.num_items() != inst.num_items()) {
    throw Error(Errc::invalid_plan, "plan does not match the instance");
  }
  std::int64_t g = 0;
  for (std::size_t j = 0; j < plan.num_items(); ++j) {
    if (plan.contains(static_cast<ItemIndex>(j))) g += inst.items()[j].profit;
  }
  return static_cast<double>(g);
}

double weighted_objective(const ProblemInstance& inst, const Tour& tour, const PackingPlan& plan,
                          double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(Errc::alpha_out_of_range, "alpha must lie in [0, 1]");
  }
  return scalarize(total_profit(inst, plan), travel_time(inst, tour, plan), alpha,
                   inst.renting_rate());
}

Solution make_solution(const ProblemInstance& inst, Tour tour, PackingPlan plan, double alpha) {
  Solution sol;
  sol.profit = total_profit(inst, plan);
  sol.time = travel_time(inst, tour, plan);
  sol.tour = std::move(tour);
  sol.plan = std::move(plan);
  sol.alpha = alpha;
  return sol;
}

bool is_valid(const ProblemInstance& inst, const Solution& sol) {
  const Tour& tour = sol.tour;
  if (tour.size() != inst.num_cities() || tour.size() == 0 || tour[0] != 0) return false;
  std::vector<bool> seen(tour.size(), false);
  for (City c : tour) {
    if (c < 0 || static_cast<std::size_t>(c) >= tour.size() || seen[static_cast<std::size_t>(c)]) {
      return false;
    }
    seen[static_cast<std::size_t>(c)] = true;
  }
  if (sol.plan.num_items() != inst.num_items()) return false;
  std::int64_t w = 0;
  for (ItemIndex j : sol.plan.selected_items()) w += inst.item(j).weight;
  if (w != sol.plan.total_weight() || w > inst.capacity()) return false;
  return sol.profit == total_profit(inst, sol.plan) && sol.time == travel_time(inst, tour, sol.plan);
}

TourProfile::TourProfile(const ProblemInstance& inst, const Tour& tour, const PackingPlan& plan)
    : inst_(&inst) {
  check_shapes(inst, tour, plan);
  const std::size_t n = tour.size();
  legs_.resize(n);
  position_.resize(n);
  weight_after_.resize(n);
  prefix_time_.resize(n + 1);
  remaining_length_.resize(n + 1);

  std::int64_t w = 0;
  prefix_time_[0] = 0.0;
  for (std::size_t pos = 0; pos < n; ++pos) {
    position_[static_cast<std::size_t>(tour[pos])] = pos;
    legs_[pos] = leg_length(inst, tour, pos);
    for (ItemIndex j : inst.items_at(tour[pos])) {
      if (plan.contains(j)) w += inst.item(j).weight;
    }
    weight_after_[pos] = w;
    prefix_time_[pos + 1] =
        prefix_time_[pos] + static_cast<double>(legs_[pos]) / speed_unchecked(inst, w);
  }
  remaining_length_[n] = 0;
  for (std::size_t pos = n; pos-- > 0;) remaining_length_[pos] = remaining_length_[pos + 1] + legs_[pos];
}

double TourProfile::time_with_change(std::size_t pos, std::int64_t delta) const noexcept {
  double t = prefix_time_[pos];
  for (std::size_t i = pos; i < legs_.size(); ++i) {
    t += static_cast<double>(legs_[i]) / speed_unchecked(*inst_, weight_after_[i] + delta);
  }
  return t;
}

double TourProfile::time_with_changes(std::span<const std::int64_t> delta_by_pos,
                                      std::size_t first) const noexcept {
  double t = prefix_time_[first];
  std::int64_t extra = 0;
  for (std::size_t i = first; i < legs_.size(); ++i) {
    extra += delta_by_pos[i];
    t += static_cast<double>(legs_[i]) / speed_unchecked(*inst_, weight_after_[i] + extra);
  }
  return t;
}

void TourProfile::apply_changes(std::span<const std::int64_t> delta_by_pos, std::size_t first) noexcept {
  std::int64_t extra = 0;
  for (std::size_t i = first; i < legs_.size(); ++i) {
    extra += delta_by_pos[i];
    weight_after_[i] += extra;
    prefix_time_[i + 1] =
        prefix_time_[i] + static_cast<double>(legs_[i]) / speed_unchecked(*inst_, weight_after_[i]);
  }
}

}  // namespace bittp
