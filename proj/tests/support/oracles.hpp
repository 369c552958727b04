#pragma once

// Independent reference implementations used by the tests. Nothing here
// calls into the library's evaluation code.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "bittp/evaluation.hpp"
#include "bittp/instance.hpp"
#include "bittp/rng.hpp"

namespace bittp::testing {

std::filesystem::path fixture_path(const std::string& name);
ProblemInstance toy3();

struct RandomInstanceSpec {
  std::size_t n = 6;
  std::size_t m = 5;
  double coord_range = 100.0;
  std::int64_t max_profit = 100;
  std::int64_t max_weight = 40;
  // Capacity as a fraction of the total item weight.
  double capacity_fraction = 0.5;
  double min_speed = 0.1;
  double max_speed = 1.0;
  double renting_rate = 1.0;
  bool integer_coords = true;
};

ProblemInstance random_instance(Rng& rng, const RandomInstanceSpec& spec);
// n in [n_lo, n_hi], m in [m_lo, m_hi], renting rate drawn from (0, 2].
ProblemInstance random_small_instance(Rng& rng, std::size_t n_lo, std::size_t n_hi, std::size_t m_lo,
                                      std::size_t m_hi);

std::vector<City> random_tour(Rng& rng, std::size_t n);
std::vector<bool> random_plan(Rng& rng, const ProblemInstance& inst);

std::int64_t naive_distance(const ProblemInstance& inst, City a, City b);

// Direct double loop over the weight recursion and the travel-time sum.
double naive_travel_time(const ProblemInstance& inst, const std::vector<City>& tour,
                         const std::vector<bool>& selected);
std::int64_t naive_weight_after(const ProblemInstance& inst, const std::vector<City>& tour,
                                const std::vector<bool>& selected, std::size_t pos);
double naive_profit(const ProblemInstance& inst, const std::vector<bool>& selected);

// Every tour starting at city 0, both orientations.
std::vector<std::vector<City>> all_tours(std::size_t n);
std::int64_t brute_force_tour_length(const ProblemInstance& inst);

// Non-dominated front over every tour and every feasible plan, profit ascending.
std::vector<ObjectivePoint> brute_force_front(const ProblemInstance& inst);

// max over feasible plans of alpha*g - (1-alpha)*R*h for a fixed tour.
double brute_force_best_objective(const ProblemInstance& inst, const std::vector<City>& tour, double alpha);

// Points of `stream` that no other point weakly dominates, first occurrence
// of each objective vector only, profit ascending.
std::vector<ObjectivePoint> dominance_filter(const std::vector<ObjectivePoint>& stream);

// Largest hypervolume over all subsets of at most k points, by enumeration.
double brute_force_subset_hv(const std::vector<ObjectivePoint>& points, std::size_t k, const ObjectivePoint& ref);

// Random mutually non-dominated front in the unit square.
std::vector<ObjectivePoint> random_front(Rng& rng, std::size_t size);

}  // namespace bittp::testing
