#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bittp/evaluation.hpp"
#include "bittp/instance.hpp"
#include "bittp/rng.hpp"

namespace bittp {

struct ScoreExponents {
  double profit = 1.0;
  double weight = 0.0;
  double distance = 0.0;
};

struct ScoredItems {
  ScoreExponents exponents;          // normalized to sum 1
  std::vector<double> score;         // per item
  std::vector<std::int64_t> carry;   // distance each item travels back to the depot
  std::vector<ItemIndex> order;      // descending score, ties by index
};

// Scales raw exponents to sum to one; throws Errc::all_zero_exponents.
ScoreExponents normalize_exponents(double a, double b, double c);

// s_j = p_j^a / (w_j^b * d_j^c) with normalized exponents, where d_j is the
// tour length from item j's city to the end of the tour, closing leg included.
ScoredItems score_items(const ProblemInstance& inst, const Tour& tour, double a, double b, double c);

inline constexpr double kPhiEpsilon = 1e-5;

// Items analyzed between objective re-evaluations: ceil(m / gamma * alpha + eps).
std::int64_t initial_phi(std::size_t num_items, std::int64_t gamma, double alpha);

struct PackingResult {
  PackingPlan plan;
  double objective = 0.0;
  // Best objective after each attempt (non-decreasing).
  std::vector<double> best_after_attempt;
};

/// Randomized multi-attempt greedy packing for a fixed tour.
///
/// Each attempt draws score exponents uniformly from [0,1]^3, walks the
/// items in score order adding those that fit, and re-evaluates the weighted
/// objective every phi analyzed items. An improving batch is committed; a
/// failing batch is rolled back and phi is halved. The best plan over all
/// attempts is returned, starting from the empty plan. Requires rho >= 1,
/// gamma >= 1 and alpha in [0, 1].
PackingResult randomized_packing_run(const ProblemInstance& inst, const Tour& tour, std::int64_t rho,
                                     double alpha, std::int64_t gamma, Rng& rng);

PackingPlan randomized_packing(const ProblemInstance& inst, const Tour& tour, std::int64_t rho,
                               double alpha, std::int64_t gamma, Rng& rng);

}  // namespace bittp
