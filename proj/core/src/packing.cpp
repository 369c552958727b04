#include "bittp/packing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bittp/error.hpp"

namespace bittp {

ScoreExponents normalize_exponents(double a, double b, double c) {
  if (!(a >= 0.0 && b >= 0.0 && c >= 0.0)) {
    throw Error(Errc::all_zero_exponents, "score exponents must be non-negative");
  }
  const double sum = a + b + c;
  if (!(sum > 0.0)) throw Error(Errc::all_zero_exponents, "score exponents are all zero");
  return {a / sum, b / sum, c / sum};
}

ScoredItems score_items(const ProblemInstance& inst, const Tour& tour, double a, double b, double c) {
  ScoredItems out;
  out.exponents = normalize_exponents(a, b, c);
  const std::size_t m = inst.num_items();
  const std::size_t n = tour.size();
  if (n != inst.num_cities()) throw Error(Errc::invalid_tour, "tour does not match the instance");

  // remaining[pos]: length from the city at pos to the end, closing leg included.
  std::vector<std::int64_t> remaining(n + 1, 0);
  std::vector<std::size_t> position(n);
  for (std::size_t pos = n; pos-- > 0;) {
    const City next = tour[pos + 1 == n ? 0 : pos + 1];
    remaining[pos] = remaining[pos + 1] + inst.distance_unchecked(tour[pos], next);
    position[static_cast<std::size_t>(tour[pos])] = pos;
  }

  out.score.resize(m);
  out.carry.resize(m);
  const auto& e = out.exponents;
  for (std::size_t j = 0; j < m; ++j) {
    const Item& it = inst.items()[j];
    const std::int64_t carry = remaining[position[static_cast<std::size_t>(it.city)]];
    out.carry[j] = carry;
    out.score[j] = std::pow(static_cast<double>(it.profit), e.profit) /
                   (std::pow(static_cast<double>(it.weight), e.weight) *
                    std::pow(static_cast<double>(carry), e.distance));
  }
  out.order.resize(m);
  std::iota(out.order.begin(), out.order.end(), ItemIndex{0});
  std::stable_sort(out.order.begin(), out.order.end(), [&](ItemIndex x, ItemIndex y) {
    return out.score[static_cast<std::size_t>(x)] > out.score[static_cast<std::size_t>(y)];
  });
  return out;
}

std::int64_t initial_phi(std::size_t num_items, std::int64_t gamma, double alpha) {
  return static_cast<std::int64_t>(
      std::ceil(static_cast<double>(num_items) / static_cast<double>(gamma) * alpha + kPhiEpsilon));
}

namespace {

// Committed plan z, pending additions z' \ z, and the incremental evaluation
// state for both.
class PackingAttempt {
 public:
  PackingAttempt(const ProblemInstance& inst, const Tour& tour, const TourProfile& empty_profile,
                 double alpha)
      : inst_(inst),
        alpha_(alpha),
        profile_(empty_profile),
        plan_(inst.num_items()),
        pending_plan_(inst.num_items()),
        delta_(tour.size(), 0) {
    committed_f_ = scalarize(0.0, profile_.travel_time(), alpha_, inst_.renting_rate());
  }

  bool try_add(ItemIndex j) {
    if (!pending_plan_.try_add(inst_, j)) return false;
    const Item& it = inst_.item(j);
    const std::size_t pos = profile_.position_of(it.city);
    delta_[pos] += it.weight;
    first_ = std::min(first_, pos);
    touched_.push_back(pos);
    pending_profit_ += it.profit;
    pending_.push_back(j);
    return true;
  }

  // Compares z' against z; commits on strict improvement, rolls back otherwise.
  bool evaluate() {
    const double time = profile_.time_with_changes(delta_, first_);
    const double profit = static_cast<double>(committed_profit_ + pending_profit_);
    const double f = scalarize(profit, time, alpha_, inst_.renting_rate());
    const bool improved = f > committed_f_;
    if (improved) {
      profile_.apply_changes(delta_, first_);
      for (ItemIndex j : pending_) plan_.try_add(inst_, j);
      committed_profit_ += pending_profit_;
      committed_f_ = f;
    } else {
      for (ItemIndex j : pending_) pending_plan_.remove(inst_, j);
    }
    clear_pending();
    return improved;
  }

  const PackingPlan& plan() const noexcept { return plan_; }
  double objective() const noexcept { return committed_f_; }

 private:
  void clear_pending() {
    for (std::size_t pos : touched_) delta_[pos] = 0;
    touched_.clear();
    pending_.clear();
    pending_profit_ = 0;
    first_ = static_cast<std::size_t>(-1);
  }

  const ProblemInstance& inst_;
  double alpha_;
  TourProfile profile_;
  PackingPlan plan_;
  PackingPlan pending_plan_;
  std::vector<std::int64_t> delta_;
  std::vector<std::size_t> touched_;
  std::vector<ItemIndex> pending_;
  std::int64_t pending_profit_ = 0;
  std::int64_t committed_profit_ = 0;
  double committed_f_ = 0.0;
  std::size_t first_ = static_cast<std::size_t>(-1);
};

}  // namespace

PackingResult randomized_packing_run(const ProblemInstance& inst, const Tour& tour, std::int64_t rho,
                                     double alpha, std::int64_t gamma, Rng& rng) {
  if (rho < 1) throw Error(Errc::invalid_config, "rho must be at least 1");
  if (gamma < 1) throw Error(Errc::invalid_config, "gamma must be at least 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(Errc::alpha_out_of_range, "alpha must lie in [0, 1]");

  const std::size_t m = inst.num_items();
  const TourProfile empty_profile(inst, tour, PackingPlan(m));

  PackingResult result;
  result.plan = PackingPlan(m);
  result.objective = scalarize(0.0, empty_profile.travel_time(), alpha, inst.renting_rate());
  result.best_after_attempt.reserve(static_cast<std::size_t>(rho));

  for (std::int64_t attempt = 0; attempt < rho; ++attempt) {
    double a = 0.0, b = 0.0, c = 0.0;
    do {
      a = uniform01(rng);
      b = uniform01(rng);
      c = uniform01(rng);
    } while (a + b + c == 0.0);
    const ScoredItems scored = score_items(inst, tour, a, b, c);

    std::int64_t phi = initial_phi(m, gamma, alpha);
    PackingAttempt state(inst, tour, empty_profile, alpha);
    bool new_plan = false;
    // k and k_prime are 1-based ranks in score order.
    std::int64_t k = 1;
    std::int64_t k_prime = 1;
    const auto m_signed = static_cast<std::int64_t>(m);
    while (k_prime <= m_signed && phi >= 1) {
      const ItemIndex j = scored.order[static_cast<std::size_t>(k_prime - 1)];
      if (state.try_add(j)) new_plan = true;
      if (k_prime % phi == 0 && new_plan) {
        if (state.evaluate()) {
          k = k_prime;
        } else {
          k_prime = k;
          phi /= 2;
        }
        new_plan = false;
      }
      ++k_prime;
    }

    if (state.objective() > result.objective) {
      result.objective = state.objective();
      result.plan = state.plan();
    }
    result.best_after_attempt.push_back(result.objective);
  }
  return result;
}

PackingPlan randomized_packing(const ProblemInstance& inst, const Tour& tour, std::int64_t rho,
                               double alpha, std::int64_t gamma, Rng& rng) {
  return randomized_packing_run(inst, tour, rho, alpha, gamma, rng).plan;
}

}  // namespace bittp
