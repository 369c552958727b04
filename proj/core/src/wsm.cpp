#include "bittp/wsm.hpp"

#include <cassert>
#include <chrono>
#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "bittp/error.hpp"
#include "bittp/packing.hpp"
#include "bittp/tour_search.hpp"

namespace bittp {

AlphaDistribution parse_alpha_distribution(std::string_view name) {
  if (name == "uniform") return AlphaDistribution::uniform;
  if (name == "normal") return AlphaDistribution::normal;
  if (name == "beta-right") return AlphaDistribution::beta_right;
  if (name == "beta-left") return AlphaDistribution::beta_left;
  throw Error(Errc::invalid_config, "unknown alpha distribution '" + std::string(name) + "'");
}

std::string_view to_string(AlphaDistribution d) noexcept {
  switch (d) {
    case AlphaDistribution::uniform: return "uniform";
    case AlphaDistribution::normal: return "normal";
    case AlphaDistribution::beta_right: return "beta-right";
    case AlphaDistribution::beta_left: return "beta-left";
  }
  return "uniform";
}

namespace {

double sample_beta(double a, double b, Rng& rng) {
  const double x = std::gamma_distribution<double>(a, 1.0)(rng);
  const double y = std::gamma_distribution<double>(b, 1.0)(rng);
  return x / (x + y);
}

}  // namespace

double sample_alpha(AlphaDistribution d, Rng& rng) {
  switch (d) {
    case AlphaDistribution::uniform:
      return uniform01(rng);
    case AlphaDistribution::normal: {
      std::normal_distribution<double> normal(0.5, 0.2);
      for (;;) {
        const double x = normal(rng);
        if (x >= 0.0 && x <= 1.0) return x;
      }
    }
    case AlphaDistribution::beta_right:
      return sample_beta(3.0, 1.5, rng);
    case AlphaDistribution::beta_left:
      return sample_beta(1.5, 3.0, rng);
  }
  return uniform01(rng);
}

void WsmConfig::validate() const {
  auto fail = [](const std::string& msg) { throw Error(Errc::invalid_config, msg); };
  if (eta < 1) fail("eta must be at least 1");
  if (rho < 1) fail("rho must be at least 1");
  if (gamma < 1) fail("gamma must be at least 1");
  if (std::isnan(beta) || beta == std::numeric_limits<double>::infinity()) {
    fail("beta must be a finite number or -inf");
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) fail("lambda must lie in [0, 1]");
  if (iterations) {
    if (*iterations < 1) fail("iterations must be at least 1");
  } else if (!(time_limit > 0.0) || std::isinf(time_limit)) {
    fail("time limit must be a positive number of seconds");
  }
  if (!(checkpoint_interval > 0.0)) fail("checkpoint interval must be positive");
}

BitFlipStats bit_flip_exploit(const ProblemInstance& inst, const Solution& sol, double lambda, Rng& rng,
                              Archive& archive, double alpha,
                              const std::function<void(const ObjectivePoint&)>& on_offer) {
  BitFlipStats stats;
  const TourProfile profile(inst, sol.tour, sol.plan);
  const std::size_t m = inst.num_items();
  for (std::size_t jj = 0; jj < m; ++jj) {
    if (!(uniform01(rng) < lambda)) continue;
    const auto j = static_cast<ItemIndex>(jj);
    const Item& it = inst.item(j);
    const bool removing = sol.plan.contains(j);
    if (!removing && !sol.plan.fits(inst, j)) continue;

    const std::size_t pos = profile.position_of(it.city);
    const std::int64_t delta = removing ? -it.weight : it.weight;
    const ObjectivePoint p{
        removing ? sol.profit - static_cast<double>(it.profit) : sol.profit + static_cast<double>(it.profit),
        profile.time_with_change(pos, delta)};
    ++stats.proposals;
    if (on_offer) on_offer(p);
    if (!archive.accepts(p)) continue;

    Solution next;
    next.tour = sol.tour;
    next.plan = sol.plan;
    if (removing) {
      next.plan.remove(inst, j);
    } else {
      next.plan.try_add(inst, j);
    }
    next.profit = p.profit;
    next.time = p.time;
    next.alpha = alpha;
    assert(is_valid(inst, next));
    if (archive.update(std::move(next))) ++stats.accepted;
  }
  return stats;
}

namespace {

using Clock = std::chrono::steady_clock;

class Checkpoints {
 public:
  Checkpoints(const CheckpointObserver& observer, double interval, Clock::time_point start)
      : observer_(observer), interval_(interval), start_(start), next_(interval) {}

  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

  void poll(const Archive& archive) {
    if (!observer_) return;
    const double t = elapsed();
    if (t < next_) return;
    observer_(t, archive);
    last_ = t;
    while (next_ <= t) next_ += interval_;
  }

  void finish(const Archive& archive, double t) {
    if (observer_ && t > last_) observer_(t, archive);
  }

 private:
  const CheckpointObserver& observer_;
  double interval_;
  Clock::time_point start_;
  double next_;
  double last_ = -1.0;
};

}  // namespace

RunResult run(const ProblemInstance& inst, const WsmConfig& config, const CheckpointObserver& observer) {
  config.validate();
  const auto start = Clock::now();
  Checkpoints checkpoints(observer, config.checkpoint_interval, start);

  Rng tour_rng(derive_seed(config.seed, "tour"));
  Rng alpha_rng(derive_seed(config.seed, "alpha"));
  Rng packing_rng(derive_seed(config.seed, "packing"));
  Rng bitflip_rng(derive_seed(config.seed, "bitflip"));

  const NeighborLists neighbors(inst);
  const bool two_opt_enabled = !std::isinf(config.beta);
  const double ell = two_opt_enabled ? average_pair_distance(inst) : 0.0;
  TwoOptOptions two_opt_options;
  if (config.candidate_two_opt) two_opt_options.candidates = &neighbors;

  RunResult result;
  bool have_bounds = false;
  auto observe = [&](const ObjectivePoint& p) {
    ++result.offered;
    if (!have_bounds) {
      result.bounds = {p.profit, p.profit, p.time, p.time};
      have_bounds = true;
    } else {
      result.bounds = merge(result.bounds, {p.profit, p.profit, p.time, p.time});
    }
  };
  auto offer = [&](Solution&& sol) {
    assert(is_valid(inst, sol));
    observe(sol.point());
    result.archive.update(std::move(sol));
  };

  auto out_of_time = [&] { return !config.iterations && checkpoints.elapsed() >= config.time_limit; };
  auto finished = [&] {
    if (config.iterations) return result.cycles >= *config.iterations;
    return out_of_time();
  };

  while (!finished()) {
    // Exploration.
    const Tour tour = construct_tour(inst, neighbors, tour_rng);
    for (std::int64_t e = 0; e < config.eta; ++e) {
      const double alpha = sample_alpha(config.alpha_distribution, alpha_rng);
      PackingPlan plan = randomized_packing(inst, tour, config.rho, alpha, config.gamma, packing_rng);
      offer(make_solution(inst, tour, std::move(plan), alpha));
      checkpoints.poll(result.archive);
      if (out_of_time()) break;
    }
    ++result.cycles;
    if (out_of_time()) break;

    // Exploitation around the best member for a fresh alpha. The pivot is
    // copied because both moves below may evict it from the archive.
    const double alpha = sample_alpha(config.alpha_distribution, alpha_rng);
    const Solution pivot = result.archive.best_for_alpha(alpha, inst.renting_rate());
    if (two_opt_enabled) {
      if (auto better = two_opt_exploit(inst, pivot, alpha, config.beta, ell, two_opt_options)) {
        offer(make_solution(inst, std::move(*better), pivot.plan, alpha));
      }
    }
    bit_flip_exploit(inst, pivot, config.lambda, bitflip_rng, result.archive, alpha, observe);
    checkpoints.poll(result.archive);
  }

  result.elapsed = checkpoints.elapsed();
  checkpoints.finish(result.archive, result.elapsed);
  return result;
}

}  // namespace bittp
