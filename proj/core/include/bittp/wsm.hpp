#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string_view>

#include "bittp/archive.hpp"
#include "bittp/evaluation.hpp"
#include "bittp/hypervolume.hpp"
#include "bittp/instance.hpp"
#include "bittp/rng.hpp"

namespace bittp {

enum class AlphaDistribution {
  uniform,     // U(0, 1)
  normal,      // N(0.5, 0.2) resampled until it lands in [0, 1]
  beta_right,  // B(3, 1.5)
  beta_left,   // B(1.5, 3)
};

// "uniform", "normal", "beta-right", "beta-left". Throws Errc::invalid_config.
AlphaDistribution parse_alpha_distribution(std::string_view name);
std::string_view to_string(AlphaDistribution d) noexcept;

double sample_alpha(AlphaDistribution d, Rng& rng);

struct WsmConfig {
  AlphaDistribution alpha_distribution = AlphaDistribution::uniform;
  std::int64_t eta = 117;
  std::int64_t rho = 12;
  std::int64_t gamma = 41;
  double beta = 0.001;  // -infinity disables 2-opt exploitation
  double lambda = 0.22;
  double time_limit = 600.0;  // seconds
  // When set, run exactly this many cycles and ignore the clock.
  std::optional<std::int64_t> iterations;
  std::uint64_t seed = 1;
  // Restrict 2-opt exploitation to candidate-list moves instead of all pairs.
  bool candidate_two_opt = false;
  // Spacing of observer callbacks in wall-clock seconds.
  double checkpoint_interval = 1.0;

  // Throws Errc::invalid_config.
  void validate() const;
};

struct BitFlipStats {
  std::size_t proposals = 0;
  std::size_t accepted = 0;
};

/// Offers every single-item flip of sol.plan to the archive, each item
/// independently with probability lambda. Additions that would exceed the
/// capacity are skipped. All proposals keep sol.tour and start from sol.plan.
/// `on_offer` sees each proposal's objectives before the archive does.
BitFlipStats bit_flip_exploit(const ProblemInstance& inst, const Solution& sol, double lambda, Rng& rng,
                              Archive& archive, double alpha = std::numeric_limits<double>::quiet_NaN(),
                              const std::function<void(const ObjectivePoint&)>& on_offer = {});

struct RunResult {
  Archive archive;
  // Extremes over every solution offered to the archive.
  Bounds bounds;
  std::int64_t cycles = 0;
  std::size_t offered = 0;
  double elapsed = 0.0;  // seconds
};

// Called at most once per checkpoint_interval with the wall time elapsed
// since the start, and once more when the run ends.
using CheckpointObserver = std::function<void(double elapsed, const Archive& archive)>;

/// Weighted-sum search: repeated cycles of tour construction with eta
/// randomized packings, followed by 2-opt and bit-flip moves around the
/// archive's best solution for a fresh alpha. Deterministic for a given
/// seed when `iterations` is set.
RunResult run(const ProblemInstance& inst, const WsmConfig& config, const CheckpointObserver& observer = {});

}  // namespace bittp
