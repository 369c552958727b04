#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bittp/evaluation.hpp"
#include "bittp/instance.hpp"
#include "bittp/rng.hpp"

namespace bittp {

inline constexpr std::size_t kDefaultNeighbors = 16;

/// For each city, its K nearest other cities sorted by ascending distance
/// (ties by index). K is clamped to n - 1.
class NeighborLists {
 public:
  NeighborLists() = default;
  NeighborLists(const ProblemInstance& inst, std::size_t k = kDefaultNeighbors);

  std::size_t k() const noexcept { return k_; }
  std::span<const City> of(City c) const noexcept {
    return {flat_.data() + static_cast<std::size_t>(c) * k_, k_};
  }

 private:
  std::size_t k_ = 0;
  std::vector<City> flat_;
};

// Nearest-neighbour tour from a uniformly random start, improved by
// candidate-list 2-opt and Or-opt (segments of 1-3 cities) until no
// improving candidate move remains, then rotated to start at the depot in a
// randomly chosen direction.
Tour construct_tour(const ProblemInstance& inst, const NeighborLists& neighbors, Rng& rng);
Tour construct_tour(const ProblemInstance& inst, Rng& rng);

// Improves `tour` in place with the same descent used by construct_tour.
// Returns the resulting length.
std::int64_t local_search(const ProblemInstance& inst, const NeighborLists& neighbors,
                          std::vector<City>& tour, Rng& rng);

// Mean distance over unordered city pairs. Exact up to
// kExactPairDistanceLimit cities, estimated from a fixed-seed sample above.
inline constexpr std::size_t kExactPairDistanceLimit = 5000;
inline constexpr std::size_t kPairDistanceSamples = 1'000'000;
double average_pair_distance(const ProblemInstance& inst);

struct TwoOptOptions {
  // Restrict the scanned moves to pairs whose new edge joins neighbors in
  // this list. Null means every 2-opt move is scanned (O(n^2)).
  const NeighborLists* candidates = nullptr;
};

/// Best 2-opt neighbour of sol.tour under the plan sol.plan.
///
/// Only neighbours at most `ell * beta` longer than sol.tour are evaluated;
/// among those the one with the largest weighted objective is returned if it
/// strictly beats sol.tour. beta = -infinity disables the move entirely.
/// Ties keep the first neighbour in (i, j) scan order.
std::optional<Tour> two_opt_exploit(const ProblemInstance& inst, const Solution& sol, double alpha,
                                    double beta, double ell, const TwoOptOptions& options = {});

}  // namespace bittp
