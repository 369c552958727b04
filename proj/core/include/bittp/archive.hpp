#pragma once

#include <cstddef>
#include <map>
#include <ranges>
#include <vector>

#include "bittp/evaluation.hpp"

namespace bittp {

/// Set of mutually non-dominated solutions ordered by profit.
///
/// Members are kept sorted by strictly increasing profit, which for a
/// non-dominated set also means strictly increasing time. A candidate that is
/// weakly dominated by a member, or repeats a member's objective vector, is
/// rejected; otherwise it replaces every member it dominates.
class Archive {
 public:
  bool update(const Solution& candidate);
  bool update(Solution&& candidate);

  // Would `p` be accepted? Does not modify the archive.
  bool accepts(const ObjectivePoint& p) const;

  // argmax of alpha*g - (1-alpha)*R*h; ties go to the lowest time.
  // Throws Errc::empty_archive.
  const Solution& best_for_alpha(double alpha, double renting_rate) const;

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  void clear() noexcept { members_.clear(); }

  // Members in ascending profit order.
  auto solutions() const { return std::views::values(members_); }
  std::vector<ObjectivePoint> points() const;

 private:
  template <typename S>
  bool insert(S&& candidate);

  std::map<double, Solution> members_;
};

}  // namespace bittp
