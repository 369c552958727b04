#include "bittp/archive.hpp"

#include <iterator>
#include <utility>

#include "bittp/error.hpp"

namespace bittp {

bool Archive::accepts(const ObjectivePoint& p) const {
  // Lowest-profit member with profit >= p.profit has the lowest time among
  // all members that could dominate p.
  const auto it = members_.lower_bound(p.profit);
  return it == members_.end() || it->second.time > p.time;
}

template <typename S>
bool Archive::insert(S&& candidate) {
  const double g = candidate.profit;
  const double h = candidate.time;
  auto it = members_.lower_bound(g);
  if (it != members_.end() && it->second.time <= h) return false;

  // Dominated members: an equal-profit one (slower, or it would have
  // rejected us) and the contiguous run of lower-profit ones with time >= h.
  if (it != members_.end() && it->first == g) it = members_.erase(it);
  auto first = it;
  while (first != members_.begin()) {
    auto prev = std::prev(first);
    if (prev->second.time < h) break;
    first = prev;
  }
  members_.erase(first, it);
  members_.emplace_hint(it, g, std::forward<S>(candidate));
  return true;
}

bool Archive::update(const Solution& candidate) { return insert(candidate); }
bool Archive::update(Solution&& candidate) { return insert(std::move(candidate)); }

const Solution& Archive::best_for_alpha(double alpha, double renting_rate) const {
  if (members_.empty()) throw Error(Errc::empty_archive, "archive has no solutions");
  const Solution* best = nullptr;
  double best_f = 0.0;
  // Ascending profit is ascending time, so keeping the first maximum breaks
  // ties toward lower time and then lower profit.
  for (const auto& [g, sol] : members_) {
    const double f = scalarize(sol.profit, sol.time, alpha, renting_rate);
    if (best == nullptr || f > best_f) {
      best = &sol;
      best_f = f;
    }
  }
  return *best;
}

std::vector<ObjectivePoint> Archive::points() const {
  std::vector<ObjectivePoint> out;
  out.reserve(members_.size());
  for (const auto& [g, sol] : members_) out.push_back(sol.point());
  return out;
}

}  // namespace bittp
