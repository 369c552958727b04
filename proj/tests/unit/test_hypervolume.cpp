#include <doctest.h>

#include <cmath>
#include <vector>

#include "bittp/error.hpp"
#include "bittp/hypervolume.hpp"
#include "oracles.hpp"

using namespace bittp;

namespace {

double subset_hv(const std::vector<ObjectivePoint>& pts, const std::vector<std::size_t>& idx) {
  std::vector<ObjectivePoint> sub;
  for (std::size_t i : idx) sub.push_back(pts[i]);
  return hypervolume(sub);
}

}  // namespace

TEST_SUITE("hypervolume") {
  TEST_CASE("normalize examples") {
    const Bounds b{10, 30, 2, 6};
    CHECK(normalize({10, 2}, b) == ObjectivePoint{0, 0});
    CHECK(normalize({30, 6}, b) == ObjectivePoint{1, 1});
    CHECK(normalize({20, 4}, b) == ObjectivePoint{0.5, 0.5});
    CHECK(normalize({20, 4}, Bounds{20, 20, 4, 4}) == ObjectivePoint{0, 0});
  }

  TEST_CASE("bounds_of and merge") {
    const std::vector<ObjectivePoint> pts{{3, 9}, {1, 4}, {7, 5}};
    CHECK(bounds_of(pts) == Bounds{1, 7, 4, 9});
    CHECK(merge(Bounds{0, 1, 2, 3}, Bounds{-1, 0.5, 2.5, 4}) == Bounds{-1, 1, 2, 4});
  }

  TEST_CASE("hypervolume examples") {
    CHECK(hypervolume(std::vector<ObjectivePoint>{{1, 0}}) == 1.0);
    CHECK(hypervolume(std::vector<ObjectivePoint>{{0.5, 0.5}}) == 0.25);
    CHECK(hypervolume(std::vector<ObjectivePoint>{{0.5, 0.2}, {1.0, 0.6}}) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(hypervolume(std::vector<ObjectivePoint>{{1.0, 0.6}, {0.5, 0.2}}) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(hypervolume(std::vector<ObjectivePoint>{}) == 0.0);
  }

  TEST_CASE("points outside the reference box are rejected") {
    try {
      hypervolume(std::vector<ObjectivePoint>{{0.5, 1.2}});
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ref_point_dominated);
    }
    CHECK_THROWS_AS(hypervolume(std::vector<ObjectivePoint>{{-0.1, 0.5}}), Error);
    CHECK_THROWS_AS(subset_select(std::vector<ObjectivePoint>{{-0.1, 0.5}}, 1), Error);
  }

  TEST_CASE("mutual non-dominance check") {
    CHECK(mutually_nondominated(std::vector<ObjectivePoint>{{1, 1}, {2, 2}, {0, 0.5}}));
    CHECK(!mutually_nondominated(std::vector<ObjectivePoint>{{1, 1}, {2, 1}}));
    CHECK(!mutually_nondominated(std::vector<ObjectivePoint>{{1, 1}, {1, 1}}));
    CHECK(!mutually_nondominated(std::vector<ObjectivePoint>{{1, 2}, {2, 1}}));
  }

  TEST_CASE("subset_select examples") {
    const std::vector<ObjectivePoint> two{{0.6, 0.2}, {1.0, 0.6}};
    CHECK(subset_select(two, 1) == std::vector<std::size_t>{0});
    CHECK(subset_hv(two, subset_select(two, 1)) == testing::brute_force_subset_hv(two, 1, kDefaultReference));

    const std::vector<ObjectivePoint> three{{0.3, 0.1}, {0.6, 0.4}, {1.0, 0.8}};
    CHECK(subset_select(three, 2) == std::vector<std::size_t>{0, 1});
    CHECK(subset_hv(three, subset_select(three, 2)) == doctest::Approx(0.45));

    CHECK(subset_select(three, 3).size() == 3);
    CHECK(subset_select(three, 10).size() == 3);
    CHECK(subset_hv(three, subset_select(three, 5)) == hypervolume(three));
    CHECK(subset_select(three, 0).empty());
  }

  TEST_CASE("subset_select matches brute force exactly") {
    Rng rng(1);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto pts = testing::random_front(rng, 1 + rng() % 12);
      const std::size_t k = 1 + rng() % 5;
      const auto chosen = subset_select(pts, k);
      CHECK(chosen.size() <= k);
      CHECK(subset_hv(pts, chosen) == testing::brute_force_subset_hv(pts, k, kDefaultReference));
      for (std::size_t i = 1; i < chosen.size(); ++i) CHECK(pts[chosen[i]].profit > pts[chosen[i - 1]].profit);
    }
  }

  TEST_CASE("adding a non-dominated point never lowers the volume") {
    Rng rng(2);
    for (int trial = 0; trial < 500; ++trial) {
      auto pts = testing::random_front(rng, 2 + rng() % 30);
      const double full = hypervolume(pts);
      pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(rng() % pts.size()));
      CHECK(hypervolume(pts) <= full);
    }
  }

  TEST_CASE("agrees with a Monte-Carlo estimate") {
    Rng rng(3);
    for (int trial = 0; trial < 5; ++trial) {
      const auto pts = testing::random_front(rng, 50);
      const double exact = hypervolume(pts);
      const int samples = 1000000;
      int hits = 0;
      for (int s = 0; s < samples; ++s) {
        const double g = uniform01(rng), h = uniform01(rng);
        for (const auto& p : pts) {
          if (p.profit >= g && p.time <= h) {
            ++hits;
            break;
          }
        }
      }
      const double p = static_cast<double>(hits) / samples;
      const double se = std::sqrt(p * (1 - p) / samples);
      CHECK(std::abs(p - exact) <= 3 * se);
    }
  }
}
