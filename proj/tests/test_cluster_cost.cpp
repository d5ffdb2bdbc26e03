#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "pfkc/cluster_cost.hpp"
#include "pfkc/oracle.hpp"
#include "test_support.hpp"

using namespace pfkc;

namespace {

std::size_t ceil_log2(std::size_t n) {
  std::size_t r = 0;
  while ((std::size_t{1} << r) < n) ++r;
  return r;
}

double max_dist_sq(const ParetoFront& f, const IntervalCluster& c, const Point2& y) {
  double worst = 0.0;
  for (std::size_t i = c.lo; i <= c.hi; ++i) worst = std::max(worst, distance_sq(f[i], y));
  return worst;
}

}  // namespace

TEST_CASE("continuous_cost examples") {
  const ParetoFront two = ParetoFront::build({{0, 1}, {1, 0}});
  const CostResult r = continuous_cost(two, {0, 1});
  CHECK(r.radius == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK(r.radius_sq == 0.5);
  CHECK(r.center == Point2{0.5, 0.5});
  CHECK_FALSE(r.center_index.has_value());

  const ParetoFront f = test::four_point_front();
  const CostResult single = continuous_cost(f, {2, 2});
  CHECK(single.radius == 0.0);
  CHECK(single.center == f[2]);

  const CostResult whole = continuous_cost(f, {0, 3});
  CHECK(whole.radius_sq == 4.5);
  CHECK(whole.radius == doctest::Approx(3.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(whole.center == Point2{1.5, 1.5});
  CHECK(std::sqrt(max_dist_sq(f, {0, 3}, whole.center)) ==
        doctest::Approx(whole.radius).epsilon(1e-15));
  const std::vector<Point2> pts(f.points().begin(), f.points().end());
  CHECK(oracle::exhaustive_meb(pts).radius == doctest::Approx(whole.radius).epsilon(1e-12));
}

TEST_CASE("continuous_cost rejects bad intervals") {
  const ParetoFront f = test::four_point_front();
  CHECK_THROWS_AS(continuous_cost(f, {3, 2}), InvalidInput);
  CHECK_THROWS_AS(continuous_cost(f, {0, 4}), InvalidInput);
  CHECK_THROWS_AS(discrete_cost(f, {1, 9}), InvalidInput);
}

TEST_CASE("fij examples") {
  const ParetoFront f = test::four_point_front();
  CHECK(fij(f, 0, 3, 0) == 18.0);
  CHECK(fij(f, 0, 3, 1) == 8.0);
  CHECK(fij(f, 0, 3, 2) == 8.0);
  CHECK(fij(f, 0, 3, 3) == 18.0);
  CHECK_THROWS_AS(fij(f, 1, 3, 0), InvalidInput);
  CHECK_THROWS_AS(fij(f, 0, 4, 2), InvalidInput);
}

TEST_CASE("discrete_cost examples") {
  const ParetoFront three = ParetoFront::build({{0, 2}, {1, 1}, {2, 0}});
  const CostResult r = discrete_cost(three, {0, 2});
  CHECK(r.radius_sq == 2.0);
  REQUIRE(r.center_index.has_value());
  CHECK(*r.center_index == 1);
  CHECK(r.center == Point2{1, 1});

  const ParetoFront f = test::four_point_front();
  const CostResult pair = discrete_cost(f, {1, 2});
  CHECK(pair.radius_sq == distance_sq(f[1], f[2]));
  CHECK(*pair.center_index == 1);

  const CostResult whole = discrete_cost(f, {0, 3});
  CHECK(whole.radius_sq == 8.0);
  CHECK(whole.radius == doctest::Approx(std::sqrt(8.0)).epsilon(1e-15));
  CHECK(*whole.center_index == 1);  // tie with index 2 resolved low

  CHECK(discrete_cost(f, {3, 3}).radius == 0.0);
}

TEST_CASE("cost dispatches on the variant") {
  const ParetoFront two = ParetoFront::build({{0, 1}, {1, 0}});
  CHECK(cost(two, {1, 1}, Variant::Continuous).radius == 0.0);
  CHECK(cost(two, {0, 1}, Variant::Discrete).radius_sq == 2.0);
  CHECK(cost(two, {0, 1}, Variant::Continuous).radius_sq == 0.5);

  OracleCounters counters;
  (void)cost(two, {0, 1}, Variant::Discrete, &counters);
  (void)cost(two, {0, 1}, Variant::Continuous, &counters);
  CHECK(counters.cost_calls == 2);
}

TEST_CASE("fij is decreasing, at most one plateau step, then increasing") {
  std::size_t violations = 0;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const ParetoFront f = test::mixed_front(seed < 6 ? 200 : 60, seed);
    const std::size_t n = f.size();
    for (std::size_t lo = 0; lo < n; lo += (seed < 6 ? 7 : 1)) {
      for (std::size_t hi = lo + 1; hi < n; ++hi) {
        std::size_t l = lo;
        while (l < hi && fij(f, lo, hi, l + 1) < fij(f, lo, hi, l)) ++l;
        // l is the first minimum; the next value may tie, then strict growth.
        for (std::size_t j = l + 1; j < hi; ++j) {
          if (!(fij(f, lo, hi, j + 1) > fij(f, lo, hi, j))) ++violations;
        }
        if (l < hi && fij(f, lo, hi, l + 1) < fij(f, lo, hi, l)) ++violations;
      }
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("discrete_cost matches the naive scan on every sub-interval") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const ParetoFront f = test::mixed_front(seed < 4 ? 200 : 50, seed + 100);
    const std::size_t n = f.size();
    for (std::size_t lo = 0; lo < n; ++lo) {
      for (std::size_t hi = lo; hi < n; ++hi) {
        OracleCounters counters;
        const CostResult fast = discrete_cost(f, {lo, hi}, &counters);
        const CostResult slow = oracle::naive_discrete_cost(f, {lo, hi});
        REQUIRE(fast.radius_sq == slow.radius_sq);
        // Ties may pick a different centre, never a worse one.
        REQUIRE(fij(f, lo, hi, *fast.center_index) == slow.radius_sq);
        REQUIRE(counters.fij_evals <= 2 * ceil_log2(hi - lo + 1) + 4);
      }
    }
  }
}

TEST_CASE("continuous centre is the unique minimizer of the max distance") {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> jitter(0.0, 1.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ParetoFront f = test::mixed_front(2 + seed * 3, seed + 500);
    const IntervalCluster c{0, f.size() - 1};
    const CostResult r = continuous_cost(f, c);
    const double half_sq = 0.25 * distance_sq(f[c.lo], f[c.hi]);
    CHECK(max_dist_sq(f, c, r.center) == doctest::Approx(half_sq).epsilon(1e-12));
    const double scale = std::sqrt(half_sq);
    for (int s = 0; s < 200; ++s) {
      const double eps = scale * std::pow(10.0, -double(s % 6)) * 0.5;
      const Point2 x{r.center.obj1 + eps * jitter(rng), r.center.obj2 + eps * jitter(rng)};
      if (x == r.center) continue;
      CHECK(max_dist_sq(f, c, x) > half_sq);
    }
  }
}

TEST_CASE("continuous_cost agrees with the exact enclosing-ball oracle") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const ParetoFront f = test::mixed_front(40, seed + 900);
    for (std::size_t lo = 0; lo < f.size(); ++lo) {
      for (std::size_t hi = lo; hi < f.size(); ++hi) {
        const std::vector<Point2> pts(f.points().begin() + lo, f.points().begin() + hi + 1);
        const double meb = oracle::exact_meb(pts).radius;
        const double r = continuous_cost(f, {lo, hi}).radius;
        REQUIRE(std::abs(meb - r) <= 1e-9 * std::max(1.0, r));
      }
    }
  }
}

TEST_CASE("cost is monotone under interval inclusion") {
  for (const Variant v : {Variant::Continuous, Variant::Discrete}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const ParetoFront f = test::mixed_front(seed < 5 ? 25 : 60, seed + 40);
      const std::size_t n = f.size();
      const bool full = n <= 25;
      std::size_t violations = 0;
      for (std::size_t lo = 0; lo < n; ++lo) {
        for (std::size_t hi = lo; hi < n; ++hi) {
          const double inner = cost(f, {lo, hi}, v).radius_sq;
          if (full) {
            for (std::size_t a = 0; a <= lo; ++a) {
              for (std::size_t b = hi; b < n; ++b) {
                if (cost(f, {a, b}, v).radius_sq < inner) ++violations;
              }
            }
          } else {
            if (lo > 0 && cost(f, {lo - 1, hi}, v).radius_sq < inner) ++violations;
            if (hi + 1 < n && cost(f, {lo, hi + 1}, v).radius_sq < inner) ++violations;
          }
        }
      }
      CHECK(violations == 0);
    }
  }
}

TEST_CASE("every point lies within the reported radius of the centre") {
  for (const Variant v : {Variant::Continuous, Variant::Discrete}) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const ParetoFront f = test::mixed_front(50, seed + 70);
      for (std::size_t lo = 0; lo < f.size(); ++lo) {
        for (std::size_t hi = lo; hi < f.size(); ++hi) {
          const CostResult r = cost(f, {lo, hi}, v);
          REQUIRE(r.radius == std::sqrt(r.radius_sq));
          REQUIRE(max_dist_sq(f, {lo, hi}, r.center) <= r.radius_sq * (1 + 1e-12));
          if (v == Variant::Continuous) {
            REQUIRE(r.radius_sq <= 0.25 * distance_sq(f[lo], f[hi]) * (1 + 1e-12));
          }
        }
      }
    }
  }
}
