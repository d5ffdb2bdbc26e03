#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "pfkc/pareto_front.hpp"
#include "test_support.hpp"

using namespace pfkc;

TEST_CASE("compare classifies the four quadrants") {
  CHECK(compare({0, 0}, {1, 1}) == Dominance::Dominates);
  CHECK(compare({1, 1}, {0, 0}) == Dominance::IsDominated);
  CHECK(compare({0, 1}, {1, 0}) == Dominance::StrictlyPrecedes);
  CHECK(compare({1, 0}, {0, 1}) == Dominance::StrictlyFollows);
  CHECK(compare({2, 3}, {2, 3}) == Dominance::Equal);
  // Weak dominance: equal on one coordinate.
  CHECK(compare({1, 2}, {1, 5}) == Dominance::Dominates);
  CHECK(compare({0, 2}, {3, 2}) == Dominance::Dominates);
}

TEST_CASE("compare rejects non-finite coordinates") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(compare({nan, 0}, {1, 1}), InvalidInput);
  CHECK_THROWS_AS(compare({0, 0}, {1, inf}), InvalidInput);
}

TEST_CASE("compare is antisymmetric under argument swap") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coord(0, 4);
  for (int trial = 0; trial < 2000; ++trial) {
    const Point2 y{double(coord(rng)), double(coord(rng))};
    const Point2 z{double(coord(rng)), double(coord(rng))};
    const Dominance a = compare(y, z);
    const Dominance b = compare(z, y);
    switch (a) {
      case Dominance::StrictlyPrecedes:
        CHECK(b == Dominance::StrictlyFollows);
        break;
      case Dominance::StrictlyFollows:
        CHECK(b == Dominance::StrictlyPrecedes);
        break;
      case Dominance::Dominates:
        CHECK(b == Dominance::IsDominated);
        break;
      case Dominance::IsDominated:
        CHECK(b == Dominance::Dominates);
        break;
      case Dominance::Equal:
        CHECK(b == Dominance::Equal);
        break;
    }
  }
}

TEST_CASE("distance examples") {
  CHECK(distance({0, 0}, {3, 4}) == 5.0);
  CHECK(distance_sq({0, 0}, {3, 4}) == 25.0);
  CHECK(distance({1, 1}, {1, 1}) == 0.0);
  CHECK(distance({0, 1}, {1, 0}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("build_front sorts by the first objective") {
  const ParetoFront f = ParetoFront::build({{3, 0}, {0, 3}, {1, 2}, {2, 1}});
  REQUIRE(f.size() == 4);
  CHECK(f[0] == Point2{0, 3});
  CHECK(f[1] == Point2{1, 2});
  CHECK(f[2] == Point2{2, 1});
  CHECK(f[3] == Point2{3, 0});
}

TEST_CASE("build_front sanitize drops dominated points") {
  const ParetoFront f = ParetoFront::build({{0, 3}, {1, 2}, {1, 5}}, true);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == Point2{0, 3});
  CHECK(f[1] == Point2{1, 2});

  const ParetoFront dup = ParetoFront::build({{1, 1}, {1, 1}, {0, 2}, {2, 2}}, true);
  REQUIRE(dup.size() == 2);
  CHECK(dup[0] == Point2{0, 2});
  CHECK(dup[1] == Point2{1, 1});
}

TEST_CASE("build_front strict mode reports the offending input indices") {
  try {
    (void)ParetoFront::build({{0, 3}, {1, 2}, {1, 5}});
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.first_index() == 1);
    CHECK(e.second_index() == 2);
  }
  try {
    (void)ParetoFront::build({{5, 5}, {0, 9}, {5, 5}});
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.first_index() == 0);
    CHECK(e.second_index() == 2);
  }
}

TEST_CASE("build_front rejects empty and non-finite input") {
  CHECK_THROWS_AS(ParetoFront::build({}), InvalidInput);
  CHECK_THROWS_AS(ParetoFront::build({{0, std::numeric_limits<double>::quiet_NaN()}}),
                  InvalidInput);
  CHECK_THROWS_AS(ParetoFront::build({}, true), InvalidInput);
}

TEST_CASE("sanitized fronts satisfy the chain invariant and are fixed points") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coord(0, 30);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point2> pts(1 + rng() % 40);
    for (auto& p : pts) p = {double(coord(rng)), double(coord(rng))};
    const ParetoFront f = ParetoFront::build(pts, true);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      REQUIRE(compare(f[i], f[i + 1]) == Dominance::StrictlyPrecedes);
    }
    // Every dropped point is dominated by (or equal to) a kept one.
    for (const Point2& p : pts) {
      bool covered = false;
      for (const Point2& q : f.points()) {
        const Dominance d = compare(q, p);
        covered = covered || d == Dominance::Dominates || d == Dominance::Equal;
      }
      CHECK(covered);
    }
    const std::vector<Point2> kept(f.points().begin(), f.points().end());
    const ParetoFront again = ParetoFront::build(kept, true);
    CHECK(std::equal(again.points().begin(), again.points().end(), f.points().begin(),
                     f.points().end()));
    CHECK_NOTHROW((void)ParetoFront::build(kept, false));
  }
}

TEST_CASE("distances grow with index gap along a front") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ParetoFront f = test::mixed_front(2 + seed % 59, seed);
    const std::size_t n = f.size();
    std::size_t violations = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          if (!(distance_sq(f[a], f[b]) < distance_sq(f[a], f[c]))) ++violations;
          if (a < b && !(distance_sq(f[b], f[c]) < distance_sq(f[a], f[c]))) ++violations;
        }
      }
    }
    CHECK(violations == 0);
  }
}

TEST_CASE("check_interval") {
  const ParetoFront f = test::four_point_front();
  CHECK_NOTHROW(f.check_interval({0, 3}));
  CHECK_NOTHROW(f.check_interval({2, 2}));
  CHECK_THROWS_AS(f.check_interval({2, 1}), InvalidInput);
  CHECK_THROWS_AS(f.check_interval({0, 4}), InvalidInput);
}
