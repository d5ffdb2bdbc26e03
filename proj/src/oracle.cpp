#include "pfkc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace pfkc::oracle {

namespace {

constexpr double kCoverSlack = 1e-10;

bool covers(const Ball& b, const Point2& p) {
  const double dx = p.obj1 - b.center.obj1;
  const double dy = p.obj2 - b.center.obj2;
  const double r2 = b.radius * b.radius;
  return dx * dx + dy * dy <= r2 * (1.0 + kCoverSlack) + 1e-300;
}

bool covers_all(const Ball& b, std::span<const Point2> pts) {
  return std::all_of(pts.begin(), pts.end(), [&](const Point2& p) { return covers(b, p); });
}

Ball diametral(const Point2& a, const Point2& b) {
  return {{0.5 * (a.obj1 + b.obj1), 0.5 * (a.obj2 + b.obj2)}, 0.5 * distance(a, b)};
}

// Circle through three points; nullopt-like flag when (nearly) collinear.
bool circumcircle(const Point2& a, const Point2& b, const Point2& c, Ball& out) {
  const double bx = b.obj1 - a.obj1;
  const double by = b.obj2 - a.obj2;
  const double cx = c.obj1 - a.obj1;
  const double cy = c.obj2 - a.obj2;
  const double det = 2.0 * (bx * cy - by * cx);
  const double scale = (bx * bx + by * by) * (cx * cx + cy * cy);
  if (det == 0.0 || det * det <= 1e-24 * scale) return false;
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  const double ux = (cy * b2 - by * c2) / det;
  const double uy = (bx * c2 - cx * b2) / det;
  out.center = {a.obj1 + ux, a.obj2 + uy};
  out.radius = std::sqrt(ux * ux + uy * uy);
  return true;
}

Ball three_point_ball(const Point2& a, const Point2& b, const Point2& c) {
  Ball out;
  if (circumcircle(a, b, c, out)) return out;
  // Collinear: the farthest pair spans the other point.
  Ball best = diametral(a, b);
  for (const Ball& cand : {diametral(a, c), diametral(b, c)}) {
    if (cand.radius > best.radius) best = cand;
  }
  return best;
}

void check_guard(std::size_t n, std::size_t k, std::size_t max_n, std::size_t max_k,
                 const char* who) {
  if (n > max_n || k > max_k) {
    std::ostringstream msg;
    msg << who << ": instance (N=" << n << ", K=" << k << ") exceeds the guard (N <= " << max_n
        << ", K <= " << max_k << ")";
    throw InvalidInput(msg.str());
  }
  if (k == 0) throw InvalidInput("cluster count must be at least 1");
}

}  // namespace

CostResult naive_discrete_cost(const ParetoFront& front, const IntervalCluster& c) {
  front.check_interval(c);
  const Point2& a = front[c.lo];
  const Point2& b = front[c.hi];
  std::size_t best = c.lo;
  double best_sq = std::numeric_limits<double>::infinity();
  for (std::size_t j = c.lo; j <= c.hi; ++j) {
    const double v = std::max(distance_sq(front[j], a), distance_sq(front[j], b));
    if (v < best_sq) {
      best_sq = v;
      best = j;
    }
  }
  return CostResult{best_sq, std::sqrt(best_sq), front[best], best};
}

double naive_continuous_cost_sq(const ParetoFront& front, const IntervalCluster& c) {
  front.check_interval(c);
  const double dx = front[c.hi].obj1 - front[c.lo].obj1;
  const double dy = front[c.hi].obj2 - front[c.lo].obj2;
  return 0.25 * (dx * dx + dy * dy);
}

Ball exhaustive_meb(std::span<const Point2> points) {
  const std::size_t n = points.size();
  if (n == 0) throw InvalidInput("exact_meb: empty point set");
  if (n > kExhaustiveMebMaxN) throw InvalidInput("exhaustive_meb: more than 60 points");
  if (n == 1) return {points[0], 0.0};

  Ball best{{0.0, 0.0}, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Ball b = diametral(points[i], points[j]);
      if (b.radius < best.radius && covers_all(b, points)) best = b;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Ball b;
        if (!circumcircle(points[i], points[j], points[k], b)) continue;
        if (b.radius < best.radius && covers_all(b, points)) best = b;
      }
    }
  }
  return best;
}

Ball welzl_meb(std::span<const Point2> points) {
  if (points.empty()) throw InvalidInput("exact_meb: empty point set");
  std::vector<Point2> pts(points.begin(), points.end());
  std::mt19937_64 rng(0x5eedULL);
  std::shuffle(pts.begin(), pts.end(), rng);

  Ball b{pts[0], 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (covers(b, pts[i])) continue;
    b = {pts[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (covers(b, pts[j])) continue;
      b = diametral(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!covers(b, pts[k])) b = three_point_ball(pts[i], pts[j], pts[k]);
      }
    }
  }
  return b;
}

Ball exact_meb(std::span<const Point2> points) {
  return points.size() <= 12 ? exhaustive_meb(points) : welzl_meb(points);
}

double discrete_set_cost_sq(std::span<const Point2> points) {
  if (points.empty()) throw InvalidInput("discrete cost of an empty set");
  double best = std::numeric_limits<double>::infinity();
  for (const Point2& y : points) {
    double worst = 0.0;
    for (const Point2& x : points) worst = std::max(worst, distance_sq(x, y));
    best = std::min(best, worst);
  }
  return best;
}

OracleResult brute_force_intervals(const ParetoFront& front, std::size_t k, Variant variant) {
  const std::size_t n = front.size();
  check_guard(n, k, kIntervalMaxN, kIntervalMaxK, "brute_force_intervals");
  const std::size_t parts = std::min(k, n);

  std::vector<std::vector<double>> table(n, std::vector<double>(n, 0.0));
  for (std::size_t lo = 0; lo < n; ++lo) {
    for (std::size_t hi = lo; hi < n; ++hi) {
      table[lo][hi] = variant == Variant::Continuous
                          ? naive_continuous_cost_sq(front, {lo, hi})
                          : naive_discrete_cost(front, {lo, hi}).radius_sq;
    }
  }

  OracleResult result;
  result.opt_radius_sq = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> cuts;

  // Place cut number `depth` after index >= start; `worst` is the running max.
  auto recurse = [&](auto&& self, std::size_t start, double worst) -> void {
    if (cuts.size() + 1 == parts) {
      const double total = std::max(worst, table[start][n - 1]);
      if (total < result.opt_radius_sq) {
        result.opt_radius_sq = total;
        result.all_optimal_partitions.clear();
      }
      if (total == result.opt_radius_sq) result.all_optimal_partitions.push_back(cuts);
      return;
    }
    const std::size_t remaining = parts - cuts.size() - 1;  // clusters after this one
    for (std::size_t end = start; end + remaining <= n - 1; ++end) {
      cuts.push_back(end);
      self(self, end + 1, std::max(worst, table[start][end]));
      cuts.pop_back();
    }
  };
  recurse(recurse, 0, 0.0);
  return result;
}

double brute_force_all_partitions(const ParetoFront& front, std::size_t k, Variant variant) {
  const std::size_t n = front.size();
  check_guard(n, k, kAllPartitionsMaxN, kAllPartitionsMaxK, "brute_force_all_partitions");
  const std::size_t parts = std::min(k, n);

  // Radius of every subset, indexed by membership bitmask.
  const std::size_t masks = std::size_t{1} << n;
  std::vector<double> subset_radius(masks, 0.0);
  std::vector<Point2> members;
  for (std::size_t m = 1; m < masks; ++m) {
    members.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (m & (std::size_t{1} << i)) members.push_back(front[i]);
    }
    subset_radius[m] = variant == Variant::Continuous
                           ? exact_meb(members).radius
                           : std::sqrt(discrete_set_cost_sq(members));
  }

  // Restricted growth strings with exactly `parts` blocks.
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> block_mask(parts, 0);
  auto recurse = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (n - i < parts - used) return;  // not enough points left to open every block
    if (i == n) {
      double worst = 0.0;
      for (std::size_t b = 0; b < parts; ++b) worst = std::max(worst, subset_radius[block_mask[b]]);
      best = std::min(best, worst);
      return;
    }
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t b = 0; b < used; ++b) {
      block_mask[b] |= bit;
      self(self, i + 1, used);
      block_mask[b] &= ~bit;
    }
    if (used < parts) {
      block_mask[used] |= bit;
      self(self, i + 1, used + 1);
      block_mask[used] &= ~bit;
    }
  };
  recurse(recurse, 0, 0);
  return best;
}

}  // namespace pfkc::oracle
