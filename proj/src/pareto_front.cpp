#include "pfkc/pareto_front.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace pfkc {

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::StrictlyPrecedes:
      return "strictly-precedes";
    case Dominance::StrictlyFollows:
      return "strictly-follows";
    case Dominance::Equal:
      return "equal";
    case Dominance::Dominates:
      return "dominates";
    case Dominance::IsDominated:
      return "is-dominated";
  }
  return "?";
}

bool is_finite(const Point2& p) { return std::isfinite(p.obj1) && std::isfinite(p.obj2); }

Dominance compare(const Point2& y, const Point2& z) {
  if (!is_finite(y) || !is_finite(z)) {
    throw InvalidInput("compare: non-finite coordinate");
  }
  if (y == z) return Dominance::Equal;
  if (y.obj1 <= z.obj1 && y.obj2 <= z.obj2) return Dominance::Dominates;
  if (z.obj1 <= y.obj1 && z.obj2 <= y.obj2) return Dominance::IsDominated;
  return y.obj1 < z.obj1 ? Dominance::StrictlyPrecedes : Dominance::StrictlyFollows;
}

double distance(const Point2& y, const Point2& z) { return std::sqrt(distance_sq(y, z)); }

std::vector<Point2> nondominated_filter(std::vector<Point2> points) {
  std::sort(points.begin(), points.end(), [](const Point2& a, const Point2& b) {
    return a.obj1 < b.obj1 || (a.obj1 == b.obj1 && a.obj2 < b.obj2);
  });
  std::vector<Point2> kept;
  kept.reserve(points.size());
  for (const Point2& p : points) {
    // Sorted by (obj1, obj2): p survives iff it beats every earlier point on obj2.
    if (kept.empty() || p.obj2 < kept.back().obj2) kept.push_back(p);
  }
  return kept;
}

ParetoFront ParetoFront::build(std::vector<Point2> points, bool sanitize) {
  if (points.empty()) throw InvalidInput("build_front: empty point set");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!is_finite(points[i])) {
      std::ostringstream msg;
      msg << "build_front: point " << i << " has a non-finite coordinate";
      throw InvalidInput(msg.str());
    }
  }

  if (sanitize) return ParetoFront(nondominated_filter(std::move(points)));

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Point2& pa = points[a];
    const Point2& pb = points[b];
    return pa.obj1 < pb.obj1 || (pa.obj1 == pb.obj1 && pa.obj2 < pb.obj2);
  });

  // A strict chain between sorted neighbours implies a strict chain overall.
  std::vector<Point2> sorted;
  sorted.reserve(points.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0) {
      const std::size_t a = order[r - 1];
      const std::size_t b = order[r];
      const Dominance rel = compare(points[a], points[b]);
      if (rel != Dominance::StrictlyPrecedes) {
        const std::size_t first = std::min(a, b);
        const std::size_t second = std::max(a, b);
        std::ostringstream msg;
        msg << "points " << first << " and " << second << " are comparable ("
            << to_string(compare(points[first], points[second])) << "); not a Pareto front";
        throw ValidationError(first, second, msg.str());
      }
    }
    sorted.push_back(points[order[r]]);
  }
  return ParetoFront(std::move(sorted));
}

void ParetoFront::check_interval(const IntervalCluster& c) const {
  if (c.lo > c.hi || c.hi >= points_.size()) {
    std::ostringstream msg;
    msg << "invalid interval [" << c.lo << ", " << c.hi << "] on a front of size " << points_.size();
    throw InvalidInput(msg.str());
  }
}

}  // namespace pfkc
