#include "pfkc/cluster_cost.hpp"

#include <cmath>
#include <sstream>

namespace pfkc {

const char* to_string(Variant v) { return v == Variant::Continuous ? "continuous" : "discrete"; }

std::optional<Variant> parse_variant(std::string_view name) {
  if (name == "continuous") return Variant::Continuous;
  if (name == "discrete") return Variant::Discrete;
  return std::nullopt;
}

namespace {

inline double endpoint_max_sq(std::span<const Point2> pts, std::size_t lo, std::size_t hi,
                              std::size_t j) {
  const double a = distance_sq(pts[j], pts[lo]);
  const double b = distance_sq(pts[j], pts[hi]);
  return a < b ? b : a;
}

}  // namespace

double fij(const ParetoFront& front, std::size_t lo, std::size_t hi, std::size_t j) {
  if (lo > hi || hi >= front.size() || j < lo || j > hi) {
    std::ostringstream msg;
    msg << "fij: index " << j << " outside interval [" << lo << ", " << hi << "]";
    throw InvalidInput(msg.str());
  }
  return endpoint_max_sq(front.points(), lo, hi, j);
}

DiscreteSearch discrete_center_search(std::span<const Point2> pts, std::size_t lo,
                                      std::size_t hi) {
  if (lo == hi) return {lo, 0.0, 0};
  const double full = distance_sq(pts[lo], pts[hi]);
  if (hi == lo + 1) return {lo, full, 1};

  // Invariant: a minimizer lies in [id_inf, id_sup] and val_* = f(id_*).
  std::size_t id_inf = lo;
  std::size_t id_sup = hi;
  double val_inf = full;
  double val_sup = full;
  std::uint64_t evals = 1;
  while (id_sup - id_inf >= 2) {
    const std::size_t mid = id_inf + (id_sup - id_inf) / 2;
    const double here = endpoint_max_sq(pts, lo, hi, mid);
    const double next = endpoint_max_sq(pts, lo, hi, mid + 1);
    evals += 2;
    if (here == next) {
      // Only the minimum can be a two-point plateau.
      return {mid, here, evals};
    }
    if (here < next) {
      id_sup = mid;
      val_sup = here;
    } else {
      id_inf = mid + 1;
      val_inf = next;
    }
  }
  if (val_inf <= val_sup) return {id_inf, val_inf, evals};
  return {id_sup, val_sup, evals};
}

CostResult continuous_cost(const ParetoFront& front, const IntervalCluster& c) {
  front.check_interval(c);
  const Point2& a = front[c.lo];
  const Point2& b = front[c.hi];
  CostResult r;
  r.radius_sq = 0.25 * distance_sq(a, b);
  r.radius = std::sqrt(r.radius_sq);
  r.center = c.lo == c.hi ? a : Point2{0.5 * (a.obj1 + b.obj1), 0.5 * (a.obj2 + b.obj2)};
  return r;
}

CostResult discrete_cost(const ParetoFront& front, const IntervalCluster& c,
                         OracleCounters* counters) {
  front.check_interval(c);
  const DiscreteSearch s = discrete_center_search(front.points(), c.lo, c.hi);
  if (counters) {
    ++counters->cost_calls;
    counters->fij_evals += s.evaluations;
  }
  CostResult r;
  r.radius_sq = s.value_sq;
  r.radius = std::sqrt(s.value_sq);
  r.center = front[s.index];
  r.center_index = s.index;
  return r;
}

CostResult cost(const ParetoFront& front, const IntervalCluster& c, Variant variant,
                OracleCounters* counters) {
  if (variant == Variant::Discrete) return discrete_cost(front, c, counters);
  CostResult r = continuous_cost(front, c);
  if (counters) ++counters->cost_calls;
  return r;
}

}  // namespace pfkc
