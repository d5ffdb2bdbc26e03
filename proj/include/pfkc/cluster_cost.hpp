/**
 * @file cluster_cost.hpp
 * @brief One-center cost of an interval cluster of a sorted Pareto front.
 *
 * Continuous variant: the optimal ball is centred on the midpoint of the two
 * extreme points, radius half their distance. O(1).
 *
 * Discrete variant: the centre is the front point x_j minimizing
 * f(j) = max(|x_j - x_lo|, |x_j - x_hi|). Along the front f decreases
 * strictly, possibly plateaus for one step, then increases strictly, so the
 * arg-min is found by bisection in O(log(hi - lo)).
 *
 * Every comparison is done on squared distances; square roots are taken only
 * when a radius is reported.
 */

#ifndef PFKC_CLUSTER_COST_HPP
#define PFKC_CLUSTER_COST_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "pfkc/pareto_front.hpp"

namespace pfkc {

enum class Variant { Continuous, Discrete };

const char* to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

struct CostResult {
  double radius_sq = 0.0;
  double radius = 0.0;
  Point2 center;
  std::optional<std::size_t> center_index;  ///< set iff discrete
};

/// Instrumentation for complexity certificates.
struct OracleCounters {
  std::uint64_t cost_calls = 0;  ///< interval costs evaluated
  std::uint64_t fij_evals = 0;   ///< discrete candidate-centre evaluations

  OracleCounters& operator+=(const OracleCounters& o) {
    cost_calls += o.cost_calls;
    fij_evals += o.fij_evals;
    return *this;
  }
};

/// Squared f(j) for the interval [lo, hi]. Throws unless lo <= j <= hi < N.
double fij(const ParetoFront& front, std::size_t lo, std::size_t hi, std::size_t j);

struct DiscreteSearch {
  std::size_t index = 0;
  double value_sq = 0.0;
  std::uint64_t evaluations = 0;
};

/// Bisection for the discrete centre of [lo, hi]; unchecked bounds.
/// Ties resolve to the lower index.
DiscreteSearch discrete_center_search(std::span<const Point2> pts, std::size_t lo, std::size_t hi);

CostResult continuous_cost(const ParetoFront& front, const IntervalCluster& c);
CostResult discrete_cost(const ParetoFront& front, const IntervalCluster& c,
                         OracleCounters* counters = nullptr);
CostResult cost(const ParetoFront& front, const IntervalCluster& c, Variant variant,
                OracleCounters* counters = nullptr);

/**
 * Squared interval cost without centre bookkeeping or bounds checks, for the
 * DP and backtracking inner loops. Each instance keeps its own counters, so
 * give every worker thread its own copy and merge afterwards.
 */
class CostOracle {
 public:
  CostOracle(const ParetoFront& front, Variant variant)
      : pts_(front.points()), variant_(variant) {}

  double operator()(std::size_t lo, std::size_t hi) {
    ++counters_.cost_calls;
    if (variant_ == Variant::Continuous) {
      return 0.25 * distance_sq(pts_[lo], pts_[hi]);
    }
    const DiscreteSearch s = discrete_center_search(pts_, lo, hi);
    counters_.fij_evals += s.evaluations;
    return s.value_sq;
  }

  Variant variant() const { return variant_; }
  std::size_t size() const { return pts_.size(); }
  const OracleCounters& counters() const { return counters_; }
  void reset_counters() { counters_ = {}; }

 private:
  std::span<const Point2> pts_;
  Variant variant_;
  OracleCounters counters_;
};

}  // namespace pfkc

#endif  // PFKC_CLUSTER_COST_HPP
