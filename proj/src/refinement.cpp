#include "pfkc/refinement.hpp"

#include <algorithm>
#include <cmath>

namespace pfkc {

std::vector<IntervalCluster> backtrack_max_index(const ParetoFront& front, std::size_t k,
                                                 double opt_sq, Variant variant,
                                                 OracleCounters* counters) {
  if (k == 0) throw InvalidInput("cluster count must be at least 1");
  const std::size_t n = front.size();
  std::vector<IntervalCluster> clusters;
  if (k >= n) {
    for (std::size_t i = 0; i < n; ++i) clusters.push_back({i, i});
    return clusters;
  }

  CostOracle oracle(front, variant);
  std::size_t lo = 0;
  for (std::size_t c = 1; c < k; ++c) {
    // Leave k - c points for the clusters to the right.
    const std::size_t limit = n - 1 - (k - c);
    std::size_t hi = lo;
    while (hi < limit && oracle(lo, hi + 1) <= opt_sq) ++hi;
    clusters.push_back({lo, hi});
    lo = hi + 1;
  }
  if (oracle(lo, n - 1) > opt_sq) {
    throw InternalError("backtrack: last cluster exceeds the optimum; opt_sq is not optimal");
  }
  clusters.push_back({lo, n - 1});
  if (counters) *counters += oracle.counters();
  return clusters;
}

const char* to_string(BalanceObjective o) {
  return o == BalanceObjective::Radius ? "radius" : "cardinality";
}

std::optional<BalanceObjective> parse_balance_objective(std::string_view name) {
  if (name == "radius") return BalanceObjective::Radius;
  if (name == "cardinality") return BalanceObjective::Cardinality;
  return std::nullopt;
}

namespace {

struct PairSplit {
  std::size_t split = 0;  // last index of the left cluster
  double value = 0.0;     // pair objective at that split
};

class PairBalancer {
 public:
  PairBalancer(const ParetoFront& front, Variant variant, BalanceObjective objective,
               double bound_sq)
      : cost_(front, variant), objective_(objective), bound_sq_(bound_sq) {}

  double value(std::size_t a, std::size_t split, std::size_t b) {
    if (objective_ == BalanceObjective::Cardinality) {
      return static_cast<double>(std::max(split - a + 1, b - split));
    }
    return std::max(cost_(a, split), cost_(split + 1, b));
  }

  // Best split of [a, b] into two non-empty clusters.
  PairSplit best(std::size_t a, std::size_t b) {
    return objective_ == BalanceObjective::Radius ? best_radius(a, b) : best_cardinality(a, b);
  }

 private:
  PairSplit best_radius(std::size_t a, std::size_t b) {
    // Left cost grows with the split, right cost shrinks: bisect for the crossing.
    std::size_t lo = a;
    std::size_t hi = b - 1;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (cost_(a, mid) >= cost_(mid + 1, b)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    PairSplit out{lo, value(a, lo, b)};
    if (lo > a) {
      const double left = value(a, lo - 1, b);
      if (left <= out.value) out = {lo - 1, left};
    }
    return out;
  }

  PairSplit best_cardinality(std::size_t a, std::size_t b) {
    // Feasible splits form a range: cost(a, s) <= bound iff s <= s_max and
    // cost(s + 1, b) <= bound iff s >= s_min.
    std::size_t lo = a;
    std::size_t hi = b - 1;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo + 1) / 2;
      if (cost_(a, mid) <= bound_sq_) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    const std::size_t s_max = lo;
    lo = a;
    hi = b - 1;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (cost_(mid + 1, b) <= bound_sq_) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    const std::size_t s_min = lo;
    const std::size_t centre = a + (b - a) / 2;
    const std::size_t split = std::clamp(centre, s_min, std::max(s_min, s_max));
    return {split, value(a, split, b)};
  }

  CostOracle cost_;
  BalanceObjective objective_;
  double bound_sq_;
};

}  // namespace

BalanceResult balance_partition(const ParetoFront& front,
                                const std::vector<IntervalCluster>& clusters, Variant variant,
                                BalanceObjective objective) {
  check_partition(front, clusters);
  BalanceResult result{clusters, 0};
  if (clusters.size() < 2) return result;

  CostOracle cost(front, variant);
  double bound_sq = 0.0;
  for (const IntervalCluster& c : clusters) bound_sq = std::max(bound_sq, cost(c.lo, c.hi));

  PairBalancer balancer(front, variant, objective, bound_sq);
  auto& parts = result.clusters;
  for (;;) {
    std::size_t best_pair = parts.size();
    PairSplit best_split;
    double best_gain = 0.0;
    for (std::size_t p = 0; p + 1 < parts.size(); ++p) {
      const std::size_t a = parts[p].lo;
      const std::size_t b = parts[p + 1].hi;
      const double current = balancer.value(a, parts[p].hi, b);
      const PairSplit candidate = balancer.best(a, b);
      const double gain = current - candidate.value;
      if (gain > best_gain) {
        best_gain = gain;
        best_pair = p;
        best_split = candidate;
      }
    }
    if (best_pair == parts.size()) break;
    parts[best_pair].hi = best_split.split;
    parts[best_pair + 1].lo = best_split.split + 1;
    ++result.moves;
  }
  return result;
}

KCurve k_curve(const ParetoFront& front, std::size_t k_max, Variant variant,
               const SolveOptions& options) {
  const std::vector<double> optima = dp_stage_optima(front, k_max, variant, options);
  KCurve curve;
  curve.entries.reserve(optima.size());
  for (std::size_t k = 1; k <= optima.size(); ++k) {
    curve.entries.push_back({k, std::sqrt(optima[k - 1]), optima[k - 1]});
  }
  return curve;
}

std::size_t elbow_select(const KCurve& curve) {
  const auto& e = curve.entries;
  if (e.size() < 3) throw InvalidInput("elbow selection needs at least three curve points");
  std::size_t best = 1;
  double best_curvature = e[0].opt_radius - 2.0 * e[1].opt_radius + e[2].opt_radius;
  for (std::size_t i = 2; i + 1 < e.size(); ++i) {
    const double c = e[i - 1].opt_radius - 2.0 * e[i].opt_radius + e[i + 1].opt_radius;
    if (c > best_curvature) {
      best_curvature = c;
      best = i;
    }
  }
  return e[best].k;
}

}  // namespace pfkc
