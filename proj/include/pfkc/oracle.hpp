/**
 * @file oracle.hpp
 * @brief Brute-force reference implementations for verification.
 *
 * Nothing here relies on the structural properties of Pareto fronts that the
 * solver exploits: costs are scanned, enclosing balls are found from first
 * principles, and partitions are enumerated. Inputs beyond the size guards
 * are rejected rather than truncated.
 */

#ifndef PFKC_ORACLE_HPP
#define PFKC_ORACLE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "pfkc/cluster_cost.hpp"
#include "pfkc/pareto_front.hpp"

namespace pfkc::oracle {

inline constexpr std::size_t kIntervalMaxN = 16;
inline constexpr std::size_t kIntervalMaxK = 6;
inline constexpr std::size_t kAllPartitionsMaxN = 9;
inline constexpr std::size_t kAllPartitionsMaxK = 4;
inline constexpr std::size_t kExhaustiveMebMaxN = 60;

/// Arg-min over every j in the interval; lowest index on ties.
CostResult naive_discrete_cost(const ParetoFront& front, const IntervalCluster& c);

/// Quarter of the squared extreme-point distance, computed independently of
/// the solver's cost routines.
double naive_continuous_cost_sq(const ParetoFront& front, const IntervalCluster& c);

struct Ball {
  Point2 center;
  double radius = 0.0;
};

/// Smallest covering circle among all circles through 2 or 3 of the points.
/// O(n^4) worst case; n <= kExhaustiveMebMaxN.
Ball exhaustive_meb(std::span<const Point2> points);

/// Welzl's randomized incremental minimum enclosing circle with a fixed
/// shuffle seed. Exact up to rounding, expected O(n).
Ball welzl_meb(std::span<const Point2> points);

/// Exhaustive for small sets, Welzl otherwise.
Ball exact_meb(std::span<const Point2> points);

/// Squared discrete 1-center cost of an arbitrary point set: min over member
/// y of max over members x of |x - y|^2.
double discrete_set_cost_sq(std::span<const Point2> points);

struct OracleResult {
  double opt_radius_sq = 0.0;
  /// Every optimal interval partition as its K-1 cut positions (last index
  /// of each cluster but the final one), 0-based.
  std::vector<std::vector<std::size_t>> all_optimal_partitions;
};

/// Exhaustive search over contiguous partitions into min(K, N) clusters.
OracleResult brute_force_intervals(const ParetoFront& front, std::size_t k, Variant variant);

/// Optimal radius over every set partition into min(K, N) nonempty parts.
double brute_force_all_partitions(const ParetoFront& front, std::size_t k, Variant variant);

}  // namespace pfkc::oracle

#endif  // PFKC_ORACLE_HPP
