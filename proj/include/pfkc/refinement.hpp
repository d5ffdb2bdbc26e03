/**
 * @file refinement.hpp
 * @brief Post-processing of optimal partitions and cluster-count selection.
 */

#ifndef PFKC_REFINEMENT_HPP
#define PFKC_REFINEMENT_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pfkc/dp_solver.hpp"

namespace pfkc {

/// Left-to-right mirror of backtrack_min_index: each cluster grows rightwards
/// while its cost stays <= opt_sq. Boundaries are the largest over all
/// optimal interval partitions.
std::vector<IntervalCluster> backtrack_max_index(const ParetoFront& front, std::size_t k,
                                                 double opt_sq, Variant variant,
                                                 OracleCounters* counters = nullptr);

enum class BalanceObjective { Radius, Cardinality };

const char* to_string(BalanceObjective o);
std::optional<BalanceObjective> parse_balance_objective(std::string_view name);

struct BalanceResult {
  std::vector<IntervalCluster> clusters;
  std::size_t moves = 0;
};

/**
 * Steepest-descent local search over boundary shifts between adjacent
 * clusters. Each move re-splits one adjacent pair optimally for the
 * objective (the larger of the two squared radii, or the larger of the two
 * cardinalities) while keeping both costs within the input's max cost. The
 * pair with the largest decrease is moved first; stops at a local optimum.
 */
BalanceResult balance_partition(const ParetoFront& front,
                                const std::vector<IntervalCluster>& clusters, Variant variant,
                                BalanceObjective objective);

struct KCurveEntry {
  std::size_t k = 0;
  double opt_radius = 0.0;
  double opt_radius_sq = 0.0;
};

struct KCurve {
  std::vector<KCurveEntry> entries;  ///< k = 1..k_max
};

/// Optimal radius for every k up to k_max from a single DP pass.
KCurve k_curve(const ParetoFront& front, std::size_t k_max, Variant variant,
               const SolveOptions& options = {});

/// Interior k maximizing r(k-1) - 2 r(k) + r(k+1); ties go to the smaller k.
std::size_t elbow_select(const KCurve& curve);

}  // namespace pfkc

#endif  // PFKC_REFINEMENT_HPP
