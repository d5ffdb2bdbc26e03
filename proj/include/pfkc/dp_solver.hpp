/**
 * @file dp_solver.hpp
 * @brief Exact K-center solver for sorted 2D Pareto fronts.
 *
 * Optimal clusters can always be chosen as contiguous index ranges of the
 * sorted front, which reduces the problem to a one-dimensional DP. Lines are
 * computed one stage at a time with only the previous line kept, so memory
 * is O(N). The partition is then rebuilt from the optimal value alone by a
 * greedy right-to-left sweep (no DP matrix is stored).
 *
 * Time: O(K N log N) continuous, O(K N log^2 N) discrete.
 */

#ifndef PFKC_DP_SOLVER_HPP
#define PFKC_DP_SOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pfkc/cluster_cost.hpp"
#include "pfkc/pareto_front.hpp"

namespace pfkc {

/// Counts DP lines alive at once; the solver asserts the peak never exceeds 2.
struct LineBudget {
  std::size_t live = 0;
  std::size_t peak = 0;
};

/// One stage of the DP: values[i] = C(i, k), squared, over prefix x_0..x_i.
class DpLine {
 public:
  DpLine(std::size_t k, std::size_t n, LineBudget* budget = nullptr);
  ~DpLine();
  DpLine(DpLine&& other) noexcept;
  DpLine& operator=(DpLine&& other) noexcept;
  DpLine(const DpLine&) = delete;
  DpLine& operator=(const DpLine&) = delete;

  std::size_t k() const { return k_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  bool is_nondecreasing() const;

 private:
  void release();

  std::size_t k_;
  std::vector<double> values_;
  LineBudget* budget_;
};

struct SolveOptions {
  int workers = 1;  ///< 1 selects the serial reference kernels
};

struct SolveStats {
  OracleCounters dp;         ///< interval costs spent computing DP lines
  OracleCounters backtrack;  ///< interval costs spent rebuilding the partition
  std::vector<std::uint64_t> line_cost_calls;  ///< per DP line, in stage order
  std::size_t peak_lines = 0;
  double wall_seconds = 0.0;
};

struct Solution {
  Variant variant = Variant::Continuous;
  std::size_t k = 0;            ///< requested cluster count
  std::size_t effective_k = 0;  ///< clusters.size() == min(k, N)
  double opt_radius_sq = 0.0;
  double opt_radius = 0.0;
  std::vector<IntervalCluster> clusters;  ///< contiguous cover of [0, N-1], in order
  std::vector<CostResult> centers;        ///< one per cluster
  SolveStats stats;
};

/// Fills centers and the optimum from a contiguous partition. Throws
/// InvalidInput if @p clusters is not a contiguous cover of the front.
Solution assemble_solution(const ParetoFront& front, std::vector<IntervalCluster> clusters,
                           Variant variant, std::size_t requested_k);

void check_partition(const ParetoFront& front, std::span<const IntervalCluster> clusters);

/// K = 1. The discrete centre is found by a single linear scan.
Solution solve_one_center(const ParetoFront& front, Variant variant);

/// values[i] = cost([0, i]).
DpLine dp_first_line(const ParetoFront& front, Variant variant,
                     OracleCounters* counters = nullptr);

/// C(i, k) given prev = line k-1. Throws if i is out of range.
double dp_line_entry(const ParetoFront& front, const DpLine& prev, std::size_t i,
                     Variant variant, OracleCounters* counters = nullptr);

/// C(N-1, k) for k = 1..k_max in one DP pass (squared). Entries with k >= N
/// are 0 and cost nothing.
std::vector<double> dp_stage_optima(const ParetoFront& front, std::size_t k_max, Variant variant,
                                    const SolveOptions& options = {},
                                    SolveStats* stats = nullptr);

/// Rebuilds an optimal partition from the exact optimum: each cluster, from
/// the right, grows leftwards while its cost stays <= opt_sq, leaving at
/// least one point for every cluster still to place. The resulting
/// boundaries are the smallest over all optimal interval partitions.
std::vector<IntervalCluster> backtrack_min_index(const ParetoFront& front, std::size_t k,
                                                 double opt_sq, Variant variant,
                                                 OracleCounters* counters = nullptr);

Solution solve(const ParetoFront& front, std::size_t k, Variant variant,
               const SolveOptions& options = {});

}  // namespace pfkc

#endif  // PFKC_DP_SOLVER_HPP
