/**
 * @file dp_kernels.hpp
 * @brief Line kernels of the K-center dynamic program.
 *
 * A DP line holds C(i, k), the optimal squared k-center cost of the prefix
 * x_0..x_i. Line k is computed from line k-1 only:
 *
 *   C(i, k) = min_{1 <= j <= i} max(C(j-1, k-1), cost(j, i)),   C(0, k) = 0.
 *
 * The first term is non-decreasing in j and the second non-increasing, so the
 * minimum sits where they cross. Each entry bisects on the sign of their
 * difference and inspects the two candidates around the crossing, which
 * takes at most ceil(log2 i) + 1 interval costs and stays exact when either
 * term has plateaus.
 *
 * Entries of a line are independent. The serial kernels are the reference;
 * the OpenMP kernels must produce bit-identical lines for any worker count.
 */

#ifndef PFKC_DP_KERNELS_HPP
#define PFKC_DP_KERNELS_HPP

#include <cstddef>
#include <span>

#include "pfkc/cluster_cost.hpp"

namespace pfkc::kernels {

/// C(i, k) from the previous line; prev[j] = C(j, k-1).
inline double line_entry(CostOracle& cost, std::span<const double> prev, std::size_t i) {
  if (i == 0) return 0.0;
  std::size_t lo = 1;
  std::size_t hi = i;
  // First j with prev[j-1] >= cost(j, i); j = i always qualifies (cost 0).
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (prev[mid - 1] >= cost(mid, i)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  double best = prev[lo - 1];
  if (lo > 1) {
    const double left = cost(lo - 1, i);
    if (left < best) best = left;
  }
  return best;
}

void first_line_serial(const ParetoFront& front, Variant variant, std::span<double> out,
                       OracleCounters& counters);
void first_line_parallel(const ParetoFront& front, Variant variant, std::span<double> out,
                         int workers, OracleCounters& counters);

void next_line_serial(const ParetoFront& front, Variant variant, std::span<const double> prev,
                      std::span<double> out, OracleCounters& counters);
void next_line_parallel(const ParetoFront& front, Variant variant, std::span<const double> prev,
                        std::span<double> out, int workers, OracleCounters& counters);

}  // namespace pfkc::kernels

#endif  // PFKC_DP_KERNELS_HPP
