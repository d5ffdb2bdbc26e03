#include "pfkc/dp_kernels.hpp"

#include <cstdint>

namespace pfkc::kernels {

void first_line_serial(const ParetoFront& front, Variant variant, std::span<double> out,
                       OracleCounters& counters) {
  CostOracle cost(front, variant);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = cost(0, i);
  counters += cost.counters();
}

void first_line_parallel(const ParetoFront& front, Variant variant, std::span<double> out,
                         int workers, OracleCounters& counters) {
  const auto n = static_cast<std::int64_t>(out.size());
  std::uint64_t calls = 0;
  std::uint64_t evals = 0;
#pragma omp parallel num_threads(workers) reduction(+ : calls, evals)
  {
    CostOracle cost(front, variant);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) out[i] = cost(0, static_cast<std::size_t>(i));
    calls += cost.counters().cost_calls;
    evals += cost.counters().fij_evals;
  }
  counters += OracleCounters{calls, evals};
}

void next_line_serial(const ParetoFront& front, Variant variant, std::span<const double> prev,
                      std::span<double> out, OracleCounters& counters) {
  CostOracle cost(front, variant);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = line_entry(cost, prev, i);
  counters += cost.counters();
}

void next_line_parallel(const ParetoFront& front, Variant variant, std::span<const double> prev,
                        std::span<double> out, int workers, OracleCounters& counters) {
  const auto n = static_cast<std::int64_t>(out.size());
  std::uint64_t calls = 0;
  std::uint64_t evals = 0;
#pragma omp parallel num_threads(workers) reduction(+ : calls, evals)
  {
    CostOracle cost(front, variant);
    // Entry cost grows with log i; dynamic chunks even out the tail.
#pragma omp for schedule(dynamic, 1024)
    for (std::int64_t i = 0; i < n; ++i) {
      out[i] = line_entry(cost, prev, static_cast<std::size_t>(i));
    }
    calls += cost.counters().cost_calls;
    evals += cost.counters().fij_evals;
  }
  counters += OracleCounters{calls, evals};
}

}  // namespace pfkc::kernels
