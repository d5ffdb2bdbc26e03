#include "pfkc/dp_solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <sstream>

#include "pfkc/dp_kernels.hpp"

namespace pfkc {

DpLine::DpLine(std::size_t k, std::size_t n, LineBudget* budget)
    : k_(k), values_(n, 0.0), budget_(budget) {
  if (budget_) {
    ++budget_->live;
    budget_->peak = std::max(budget_->peak, budget_->live);
  }
}

DpLine::~DpLine() { release(); }

DpLine::DpLine(DpLine&& other) noexcept
    : k_(other.k_), values_(std::move(other.values_)), budget_(other.budget_) {
  other.budget_ = nullptr;
}

DpLine& DpLine::operator=(DpLine&& other) noexcept {
  if (this != &other) {
    release();
    k_ = other.k_;
    values_ = std::move(other.values_);
    budget_ = other.budget_;
    other.budget_ = nullptr;
  }
  return *this;
}

void DpLine::release() {
  if (budget_) --budget_->live;
  budget_ = nullptr;
}

bool DpLine::is_nondecreasing() const {
  return std::is_sorted(values_.begin(), values_.end());
}

void check_partition(const ParetoFront& front, std::span<const IntervalCluster> clusters) {
  std::size_t next = 0;
  for (const IntervalCluster& c : clusters) {
    if (c.lo != next || c.hi < c.lo || c.hi >= front.size()) {
      std::ostringstream msg;
      msg << "clusters are not a contiguous partition: [" << c.lo << ", " << c.hi
          << "] where a cluster starting at " << next << " was expected";
      throw InvalidInput(msg.str());
    }
    next = c.hi + 1;
  }
  if (next != front.size()) throw InvalidInput("clusters do not cover the whole front");
}

Solution assemble_solution(const ParetoFront& front, std::vector<IntervalCluster> clusters,
                           Variant variant, std::size_t requested_k) {
  check_partition(front, clusters);
  Solution s;
  s.variant = variant;
  s.k = requested_k;
  s.effective_k = clusters.size();
  s.centers.reserve(clusters.size());
  for (const IntervalCluster& c : clusters) {
    s.centers.push_back(cost(front, c, variant));
    s.opt_radius_sq = std::max(s.opt_radius_sq, s.centers.back().radius_sq);
  }
  s.opt_radius = std::sqrt(s.opt_radius_sq);
  s.clusters = std::move(clusters);
  return s;
}

Solution solve_one_center(const ParetoFront& front, Variant variant) {
  const std::size_t n = front.size();
  if (variant == Variant::Continuous) {
    Solution s = assemble_solution(front, {{0, n - 1}}, variant, 1);
    s.stats.dp.cost_calls = 1;
    return s;
  }

  std::size_t best = 0;
  double best_sq = fij(front, 0, n - 1, 0);
  for (std::size_t j = 1; j < n; ++j) {
    const double v = fij(front, 0, n - 1, j);
    if (v < best_sq) {
      best_sq = v;
      best = j;
    }
  }
  Solution s;
  s.variant = variant;
  s.k = 1;
  s.effective_k = 1;
  s.opt_radius_sq = best_sq;
  s.opt_radius = std::sqrt(best_sq);
  s.clusters = {{0, n - 1}};
  s.centers = {CostResult{best_sq, s.opt_radius, front[best], best}};
  s.stats.dp = OracleCounters{1, n};
  return s;
}

DpLine dp_first_line(const ParetoFront& front, Variant variant, OracleCounters* counters) {
  DpLine line(1, front.size());
  OracleCounters local;
  kernels::first_line_serial(front, variant, line.values(), local);
  if (counters) *counters += local;
  return line;
}

double dp_line_entry(const ParetoFront& front, const DpLine& prev, std::size_t i,
                     Variant variant, OracleCounters* counters) {
  if (i >= front.size() || prev.size() != front.size()) {
    std::ostringstream msg;
    msg << "dp_line_entry: index " << i << " out of range for a front of size " << front.size();
    throw InvalidInput(msg.str());
  }
  CostOracle oracle(front, variant);
  const double v = kernels::line_entry(oracle, prev.values(), i);
  if (counters) *counters += oracle.counters();
  return v;
}

namespace {

void compute_line(const ParetoFront& front, Variant variant, const DpLine* prev, DpLine& out,
                  int workers, OracleCounters& counters) {
  if (prev == nullptr) {
    if (workers > 1) {
      kernels::first_line_parallel(front, variant, out.values(), workers, counters);
    } else {
      kernels::first_line_serial(front, variant, out.values(), counters);
    }
  } else if (workers > 1) {
    kernels::next_line_parallel(front, variant, prev->values(), out.values(), workers, counters);
  } else {
    kernels::next_line_serial(front, variant, prev->values(), out.values(), counters);
  }
}

}  // namespace

std::vector<double> dp_stage_optima(const ParetoFront& front, std::size_t k_max, Variant variant,
                                    const SolveOptions& options, SolveStats* stats) {
  if (k_max == 0) throw InvalidInput("cluster count must be at least 1");
  if (options.workers < 1) throw InvalidInput("worker count must be at least 1");
  const std::size_t n = front.size();
  const std::size_t stages = std::min(k_max, n);

  std::vector<double> optima(k_max, 0.0);
  LineBudget budget;
  SolveStats local;

  DpLine prev(1, n, &budget);
  compute_line(front, variant, nullptr, prev, options.workers, local.dp);
  local.line_cost_calls.push_back(local.dp.cost_calls);
  assert(prev.is_nondecreasing());
  optima[0] = prev[n - 1];

  for (std::size_t k = 2; k <= stages; ++k) {
    const std::uint64_t before = local.dp.cost_calls;
    DpLine cur(k, n, &budget);
    compute_line(front, variant, &prev, cur, options.workers, local.dp);
    assert(cur.is_nondecreasing());
    local.line_cost_calls.push_back(local.dp.cost_calls - before);
    optima[k - 1] = cur[n - 1];
    prev = std::move(cur);
  }
  if (budget.peak > 2) throw InternalError("more than two DP lines were resident");

  local.peak_lines = budget.peak;
  if (stats) {
    stats->dp += local.dp;
    stats->line_cost_calls.insert(stats->line_cost_calls.end(), local.line_cost_calls.begin(),
                                  local.line_cost_calls.end());
    stats->peak_lines = std::max(stats->peak_lines, local.peak_lines);
  }
  return optima;
}

std::vector<IntervalCluster> backtrack_min_index(const ParetoFront& front, std::size_t k,
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
  std::size_t hi = n - 1;
  for (std::size_t c = k; c >= 2; --c) {
    // Cluster c (1-based) must leave c-1 points for the clusters to its left.
    std::size_t lo = hi;
    while (lo > c - 1 && oracle(lo - 1, hi) <= opt_sq) --lo;
    clusters.push_back({lo, hi});
    hi = lo - 1;
  }
  if (oracle(0, hi) > opt_sq) {
    throw InternalError("backtrack: first cluster exceeds the optimum; opt_sq is not optimal");
  }
  clusters.push_back({0, hi});
  std::reverse(clusters.begin(), clusters.end());
  if (counters) *counters += oracle.counters();
  return clusters;
}

Solution solve(const ParetoFront& front, std::size_t k, Variant variant,
               const SolveOptions& options) {
  if (k == 0) throw InvalidInput("cluster count must be at least 1");
  if (options.workers < 1) throw InvalidInput("worker count must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = front.size();

  Solution s;
  if (k >= n) {
    std::vector<IntervalCluster> singletons;
    for (std::size_t i = 0; i < n; ++i) singletons.push_back({i, i});
    s = assemble_solution(front, std::move(singletons), variant, k);
  } else if (k == 1) {
    s = solve_one_center(front, variant);
  } else {
    SolveStats stats;
    const std::vector<double> optima = dp_stage_optima(front, k, variant, options, &stats);
    const double opt_sq = optima.back();
    auto clusters = backtrack_min_index(front, k, opt_sq, variant, &stats.backtrack);
    s = assemble_solution(front, std::move(clusters), variant, k);
    if (s.opt_radius_sq != opt_sq) {
      throw InternalError("rebuilt partition does not attain the DP optimum");
    }
    s.stats = std::move(stats);
  }
  s.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace pfkc
