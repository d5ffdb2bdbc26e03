/**
 * @file report.hpp
 * @brief JSON/CSV run reports and SVG cluster plots. The JSON layout is
 * documented in docs/report-schema.md; cluster ranges are 1-based and
 * inclusive there.
 */

#ifndef PFKC_REPORT_HPP
#define PFKC_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "pfkc/dp_solver.hpp"
#include "pfkc/refinement.hpp"

namespace pfkc::report {

struct SolveContext {
  std::string backtrack = "min";
  std::optional<std::string> balance;
  std::size_t balance_moves = 0;
  int workers = 1;
};

nlohmann::json solve_to_json(const ParetoFront& front, const Solution& s,
                             const SolveContext& ctx);
std::string solve_to_csv(const Solution& s);

nlohmann::json kcurve_to_json(const ParetoFront& front, const KCurve& curve, Variant variant,
                              std::optional<std::size_t> elbow);
std::string kcurve_to_csv(const KCurve& curve, std::optional<std::size_t> elbow);

/// Points drawn as squares coloured by cluster, one circle of the optimal
/// radius per cluster centre. Output is byte-identical for identical input.
std::string plot_svg(const ParetoFront& front, const Solution& s);

}  // namespace pfkc::report

#endif  // PFKC_REPORT_HPP
