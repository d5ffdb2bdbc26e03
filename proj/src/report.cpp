#include "pfkc/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "pfkc/io.hpp"

namespace pfkc::report {

using nlohmann::json;

namespace {

json point_json(const Point2& p) { return json::array({p.obj1, p.obj2}); }

}  // namespace

json solve_to_json(const ParetoFront& front, const Solution& s, const SolveContext& ctx) {
  json clusters = json::array();
  for (std::size_t c = 0; c < s.clusters.size(); ++c) {
    const IntervalCluster& range = s.clusters[c];
    const CostResult& centre = s.centers[c];
    json pts = json::array();
    for (std::size_t i = range.lo; i <= range.hi; ++i) pts.push_back(point_json(front[i]));
    clusters.push_back({
        {"lo", range.lo + 1},
        {"hi", range.hi + 1},
        {"size", range.size()},
        {"radius", centre.radius},
        {"radius_sq", centre.radius_sq},
        {"center", point_json(centre.center)},
        {"center_index", centre.center_index ? json(*centre.center_index + 1) : json(nullptr)},
        {"points", std::move(pts)},
    });
  }

  const SolveStats& st = s.stats;
  const std::uint64_t max_line =
      st.line_cost_calls.empty()
          ? 0
          : *std::max_element(st.line_cost_calls.begin(), st.line_cost_calls.end());
  return {
      {"command", "solve"},
      {"n", front.size()},
      {"variant", to_string(s.variant)},
      {"k", s.k},
      {"effective_k", s.effective_k},
      {"opt_radius", s.opt_radius},
      {"opt_radius_sq", s.opt_radius_sq},
      {"backtrack", ctx.backtrack},
      {"balance", ctx.balance ? json(*ctx.balance) : json(nullptr)},
      {"balance_moves", ctx.balance_moves},
      {"clusters", std::move(clusters)},
      {"stats",
       {
           {"workers", ctx.workers},
           {"dp_lines", st.line_cost_calls.size()},
           {"peak_dp_lines", st.peak_lines},
           {"dp_cost_calls", st.dp.cost_calls},
           {"dp_fij_evals", st.dp.fij_evals},
           {"max_line_cost_calls", max_line},
           {"backtrack_cost_calls", st.backtrack.cost_calls},
           {"cost_oracle_calls", st.dp.cost_calls + st.backtrack.cost_calls},
           {"wall_time_ms", st.wall_seconds * 1e3},
       }},
  };
}

std::string solve_to_csv(const Solution& s) {
  std::string out = "cluster,lo,hi,size,center_obj1,center_obj2,center_index,radius,radius_sq\n";
  for (std::size_t c = 0; c < s.clusters.size(); ++c) {
    const IntervalCluster& r = s.clusters[c];
    const CostResult& ctr = s.centers[c];
    out += std::to_string(c + 1) + ',' + std::to_string(r.lo + 1) + ',' +
           std::to_string(r.hi + 1) + ',' + std::to_string(r.size()) + ',' +
           io::format_double(ctr.center.obj1) + ',' + io::format_double(ctr.center.obj2) + ',' +
           (ctr.center_index ? std::to_string(*ctr.center_index + 1) : std::string()) + ',' +
           io::format_double(ctr.radius) + ',' + io::format_double(ctr.radius_sq) + '\n';
  }
  return out;
}

json kcurve_to_json(const ParetoFront& front, const KCurve& curve, Variant variant,
                    std::optional<std::size_t> elbow) {
  json entries = json::array();
  for (const KCurveEntry& e : curve.entries) {
    entries.push_back({{"k", e.k}, {"opt_radius", e.opt_radius}, {"opt_radius_sq", e.opt_radius_sq}});
  }
  return {
      {"command", "kcurve"},
      {"n", front.size()},
      {"variant", to_string(variant)},
      {"k_max", curve.entries.size()},
      {"curve", std::move(entries)},
      {"elbow", elbow ? json(*elbow) : json(nullptr)},
  };
}

std::string kcurve_to_csv(const KCurve& curve, std::optional<std::size_t> elbow) {
  std::string out = "k,opt_radius,opt_radius_sq\n";
  for (const KCurveEntry& e : curve.entries) {
    out += std::to_string(e.k) + ',' + io::format_double(e.opt_radius) + ',' +
           io::format_double(e.opt_radius_sq) + '\n';
  }
  if (elbow) out += "# elbow=" + std::to_string(*elbow) + '\n';
  return out;
}

std::string plot_svg(const ParetoFront& front, const Solution& s) {
  constexpr double kSize = 800.0;
  constexpr double kMargin = 40.0;
  constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                  "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  const double r = s.opt_radius;

  double xmin = front[0].obj1, xmax = front[0].obj1;
  double ymin = front[0].obj2, ymax = front[0].obj2;
  auto extend = [&](const Point2& p, double pad) {
    xmin = std::min(xmin, p.obj1 - pad);
    xmax = std::max(xmax, p.obj1 + pad);
    ymin = std::min(ymin, p.obj2 - pad);
    ymax = std::max(ymax, p.obj2 + pad);
  };
  for (const Point2& p : front.points()) extend(p, 0.0);
  for (const CostResult& c : s.centers) extend(c.center, r);
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double scale = (kSize - 2.0 * kMargin) / span;
  auto sx = [&](double x) { return kMargin + (x - xmin) * scale; };
  auto sy = [&](double y) { return kSize - kMargin - (y - ymin) * scale; };

  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                "viewBox=\"0 0 %.0f %.0f\">\n",
                kSize, kSize, kSize, kSize);
  out += buf;
  out += "<rect class=\"background\" x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t c = 0; c < s.clusters.size(); ++c) {
    const char* colour = kPalette[c % kPalette.size()];
    const Point2& ctr = s.centers[c].center;
    std::snprintf(buf, sizeof buf,
                  "<circle class=\"ball\" cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"none\" "
                  "stroke=\"%s\" stroke-width=\"1.5\"/>\n",
                  sx(ctr.obj1), sy(ctr.obj2), r * scale, colour);
    out += buf;
  }
  for (std::size_t c = 0; c < s.clusters.size(); ++c) {
    const char* colour = kPalette[c % kPalette.size()];
    for (std::size_t i = s.clusters[c].lo; i <= s.clusters[c].hi; ++i) {
      std::snprintf(buf, sizeof buf,
                    "<rect class=\"point\" x=\"%.3f\" y=\"%.3f\" width=\"6\" height=\"6\" "
                    "fill=\"%s\"/>\n",
                    sx(front[i].obj1) - 3.0, sy(front[i].obj2) - 3.0, colour);
      out += buf;
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace pfkc::report
