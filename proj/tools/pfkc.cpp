// pfkc: exact K-center clustering of two-dimensional Pareto fronts.
//
// Exit codes: 0 ok, 1 usage / bad parameters, 2 I/O, 3 input is not a
// Pareto front (comparable points).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfkc/dp_solver.hpp"
#include "pfkc/generator.hpp"
#include "pfkc/io.hpp"
#include "pfkc/oracle.hpp"
#include "pfkc/refinement.hpp"
#include "pfkc/report.hpp"

namespace {

using nlohmann::json;
using namespace pfkc;

enum ExitCode { kOk = 0, kUsage = 1, kIo = 2, kValidation = 3 };

struct InputOptions {
  std::string input_path;
  std::string gen_spec;
  bool sanitize = false;
};

struct RunConfig {
  InputOptions in;
  std::size_t k = 2;
  std::size_t k_max = 10;
  std::string variant = "continuous";
  std::string backtrack = "min";
  std::string balance;
  int workers = 1;
  std::string format = "json";
  std::string output_path;
  std::string plot_path;
  bool no_elbow = false;
};

int default_workers() {
  if (const char* env = std::getenv("PKC_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid PKC_WORKERS='" << env << "'\n";
  }
  return 1;
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* file = cmd->add_option("--input", in.input_path, "CSV or JSON point file");
  auto* gen = cmd->add_option("--gen", in.gen_spec,
                              "generate instead: n=N,shape=convex|concave|linear|random-staircase,"
                              "seed=S,noise=X");
  file->excludes(gen);
  cmd->add_flag("--sanitize", in.sanitize, "drop dominated and duplicate points instead of failing");
}

ParetoFront load_front(const InputOptions& in) {
  std::vector<Point2> points;
  if (!in.input_path.empty()) {
    points = io::read_points(in.input_path);
  } else if (!in.gen_spec.empty()) {
    points = generate_points(parse_instance_spec(in.gen_spec));
  } else {
    throw InvalidInput("one of --input or --gen is required");
  }
  return ParetoFront::build(std::move(points), in.sanitize);
}

Variant variant_of(const std::string& name) {
  const auto v = parse_variant(name);
  if (!v) throw InvalidInput("unknown variant '" + name + "'");
  return *v;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty()) {
    std::cout << text;
  } else {
    io::write_file(cfg.output_path, text);
  }
}

int cmd_solve(const RunConfig& cfg) {
  const ParetoFront front = load_front(cfg.in);
  const Variant variant = variant_of(cfg.variant);
  Solution s = solve(front, cfg.k, variant, SolveOptions{cfg.workers});

  report::SolveContext ctx;
  ctx.workers = cfg.workers;
  ctx.backtrack = cfg.backtrack;
  if (cfg.backtrack == "max" && s.k > 1 && s.k < front.size()) {
    SolveStats stats = s.stats;
    stats.backtrack = {};
    auto clusters = backtrack_max_index(front, s.k, s.opt_radius_sq, variant, &stats.backtrack);
    s = assemble_solution(front, std::move(clusters), variant, cfg.k);
    s.stats = std::move(stats);
  }
  if (!cfg.balance.empty()) {
    const auto objective = parse_balance_objective(cfg.balance);
    if (!objective) throw InvalidInput("unknown balance objective '" + cfg.balance + "'");
    const BalanceResult balanced = balance_partition(front, s.clusters, variant, *objective);
    SolveStats stats = std::move(s.stats);
    s = assemble_solution(front, balanced.clusters, variant, cfg.k);
    s.stats = std::move(stats);
    ctx.balance = cfg.balance;
    ctx.balance_moves = balanced.moves;
  }

  if (cfg.format == "csv") {
    emit(cfg, report::solve_to_csv(s));
  } else {
    emit(cfg, report::solve_to_json(front, s, ctx).dump(2) + "\n");
  }
  if (!cfg.plot_path.empty()) io::write_file(cfg.plot_path, report::plot_svg(front, s));
  return kOk;
}

int cmd_kcurve(const RunConfig& cfg) {
  const ParetoFront front = load_front(cfg.in);
  const Variant variant = variant_of(cfg.variant);
  const KCurve curve = k_curve(front, cfg.k_max, variant, SolveOptions{cfg.workers});
  std::optional<std::size_t> elbow;
  if (!cfg.no_elbow) {
    if (curve.entries.size() < 3) {
      throw InvalidInput("elbow selection needs --kmax >= 3 (use --no-elbow for the table only)");
    }
    elbow = elbow_select(curve);
  }
  if (cfg.format == "csv") {
    emit(cfg, report::kcurve_to_csv(curve, elbow));
  } else {
    emit(cfg, report::kcurve_to_json(front, curve, variant, elbow).dump(2) + "\n");
  }
  return kOk;
}

struct GenerateConfig {
  InstanceSpec spec;
  std::string shape = "convex";
  std::string out_path;
};

int cmd_generate(GenerateConfig cfg) {
  const auto shape = parse_front_shape(cfg.shape);
  if (!shape) throw InvalidInput("unknown shape '" + cfg.shape + "'");
  cfg.spec.shape = *shape;
  const std::string csv = io::points_to_csv(generate_points(cfg.spec));
  if (cfg.out_path.empty()) {
    std::cout << csv;
  } else {
    io::write_file(cfg.out_path, csv);
  }
  return kOk;
}

struct BenchConfig {
  std::vector<std::size_t> sizes = {1000, 10000, 100000};
  std::size_t k = 8;
  std::string variant = "continuous";
  std::string shape = "convex";
  std::uint64_t seed = 1;
  int max_workers = 0;
  std::string output_path;
};

int cmd_bench(const BenchConfig& cfg) {
  const Variant variant = variant_of(cfg.variant);
  const auto shape = parse_front_shape(cfg.shape);
  if (!shape) throw InvalidInput("unknown shape '" + cfg.shape + "'");
  const int max_workers =
      cfg.max_workers > 0 ? cfg.max_workers
                          : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));

  json runs = json::array();
  bool all_identical = true;
  for (const std::size_t n : cfg.sizes) {
    const ParetoFront front =
        ParetoFront::build(generate_points(InstanceSpec{n, *shape, 0.0, cfg.seed}));
    const Solution serial = solve(front, cfg.k, variant, SolveOptions{1});
    const Solution parallel = solve(front, cfg.k, variant, SolveOptions{max_workers});
    const bool identical =
        serial.opt_radius_sq == parallel.opt_radius_sq && serial.clusters == parallel.clusters;
    all_identical = all_identical && identical;
    const auto& lines = serial.stats.line_cost_calls;
    runs.push_back({
        {"n", front.size()},
        {"k", cfg.k},
        {"variant", to_string(variant)},
        {"opt_radius_sq", serial.opt_radius_sq},
        {"dp_lines", lines.size()},
        {"cost_oracle_calls", serial.stats.dp.cost_calls + serial.stats.backtrack.cost_calls},
        {"max_line_cost_calls", lines.empty() ? 0 : *std::max_element(lines.begin(), lines.end())},
        {"serial_ms", serial.stats.wall_seconds * 1e3},
        {"parallel_workers", max_workers},
        {"parallel_ms", parallel.stats.wall_seconds * 1e3},
        {"speedup", parallel.stats.wall_seconds > 0.0
                        ? serial.stats.wall_seconds / parallel.stats.wall_seconds
                        : 0.0},
        {"identical", identical},
    });
  }
  const json out = {{"command", "bench"}, {"runs", runs}, {"all_identical", all_identical}};
  if (cfg.output_path.empty()) {
    std::cout << out.dump(2) << "\n";
  } else {
    io::write_file(cfg.output_path, out.dump(2) + "\n");
  }
  return all_identical ? kOk : kValidation;
}

struct OracleConfig {
  std::size_t count = 20;
  std::size_t n_max = 9;
  std::size_t k_max = 4;
  std::uint64_t seed = 1;
  std::string out_path;
};

int cmd_oracle(const OracleConfig& cfg) {
  if (cfg.n_max == 0 || cfg.n_max > oracle::kIntervalMaxN) {
    throw InvalidInput("--nmax must be in [1, 16]");
  }
  if (cfg.k_max == 0 || cfg.k_max > oracle::kIntervalMaxK) {
    throw InvalidInput("--kmax must be in [1, 6]");
  }
  std::mt19937_64 rng(cfg.seed);
  json fixtures = json::array();
  for (std::size_t c = 0; c < cfg.count; ++c) {
    const std::size_t n = 1 + rng() % cfg.n_max;
    const std::size_t k = 1 + rng() % cfg.k_max;
    const std::uint64_t seed = rng();
    const ParetoFront front = ParetoFront::build(
        generate_points(InstanceSpec{n, FrontShape::RandomStaircase, 0.0, seed}));
    json pts = json::array();
    for (const Point2& p : front.points()) pts.push_back({p.obj1, p.obj2});
    json by_variant = json::object();
    for (const Variant v : {Variant::Continuous, Variant::Discrete}) {
      const oracle::OracleResult r = oracle::brute_force_intervals(front, k, v);
      json cuts = json::array();
      for (const auto& part : r.all_optimal_partitions) {
        json one = json::array();
        for (const std::size_t cut : part) one.push_back(cut + 1);
        cuts.push_back(one);
      }
      json entry = {{"interval_opt_radius_sq", r.opt_radius_sq}, {"optimal_cuts", cuts}};
      if (n <= oracle::kAllPartitionsMaxN && k <= oracle::kAllPartitionsMaxK) {
        entry["all_partitions_opt_radius"] = oracle::brute_force_all_partitions(front, k, v);
      }
      by_variant[to_string(v)] = entry;
    }
    fixtures.push_back({{"seed", seed}, {"k", k}, {"points", pts}, {"results", by_variant}});
  }
  const std::string text = json{{"fixtures", fixtures}}.dump(2) + "\n";
  if (cfg.out_path.empty()) {
    std::cout << text;
  } else {
    io::write_file(cfg.out_path, text);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact K-center clustering of two-dimensional Pareto fronts"};
  app.require_subcommand(1);

  RunConfig solve_cfg;
  solve_cfg.workers = default_workers();
  auto* solve_cmd = app.add_subcommand("solve", "optimal K-center partition");
  add_input_options(solve_cmd, solve_cfg.in);
  solve_cmd->add_option("--k", solve_cfg.k, "number of clusters")->required();
  solve_cmd->add_option("--variant", solve_cfg.variant)
      ->check(CLI::IsMember({"continuous", "discrete"}));
  solve_cmd->add_option("--backtrack", solve_cfg.backtrack)->check(CLI::IsMember({"min", "max"}));
  solve_cmd->add_option("--balance", solve_cfg.balance)
      ->check(CLI::IsMember({"radius", "cardinality"}));
  solve_cmd->add_option("--workers", solve_cfg.workers)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--plot", solve_cfg.plot_path, "write an SVG plot");
  solve_cmd->add_option("--format", solve_cfg.format)->check(CLI::IsMember({"json", "csv"}));
  solve_cmd->add_option("--output", solve_cfg.output_path, "report file (default stdout)");

  RunConfig curve_cfg;
  curve_cfg.workers = default_workers();
  auto* curve_cmd = app.add_subcommand("kcurve", "optimal radius for k = 1..kmax");
  add_input_options(curve_cmd, curve_cfg.in);
  curve_cmd->add_option("--kmax", curve_cfg.k_max)->required();
  curve_cmd->add_option("--variant", curve_cfg.variant)
      ->check(CLI::IsMember({"continuous", "discrete"}));
  curve_cmd->add_option("--workers", curve_cfg.workers)->check(CLI::PositiveNumber);
  curve_cmd->add_flag("--no-elbow", curve_cfg.no_elbow, "skip the elbow pick");
  curve_cmd->add_option("--format", curve_cfg.format)->check(CLI::IsMember({"json", "csv"}));
  curve_cmd->add_option("--output", curve_cfg.output_path);

  GenerateConfig gen_cfg;
  auto* gen_cmd = app.add_subcommand("generate", "write a synthetic Pareto front as CSV");
  gen_cmd->add_option("--n", gen_cfg.spec.n)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--shape", gen_cfg.shape)
      ->check(CLI::IsMember({"convex", "concave", "linear", "random-staircase"}));
  gen_cmd->add_option("--seed", gen_cfg.spec.seed);
  gen_cmd->add_option("--noise", gen_cfg.spec.noise)->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--out", gen_cfg.out_path, "output file (default stdout)");

  BenchConfig bench_cfg;
  auto* bench_cmd = app.add_subcommand("bench", "time serial vs parallel DP on generated fronts");
  bench_cmd->add_option("--sizes", bench_cfg.sizes)->delimiter(',');
  bench_cmd->add_option("--k", bench_cfg.k)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--variant", bench_cfg.variant)
      ->check(CLI::IsMember({"continuous", "discrete"}));
  bench_cmd->add_option("--shape", bench_cfg.shape);
  bench_cmd->add_option("--seed", bench_cfg.seed);
  bench_cmd->add_option("--workers", bench_cfg.max_workers, "parallel worker count (default: all cores)");
  bench_cmd->add_option("--output", bench_cfg.output_path);

  OracleConfig oracle_cfg;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force fixture generation");
  oracle_cmd->group("");  // hidden
  oracle_cmd->add_option("--count", oracle_cfg.count);
  oracle_cmd->add_option("--nmax", oracle_cfg.n_max);
  oracle_cmd->add_option("--kmax", oracle_cfg.k_max);
  oracle_cmd->add_option("--seed", oracle_cfg.seed);
  oracle_cmd->add_option("--out", oracle_cfg.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_cfg);
    if (*curve_cmd) return cmd_kcurve(curve_cfg);
    if (*gen_cmd) return cmd_generate(gen_cfg);
    if (*bench_cmd) return cmd_bench(bench_cfg);
    if (*oracle_cmd) return cmd_oracle(oracle_cfg);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << " (input indices " << e.first_index() << " and "
              << e.second_index() << ", 0-based)\n";
    return kValidation;
  } catch (const io::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return kUsage;
}
