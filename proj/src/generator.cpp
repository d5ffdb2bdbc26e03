#include "pfkc/generator.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <random>

namespace pfkc {

const char* to_string(FrontShape s) {
  switch (s) {
    case FrontShape::Convex:
      return "convex";
    case FrontShape::Concave:
      return "concave";
    case FrontShape::Linear:
      return "linear";
    case FrontShape::RandomStaircase:
      return "random-staircase";
  }
  return "?";
}

std::optional<FrontShape> parse_front_shape(std::string_view name) {
  if (name == "convex") return FrontShape::Convex;
  if (name == "concave") return FrontShape::Concave;
  if (name == "linear") return FrontShape::Linear;
  if (name == "random-staircase" || name == "staircase") return FrontShape::RandomStaircase;
  return std::nullopt;
}

namespace {

template <typename T>
T parse_value(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw InvalidInput("generator spec: bad value '" + std::string(value) + "' for key '" +
                       std::string(key) + "'");
  }
  return out;
}

double curve(FrontShape shape, double x) {
  switch (shape) {
    case FrontShape::Convex:
      return (1.0 - x) * (1.0 - x);
    case FrontShape::Concave:
      return 1.0 - x * x;
    default:
      return 1.0 - x;
  }
}

}  // namespace

InstanceSpec parse_instance_spec(std::string_view text) {
  InstanceSpec spec;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidInput("generator spec: expected key=value, got '" + std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "n") {
      spec.n = parse_value<std::size_t>(key, value);
    } else if (key == "shape") {
      const auto shape = parse_front_shape(value);
      if (!shape) throw InvalidInput("generator spec: unknown shape '" + std::string(value) + "'");
      spec.shape = *shape;
    } else if (key == "noise") {
      spec.noise = parse_value<double>(key, value);
    } else if (key == "seed") {
      spec.seed = parse_value<std::uint64_t>(key, value);
    } else {
      throw InvalidInput("generator spec: unknown key '" + std::string(key) + "'");
    }
  }
  if (spec.n == 0) throw InvalidInput("generator spec: n must be at least 1");
  if (!(spec.noise >= 0.0)) throw InvalidInput("generator spec: noise must be >= 0");
  return spec;
}

std::vector<Point2> generate_points(const InstanceSpec& spec) {
  if (spec.n == 0) throw InvalidInput("generator: n must be at least 1");
  if (!(spec.noise >= 0.0)) throw InvalidInput("generator: noise must be >= 0");
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::normal_distribution<double> gauss(0.0, spec.noise > 0.0 ? spec.noise : 1.0);
  // Sorted abscissae paired with ordinates sorted the other way always form
  // a front; noise only jitters the ordinates before they are paired.
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<double> xs(spec.n);
    std::vector<double> ys(spec.n);
    for (auto& x : xs) x = unit(rng);
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i < spec.n; ++i) {
      if (spec.shape == FrontShape::RandomStaircase) {
        ys[i] = unit(rng);
      } else {
        ys[i] = curve(spec.shape, xs[i]);
        if (spec.noise > 0.0) ys[i] += gauss(rng);
      }
    }
    std::sort(ys.begin(), ys.end(), std::greater<>());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) continue;
    if (std::adjacent_find(ys.begin(), ys.end()) != ys.end()) continue;
    std::vector<Point2> pts(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) pts[i] = {xs[i], ys[i]};
    std::shuffle(pts.begin(), pts.end(), rng);
    return pts;
  }
  throw InvalidInput("generator: could not draw distinct coordinates");
}

}  // namespace pfkc
