/**
 * @file generator.hpp
 * @brief Seeded synthetic Pareto fronts.
 */

#ifndef PFKC_GENERATOR_HPP
#define PFKC_GENERATOR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfkc/pareto_front.hpp"

namespace pfkc {

enum class FrontShape { Convex, Concave, Linear, RandomStaircase };

const char* to_string(FrontShape s);
std::optional<FrontShape> parse_front_shape(std::string_view name);

struct InstanceSpec {
  std::size_t n = 100;
  FrontShape shape = FrontShape::Convex;
  double noise = 0.0;  ///< std-dev of Gaussian noise added to obj2
  std::uint64_t seed = 1;
};

/// Parses `n=1000,shape=convex,seed=7,noise=0.01`; keys may appear in any
/// order and omitted keys keep their defaults.
InstanceSpec parse_instance_spec(std::string_view text);

/**
 * Exactly spec.n mutually non-dominated points, in no particular order.
 * obj1 is drawn uniformly in [0, 1]. Curve shapes evaluate the curve (plus
 * noise) there, the staircase draws obj2 uniformly; the obj2 values are then
 * re-paired in decreasing order so the result is always a front. Draws with
 * repeated coordinates are redone. Deterministic for a given spec.
 */
std::vector<Point2> generate_points(const InstanceSpec& spec);

}  // namespace pfkc

#endif  // PFKC_GENERATOR_HPP
