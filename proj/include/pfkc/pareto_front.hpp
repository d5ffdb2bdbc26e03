/**
 * @file pareto_front.hpp
 * @brief Points of the objective plane, dominance relations and the sorted
 *        two-dimensional Pareto front container.
 *
 * Both objectives are minimized. A validated front is indexed so that the
 * first objective strictly increases and the second strictly decreases; all
 * clustering code relies on that order.
 */

#ifndef PFKC_PARETO_FRONT_HPP
#define PFKC_PARETO_FRONT_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfkc {

struct Point2 {
  double obj1 = 0.0;
  double obj2 = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Relation of y to z under component-wise minimization.
enum class Dominance {
  StrictlyPrecedes,  ///< y1 < z1 and y2 > z2
  StrictlyFollows,   ///< y1 > z1 and y2 < z2
  Equal,
  Dominates,    ///< y <= z on both coordinates, strictly on one
  IsDominated,  ///< z dominates y
};

const char* to_string(Dominance d);

/// Bad arguments: non-finite coordinates, empty input, bad intervals, K = 0.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two input points are comparable, so the input is not a Pareto front.
/// Indices refer to positions in the caller's (unsorted) input sequence.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::size_t first, std::size_t second, const std::string& what)
      : std::runtime_error(what), first_(first), second_(second) {}

  std::size_t first_index() const { return first_; }
  std::size_t second_index() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// A solver invariant did not hold. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

bool is_finite(const Point2& p);

Dominance compare(const Point2& y, const Point2& z);

inline double distance_sq(const Point2& y, const Point2& z) {
  const double d1 = y.obj1 - z.obj1;
  const double d2 = y.obj2 - z.obj2;
  return d1 * d1 + d2 * d2;
}

double distance(const Point2& y, const Point2& z);

/// Contiguous index range [lo, hi] over a sorted front (0-based, inclusive).
struct IntervalCluster {
  std::size_t lo = 0;
  std::size_t hi = 0;

  std::size_t size() const { return hi - lo + 1; }
  friend bool operator==(const IntervalCluster&, const IntervalCluster&) = default;
};

/**
 * Immutable sorted sequence of mutually non-dominated points.
 *
 * Invariant: for all i < j, points[i] strictly precedes points[j], i.e.
 * obj1 strictly increasing and obj2 strictly decreasing. Equality of
 * coordinates is exact bit-level equality; callers round beforehand if they
 * want a tolerance.
 */
class ParetoFront {
 public:
  /// Sorts and validates. With @p sanitize, exact duplicates and dominated
  /// points are dropped first instead of being reported.
  static ParetoFront build(std::vector<Point2> points, bool sanitize = false);

  std::size_t size() const { return points_.size(); }
  const Point2& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point2> points() const { return points_; }

  void check_interval(const IntervalCluster& c) const;

 private:
  explicit ParetoFront(std::vector<Point2> sorted) : points_(std::move(sorted)) {}

  std::vector<Point2> points_;
};

/// Keeps only the non-dominated points (one copy per duplicate), sorted by
/// obj1. Among points sharing obj1 the one with least obj2 survives.
std::vector<Point2> nondominated_filter(std::vector<Point2> points);

}  // namespace pfkc

#endif  // PFKC_PARETO_FRONT_HPP
