/**
 * @file io.hpp
 * @brief Point-set ingestion and number formatting for the command-line tool.
 *
 * CSV: two columns `obj1,obj2` with `.` as decimal separator. The first
 * non-blank line is taken as a header when it does not parse as two
 * numbers. Blank lines are ignored.
 *
 * JSON: an array of two-element numeric arrays, e.g. `[[0,3],[1,2.5]]`.
 */

#ifndef PFKC_IO_HPP
#define PFKC_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pfkc/pareto_front.hpp"

namespace pfkc::io {

/// File missing, unreadable, unwritable or malformed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Point2> parse_points_csv(std::string_view text);
std::vector<Point2> parse_points_json(std::string_view text);

/// Picks the JSON reader when the content starts with '[', CSV otherwise.
std::vector<Point2> parse_points(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

std::vector<Point2> read_points(const std::filesystem::path& path);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

std::string points_to_csv(const std::vector<Point2>& points);

}  // namespace pfkc::io

#endif  // PFKC_IO_HPP
