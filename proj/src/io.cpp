#include "pfkc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pfkc::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_number(std::string_view field, double& out) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return false;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

bool parse_row(std::string_view line, Point2& out) {
  const auto comma = line.find(',');
  if (comma == std::string_view::npos) return false;
  const std::string_view rest = line.substr(comma + 1);
  if (rest.find(',') != std::string_view::npos) return false;
  return parse_number(line.substr(0, comma), out.obj1) && parse_number(rest, out.obj2);
}

}  // namespace

std::vector<Point2> parse_points_csv(std::string_view text) {
  std::vector<Point2> points;
  bool seen_first = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    Point2 p;
    if (parse_row(line, p)) {
      points.push_back(p);
    } else if (!seen_first) {
      // header row
    } else {
      std::ostringstream msg;
      msg << "CSV line " << line_no << ": expected two numeric columns, got '" << line << "'";
      throw IoError(msg.str());
    }
    seen_first = true;
  }
  return points;
}

std::vector<Point2> parse_points_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(std::string("JSON input: ") + e.what());
  }
  if (!doc.is_array()) throw IoError("JSON input: expected an array of [obj1, obj2] pairs");
  std::vector<Point2> points;
  points.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
      std::ostringstream msg;
      msg << "JSON input: element " << i << " is not a pair of numbers";
      throw IoError(msg.str());
    }
    points.push_back({item[0].get<double>(), item[1].get<double>()});
  }
  return points;
}

std::vector<Point2> parse_points(std::string_view text) {
  const std::string_view t = trim(text);
  if (!t.empty() && t.front() == '[') return parse_points_json(t);
  return parse_points_csv(text);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path.string());
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("error while writing " + path.string());
}

std::vector<Point2> read_points(const std::filesystem::path& path) {
  return parse_points(read_file(path));
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string points_to_csv(const std::vector<Point2>& points) {
  std::string out = "obj1,obj2\n";
  for (const Point2& p : points) {
    out += format_double(p.obj1);
    out += ',';
    out += format_double(p.obj2);
    out += '\n';
  }
  return out;
}

}  // namespace pfkc::io
