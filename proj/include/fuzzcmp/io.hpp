// File formats: fuzzy-set JSON documents, sample CSV columns, and fixed
// precision number rendering.
#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "fuzzcmp/core.hpp"

namespace fuzzcmp {

using json = nlohmann::json;

inline json to_json(const FuzzySet& set) {
  json points = json::array();
  for (const auto& p : set.points()) points.push_back({p.x, p.mu});
  return {{"name", set.name()},
          {"universe", {{"min", set.universe().min()}, {"max", set.universe().max()}}},
          {"points", std::move(points)}};
}

/// Parses and validates a fuzzy-set document. Structural problems and
/// invariant violations both raise a validation Error.
inline FuzzySet fuzzy_set_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw Error("fuzzy set document must be a JSON object");
    const auto& u = doc.at("universe");
    Universe universe(u.at("min").get<double>(), u.at("max").get<double>());
    std::vector<Breakpoint> points;
    for (const auto& p : doc.at("points")) {
      if (!p.is_array() || p.size() != 2) throw Error("each point must be [x, mu]");
      points.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return FuzzySet(doc.at("name").get<std::string>(), universe, std::move(points));
  } catch (const json::exception& e) {
    throw Error(std::string("malformed fuzzy set document: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'", ErrorKind::Io);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'", ErrorKind::Io);
  out << content;
  if (!out) throw Error("write failed for '" + path + "'", ErrorKind::Io);
}

inline FuzzySet read_fuzzy_set(const std::string& path) {
  const std::string text = read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("'" + path + "' is not valid JSON: " + e.what());
  }
  return fuzzy_set_from_json(doc);
}

inline void write_fuzzy_set(const std::string& path, const FuzzySet& set) {
  write_file(path, to_json(set).dump(2) + "\n");
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

inline std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == ',' && !quoted) {
      fields.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  fields.push_back(trim(line.substr(start)));
  return fields;
}

}  // namespace detail

inline std::optional<double> parse_double(std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

/// Reads one numeric column (selected by header name) from CSV text. Blank
/// lines are skipped; a bad value reports its 1-based line number.
inline std::vector<double> read_csv_column(std::istream& in, const std::string& column) {
  std::string line;
  if (!std::getline(in, line)) throw Error("no data");
  const auto header = detail::split_csv_line(line);
  std::size_t col = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == column) col = i;
  }
  if (col == header.size()) throw Error("missing column '" + column + "'");

  std::vector<double> values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split_csv_line(line);
    const auto v = col < fields.size() ? parse_double(fields[col]) : std::nullopt;
    if (!v) {
      throw Error("unparsable value in column '" + column + "' at line " +
                  std::to_string(line_no));
    }
    values.push_back(*v);
  }
  if (values.empty()) throw Error("no data");
  return values;
}

inline std::vector<double> read_csv_column(const std::string& path, const std::string& column) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'", ErrorKind::Io);
  return read_csv_column(in, column);
}

/// `precision` significant digits; integral results keep a trailing ".0".
inline std::string format_number(double v, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  std::string s(buf);
  if (s == "-0") s = "0";
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

}  // namespace fuzzcmp
