// Copyright 2026 The sphtess Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sphtess/io.hpp"

#include <fmt/format.h>

#include <charconv>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <string>

namespace sphtess::io {

namespace {

[[noreturn]] void bad(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::InvalidInput, fmt::format("line {}: {}", line, what));
}

UnitVec3 make_point(double x, double y, double z, std::size_t line) {
  try {
    return UnitVec3::adopt({x, y, z});
  } catch (const Error&) {
    bad(line, "zero vector");
  }
}

double parse_double(std::string_view s, std::size_t line) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) bad(line, fmt::format("not a number: '{}'", s));
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool blank(std::string_view s) { return s.find_first_not_of(" \t\r") == std::string_view::npos; }

std::vector<UnitVec3> read_jsonl(std::istream& in) {
  std::vector<UnitVec3> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (blank(line)) continue;
    const auto rec = nlohmann::json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object()) bad(no, "not a JSON object");
    for (const char* key : {"x", "y", "z"})
      if (!rec.contains(key) || !rec[key].is_number()) bad(no, fmt::format("missing numeric '{}'", key));
    out.push_back(make_point(rec["x"].get<double>(), rec["y"].get<double>(), rec["z"].get<double>(), no));
  }
  return out;
}

std::vector<UnitVec3> read_csv(std::istream& in) {
  std::vector<UnitVec3> out;
  std::string line;
  std::size_t no = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++no;
    if (blank(line)) continue;
    const auto cols = split(line, ',');
    if (header) {
      header = false;
      if (cols.size() == 4 && cols[0] == "i") continue;
    }
    if (cols.size() != 4) bad(no, "expected columns i,x,y,z");
    out.push_back(make_point(parse_double(cols[1], no), parse_double(cols[2], no), parse_double(cols[3], no), no));
  }
  return out;
}

std::vector<UnitVec3> read_ply(std::istream& in) {
  std::string line;
  std::size_t no = 0;
  std::size_t count = 0;
  bool seen_magic = false;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!seen_magic) {
      if (line != "ply") bad(no, "missing ply magic");
      seen_magic = true;
      continue;
    }
    if (line == "end_header") break;
    if (line.rfind("format ", 0) == 0 && line != "format ascii 1.0") bad(no, "only ascii PLY is supported");
    if (line.rfind("element vertex ", 0) == 0) count = static_cast<std::size_t>(parse_double(line.substr(15), no));
  }
  std::vector<UnitVec3> out;
  out.reserve(count);
  while (out.size() < count && std::getline(in, line)) {
    ++no;
    if (blank(line)) continue;
    std::vector<std::string_view> cols;
    for (auto c : split(line, ' '))
      if (!c.empty()) cols.push_back(c);
    if (cols.size() < 3) bad(no, "expected x y z");
    out.push_back(make_point(parse_double(cols[0], no), parse_double(cols[1], no), parse_double(cols[2], no), no));
  }
  if (out.size() != count) bad(no, fmt::format("expected {} vertices, found {}", count, out.size()));
  return out;
}

}  // namespace

std::optional<PointFormat> parse_point_format(std::string_view name) {
  if (name == "jsonl") return PointFormat::jsonl;
  if (name == "csv") return PointFormat::csv;
  if (name == "ply") return PointFormat::ply;
  return std::nullopt;
}

std::string_view to_string(PointFormat f) {
  switch (f) {
    case PointFormat::jsonl: return "jsonl";
    case PointFormat::csv: return "csv";
    case PointFormat::ply: return "ply";
  }
  return "jsonl";
}

std::optional<PointFormat> format_from_path(std::string_view path) {
  const std::size_t dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  return parse_point_format(path.substr(dot + 1));
}

void write_points(std::ostream& out, std::span<const UnitVec3> points, PointFormat format) {
  switch (format) {
    case PointFormat::jsonl:
      for (std::size_t i = 0; i < points.size(); ++i) {
        out << fmt::format(R"({{"i":{},"x":{:.17g},"y":{:.17g},"z":{:.17g}}})", i, points[i].x(), points[i].y(),
                           points[i].z())
            << '\n';
      }
      break;
    case PointFormat::csv:
      out << "i,x,y,z\n";
      for (std::size_t i = 0; i < points.size(); ++i) {
        out << fmt::format("{},{:.17g},{:.17g},{:.17g}\n", i, points[i].x(), points[i].y(), points[i].z());
      }
      break;
    case PointFormat::ply:
      out << "ply\nformat ascii 1.0\n"
          << fmt::format("element vertex {}\n", points.size())
          << "property double x\nproperty double y\nproperty double z\nend_header\n";
      for (const auto& p : points) out << fmt::format("{:.17g} {:.17g} {:.17g}\n", p.x(), p.y(), p.z());
      break;
  }
}

std::vector<UnitVec3> read_points(std::istream& in, PointFormat format) {
  switch (format) {
    case PointFormat::jsonl: return read_jsonl(in);
    case PointFormat::csv: return read_csv(in);
    case PointFormat::ply: return read_ply(in);
  }
  return {};
}

}  // namespace sphtess::io
