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

#include "sphtess/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "sphtess/analysis.hpp"
#include "sphtess/constants.hpp"
#include "sphtess/gapmetrics.hpp"
#include "sphtess/io.hpp"
#include "sphtess/tessellate.hpp"

namespace sphtess::cli {

namespace {

constexpr std::size_t kBruteOracleLimit = 200;
constexpr unsigned kMaxDepth = 10;

// Raised inside a command; carries the exit code.
struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) { throw Failure{code, std::move(message)}; }

struct Options {
  std::string solid = "icosa";
  std::optional<std::size_t> count;
  std::optional<unsigned> depth;
  std::string format;
  std::string output;
  std::string input;
  std::string oracle = "none";
  unsigned max_depth = 7;
  int points = 3;
  std::size_t samples = 500;
  std::size_t empirical = 642;
  std::optional<double> x;
  bool degrees = false;
};

SolidKind solid_of(const Options& o) {
  const auto kind = parse_solid_kind(o.solid);
  if (!kind) fail(kUsage, fmt::format("unknown solid '{}'", o.solid));
  return *kind;
}

// Number of stream points from --count or --depth (exactly one).
std::size_t stream_length(const Options& o, SolidKind kind) {
  if (o.count && o.depth) fail(kUsage, "--count and --depth are mutually exclusive");
  if (o.count) return *o.count;
  if (o.depth) {
    if (*o.depth > kMaxDepth) fail(kUsage, fmt::format("--depth must be at most {}", kMaxDepth));
    return vertex_count(kind, *o.depth);
  }
  fail(kUsage, "one of --count or --depth is required");
}

std::string text_or(const Options& o, std::initializer_list<const char*> allowed) {
  const std::string f = o.format.empty() ? *allowed.begin() : o.format;
  for (const char* a : allowed)
    if (f == a) return f;
  fail(kUsage, fmt::format("unsupported --format '{}'", f));
}

double shown(double radians, bool degrees) { return degrees ? radians * 180.0 / kPi : radians; }

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) fail(kIoError, fmt::format("cannot open '{}' for writing", o.output));
  file << text;
  if (!file) fail(kIoError, fmt::format("write to '{}' failed", o.output));
}

std::string cmd_gen(const Options& o) {
  const SolidKind kind = solid_of(o);
  const std::size_t n = stream_length(o, kind);
  io::PointFormat format = io::PointFormat::jsonl;
  if (!o.format.empty()) {
    const auto f = io::parse_point_format(o.format);
    if (!f) fail(kUsage, fmt::format("unsupported --format '{}'", o.format));
    format = *f;
  } else if (const auto f = io::format_from_path(o.output)) {
    format = *f;
  }
  std::ostringstream s;
  io::write_points(s, stream_points(kind, n), format);
  return s.str();
}

std::vector<UnitVec3> analyze_input(const Options& o) {
  if (o.input.empty()) {
    const SolidKind kind = solid_of(o);
    return stream_points(kind, stream_length(o, kind));
  }
  if (o.count || o.depth) fail(kUsage, "--input cannot be combined with --count or --depth");
  std::optional<io::PointFormat> format;
  if (!o.format.empty()) format = io::parse_point_format(o.format);
  else format = io::format_from_path(o.input);
  if (!format) fail(kUsage, "cannot tell the input format; pass --format");
  std::ifstream file(o.input, std::ios::binary);
  if (!file) fail(kIoError, fmt::format("cannot open '{}'", o.input));
  try {
    return io::read_points(file, *format);
  } catch (const Error& e) {
    fail(kIoError, fmt::format("{}: {}", o.input, e.what()));
  }
}

struct OracleSpec {
  enum class Kind { none, grid, brute } kind = Kind::none;
  std::size_t samples = 0;
};

OracleSpec parse_oracle(const std::string& s) {
  if (s == "none") return {};
  if (s == "brute") return {OracleSpec::Kind::brute, 0};
  if (s.rfind("grid:", 0) == 0) {
    const std::string digits = s.substr(5);
    std::size_t m = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) fail(kUsage, "bad --oracle sample count");
    if (m < 1000) fail(kUsage, "--oracle grid:M needs M >= 1000");
    return {OracleSpec::Kind::grid, m};
  }
  fail(kUsage, fmt::format("unknown --oracle '{}'", s));
}

std::string cmd_analyze(const Options& o, bool& oracle_failed) {
  const OracleSpec oracle = parse_oracle(o.oracle);
  const auto points = analyze_input(o);
  if (points.size() < 2) fail(kUsage, "analyze needs at least two points");
  if (oracle.kind == OracleSpec::Kind::brute && points.size() > kBruteOracleLimit) {
    fail(kUsage, fmt::format("--oracle brute is limited to {} points", kBruteOracleLimit));
  }

  const auto reports = prefix_gap_ratios(points, points.size());
  std::string text;
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    text += to_json(reports[i]) + "\n";
    if (reports[i].ratio > reports[argmax].ratio) argmax = i;
  }

  std::string oracle_json = "null";
  const double exact = reports.back().rho_max.value;
  if (oracle.kind == OracleSpec::Kind::grid) {
    const double value = grid_oracle_max_gap(points, oracle.samples).value;
    const double bound = 2.0 * fibonacci_covering_bound(oracle.samples).value;
    const bool ok = value <= exact + tol::kCompound && exact - value <= bound;
    oracle_failed = !ok;
    oracle_json = fmt::format(R"({{"kind":"grid","samples":{},"rho_max":{:.12g},"discrepancy":{:.12g},"bound":{:.12g},"ok":{}}})",
                              oracle.samples, value, exact - value, bound, ok);
  } else if (oracle.kind == OracleSpec::Kind::brute) {
    const double value = max_gap_brute(points).diameter.value;
    const bool ok = std::abs(exact - value) <= tol::kAntipodal;
    oracle_failed = !ok;
    oracle_json = fmt::format(R"({{"kind":"brute","rho_max":{:.12g},"discrepancy":{:.12g},"bound":{:.12g},"ok":{}}})",
                              value, exact - value, tol::kAntipodal, ok);
  }
  const double best = reports[argmax].ratio;
  text += fmt::format(R"({{"summary":{{"n":{},"max_ratio":{},"max_at":{},"oracle":{}}}}})",
                      points.size(), std::isfinite(best) ? fmt::format("{:.12g}", best) : "null", reports[argmax].n,
                      oracle_json);
  text += "\n";
  return text;
}

std::string cmd_table1(const Options& o) {
  if (o.max_depth > kMaxDepth) fail(kUsage, fmt::format("--max-depth must be at most {}", kMaxDepth));
  const auto rows = analysis::table1(o.max_depth);
  return text_or(o, {"text", "csv"}) == "csv" ? analysis::table1_csv(rows) : analysis::table1_text(rows, o.degrees);
}

std::string cmd_table2(const Options& o) {
  const auto rows = analysis::table2(o.empirical);
  return text_or(o, {"text", "csv"}) == "csv" ? analysis::table2_csv(rows) : analysis::table2_text(rows);
}

std::string construction_text(const analysis::BoundConstruction& c, bool degrees) {
  std::string s = fmt::format("construction {}\nratio {:.10f}\n", c.name, c.max_prefix_ratio());
  s += fmt::format("x {:.10f}\n", shown(c.x.value, degrees));
  if (c.z) s += fmt::format("z {:.10f}\n", shown(c.z->value, degrees));
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    const auto& p = c.points[i];
    s += fmt::format("point {} {:.10f} {:.10f} {:.10f}\n", i, p.x(), p.y(), p.z());
  }
  for (const auto& r : c.prefixes) {
    s += fmt::format("prefix {} rho_min {:.10f} rho_max {:.10f} ratio {:.10f}\n", r.n, shown(r.rho_min.value, degrees),
                     shown(r.rho_max.value, degrees), r.ratio);
  }
  return s;
}

std::string cmd_lowerbound(const Options& o) {
  if (o.points != 3 && o.points != 4) fail(kUsage, "--points must be 3 or 4");
  const auto c = o.points == 3 ? analysis::three_point_bound() : analysis::four_point_bound();
  return text_or(o, {"text", "json"}) == "json" ? analysis::to_json(c) + "\n" : construction_text(c, o.degrees);
}

std::string cmd_counterexample(const Options& o) {
  const auto r = analysis::counterexample_178();
  if (text_or(o, {"text", "json"}) == "json") return analysis::to_json(r) + "\n";
  const bool d = o.degrees;
  std::string s;
  s += fmt::format("beta {:.10f}\n", shown(r.beta.value, d));
  s += fmt::format("gamma {:.10f}\n", shown(r.gamma.value, d));
  s += fmt::format("claimed ratio {:.10f}\n", r.claimed_ratio);
  s += fmt::format("far side {:.10f} ({} gamma)\n", shown(r.far_side.value, d), r.far_side > r.gamma ? ">" : "<=");
  s += fmt::format("claimed placement three-point ratio {:.10f}\n", r.claimed.prefixes.back().ratio);
  s += fmt::format("equidistant placement three-point ratio {:.10f}\n", r.equidistant.prefixes.back().ratio);
  s += fmt::format("golden construction ratio {:.10f}\n", r.golden.max_prefix_ratio());
  return s;
}

std::string cmd_figure(const Options& o) {
  if (o.samples < 10) fail(kUsage, "--samples must be at least 10");
  const Radians x = o.x ? Radians{*o.x} : analysis::four_point_offset();
  if (!(x.value > 0.0 && x.value < kPi)) fail(kUsage, "--x must lie in (0, pi)");
  const auto curve = analysis::gap34_curve(x, o.samples);
  std::string s;
  try {
    const Radians z = analysis::gap34_crossing(x, o.samples);
    const auto at = analysis::gap34_at(x, z);
    s += fmt::format("# crossing z={:.10f} ratio={:.10f}\n", z.value, std::max(at.gap3, at.gap4));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::RootNotBracketed) throw;
    s += "# crossing none\n";
  }
  s += "z,gap3,gap4\n";
  for (const auto& c : curve) s += fmt::format("{:.12g},{:.12g},{:.12g}\n", c.z.value, c.gap3, c.gap4);
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Online point placement on the sphere by icosahedral subdivision, with gap-ratio analysis", "sphtess"};
  app.require_subcommand(1, 1);

  auto add_output = [&](CLI::App* c) { c->add_option("--output,-o", o.output, "Write to this file instead of stdout"); };

  auto* gen = app.add_subcommand("gen", "Emit the first points of the placement stream");
  gen->add_option("--solid", o.solid, "tetra, octa or icosa");
  gen->add_option("--count", o.count, "Number of points")->check(CLI::PositiveNumber);
  gen->add_option("--depth", o.depth, "Emit every point up to this dissection depth");
  gen->add_option("--format", o.format, "jsonl, csv or ply");
  add_output(gen);

  auto* analyze = app.add_subcommand("analyze", "Gap ratio of every prefix of a point list");
  analyze->add_option("--input,-i", o.input, "Point file (.jsonl, .csv, .ply)");
  analyze->add_option("--solid", o.solid, "Stream to analyze when no input is given");
  analyze->add_option("--count", o.count, "Number of stream points")->check(CLI::PositiveNumber);
  analyze->add_option("--depth", o.depth, "Analyze every point up to this depth");
  analyze->add_option("--format", o.format, "Input format when the extension does not tell");
  analyze->add_option("--oracle", o.oracle, "none, brute or grid:M");
  add_output(analyze);

  auto* t1 = app.add_subcommand("table1", "Face-restricted gap measures per dissection depth");
  t1->add_option("--max-depth", o.max_depth, "Deepest level (at most 10)");
  t1->add_option("--format", o.format, "text or csv");
  t1->add_flag("--degrees", o.degrees, "Show distances in degrees");
  add_output(t1);

  auto* t2 = app.add_subcommand("table2", "Stage bounds for the platonic solids");
  t2->add_option("--format", o.format, "text or csv");
  t2->add_option("--empirical", o.empirical, "Point budget for the empirical stage-two scan (0 skips it)");
  add_output(t2);

  auto* lb = app.add_subcommand("lowerbound", "Lower-bound constructions for three or four points");
  lb->add_option("--points", o.points, "3 or 4");
  lb->add_option("--format", o.format, "text or json");
  lb->add_flag("--degrees", o.degrees, "Show distances in degrees");
  add_output(lb);

  auto* ce = app.add_subcommand("counterexample", "Three-point placements refuting the 1.78 bound");
  ce->add_option("--format", o.format, "text or json");
  ce->add_flag("--degrees", o.degrees, "Show distances in degrees");
  add_output(ce);

  auto* fig = app.add_subcommand("figure-gap34", "CSV of the three- and four-point ratios along the bisector");
  fig->add_option("--samples", o.samples, "Number of z values");
  fig->add_option("--x", o.x, "Offset of the second point in radians");
  add_output(fig);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    bool oracle_failed = false;
    std::string text;
    if (gen->parsed()) text = cmd_gen(o);
    else if (analyze->parsed()) text = cmd_analyze(o, oracle_failed);
    else if (t1->parsed()) text = cmd_table1(o);
    else if (t2->parsed()) text = cmd_table2(o);
    else if (lb->parsed()) text = cmd_lowerbound(o);
    else if (ce->parsed()) text = cmd_counterexample(o);
    else if (fig->parsed()) text = cmd_figure(o);
    emit(o, out, text);
    if (oracle_failed) {
      err << "error: oracle discrepancy exceeds its bound\n";
      return kOracleMismatch;
    }
    return kOk;
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace sphtess::cli
