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

#include "sphtess/analysis.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "sphtess/constants.hpp"

namespace sphtess::analysis {

namespace {

void require_range(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::OutOfRange, what);
}

bool in_centroid_range(Radians alpha) { return alpha.value > 0.0 && alpha.value < 2.0 * kPi / 3.0; }

std::string fmt_vec(const UnitVec3& p) { return fmt::format("[{:.12g},{:.12g},{:.12g}]", p.x(), p.y(), p.z()); }

BoundConstruction make_construction(std::string name, std::vector<UnitVec3> pts, double claimed, Radians x) {
  BoundConstruction c;
  c.name = std::move(name);
  c.points = std::move(pts);
  c.prefixes = prefix_gap_ratios(c.points, c.points.size());
  c.claimed_ratio = claimed;
  c.x = x;
  return c;
}

}  // namespace

Radians centroid_distance(Radians alpha) {
  require_range(in_centroid_range(alpha), "centroid_distance needs 0 < alpha < 2 pi / 3");
  return Radians{std::asin(2.0 * std::sin(alpha.value / 2.0) / std::sqrt(3.0))};
}

Radians central_edge_length(Radians alpha) {
  require_range(alpha.value > 0.0 && std::tan(alpha.value / 2.0) / 2.0 <= 1.0 && alpha.value < kPi,
                "central_edge_length needs 0 < alpha <= 2 atan 2");
  return Radians{2.0 * std::asin(std::tan(alpha.value / 2.0) / 2.0)};
}

double limit_gap_ratio(Radians alpha) {
  require_range(in_centroid_range(alpha), "limit_gap_ratio needs 0 < alpha < 2 pi / 3");
  const double s = std::sin(alpha.value / 2.0);
  return 4.0 * s / (alpha.value * std::sqrt(3.0 - 4.0 * s * s));
}

double stage2_bound(Radians alpha) { return 2.0 * limit_gap_ratio(alpha); }

BoundConstruction three_point_bound() {
  const Radians x{kPi * (std::sqrt(5.0) - 2.0)};
  const double b = kPi - x.value;
  const UnitVec3 p1 = UnitVec3::from_xyz(0.0, 0.0, 1.0);
  const UnitVec3 p2 = UnitVec3::from_xyz(std::sin(b), 0.0, std::cos(b));
  const UnitVec3 p3 = midpoint(p1, p2).antipode();
  return make_construction("three-point", {p1, p2, p3}, kGoldenRatio, x);
}

Radians four_point_offset() { return Radians{0.726 * kPi / 2.726}; }

std::vector<UnitVec3> four_point_configuration(Radians x, Radians z) {
  const double b = kPi - x.value;
  const UnitVec3 u1 = UnitVec3::from_xyz(0.0, 1.0, 0.0);
  const UnitVec3 u2 = UnitVec3::from_xyz(std::sin(b), std::cos(b), 0.0);
  const Vec3 m = midpoint(u1, u2).vec();
  const UnitVec3 u3 = normalize(std::cos(z.value) * m + std::sin(z.value) * Vec3{0.0, 0.0, 1.0});
  const std::vector<UnitVec3> first{u1, u2, u3};
  const UnitVec3 u4 = max_gap_exact(first).center;
  return {u1, u2, u3, u4};
}

Gap34Sample gap34_at(Radians x, Radians z) {
  const auto pts = four_point_configuration(x, z);
  const std::span<const UnitVec3> all(pts);
  return {z, gap_ratio(all.first(3)).ratio, gap_ratio(all).ratio};
}

std::vector<Gap34Sample> gap34_curve(Radians x, std::size_t samples) {
  require_range(x.value > 0.0 && x.value < kPi, "gap34_curve needs 0 < x < pi");
  require_range(samples >= 10, "gap34_curve needs at least 10 samples");
  std::vector<Gap34Sample> out;
  out.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double z = kPi * static_cast<double>(i) / static_cast<double>(samples - 1);
    out.push_back(gap34_at(x, Radians{z}));
  }
  return out;
}

Radians gap34_crossing(Radians x, std::size_t coarse_samples) {
  const auto coarse = gap34_curve(x, std::max<std::size_t>(coarse_samples, 10));
  auto diff = [&](double z) {
    const auto s = gap34_at(x, Radians{z});
    return s.gap3 - s.gap4;
  };
  std::optional<double> best_z;
  double best_value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < coarse.size(); ++i) {
    const double d0 = coarse[i].gap3 - coarse[i].gap4;
    const double d1 = coarse[i + 1].gap3 - coarse[i + 1].gap4;
    if ((d0 > 0.0) == (d1 > 0.0) && d0 != 0.0) continue;
    double lo = coarse[i].z.value;
    double hi = coarse[i + 1].z.value;
    const bool lo_positive = d0 > 0.0;
    while (hi - lo > 1e-10) {
      const double mid = 0.5 * (lo + hi);
      if ((diff(mid) > 0.0) == lo_positive) lo = mid;
      else hi = mid;
    }
    const double z = 0.5 * (lo + hi);
    const auto s = gap34_at(x, Radians{z});
    // A jump of gap4 also changes sign; only accept genuine crossings.
    if (std::abs(s.gap3 - s.gap4) > 1e-6) continue;
    const double value = std::max(s.gap3, s.gap4);
    if (value < best_value) {
      best_value = value;
      best_z = z;
    }
  }
  if (!best_z) throw Error(ErrorCode::RootNotBracketed, "gap3 and gap4 do not cross on [0, pi]");
  return Radians{*best_z};
}

BoundConstruction four_point_bound() {
  const Radians x = four_point_offset();
  const Radians z = gap34_crossing(x);
  auto c = make_construction("four-point", four_point_configuration(x, z), (kPi + x.value) / (kPi - x.value), x);
  c.z = z;
  return c;
}

std::vector<UnitVec3> great_circle_points(std::initializer_list<double> angles) {
  std::vector<UnitVec3> out{UnitVec3::from_xyz(0.0, 1.0, 0.0)};
  for (const double a : angles) out.push_back(UnitVec3::from_xyz(-std::sin(a), std::cos(a), 0.0));
  return out;
}

CounterexampleReport counterexample_178() {
  CounterexampleReport r;
  r.beta = Radians{0.719 * kPi};
  r.gamma = Radians{kPi * r.beta.value / (kTwoPi - r.beta.value)};
  r.claimed_ratio = kPi / r.gamma.value;
  r.far_side = Radians{kTwoPi - r.beta.value - r.gamma.value};
  r.claimed = make_construction("claimed", great_circle_points({r.beta.value, r.beta.value + r.gamma.value}),
                                r.claimed_ratio, Radians{kPi - r.beta.value});
  r.equidistant = make_construction("equidistant", great_circle_points({r.beta.value, kPi + r.beta.value / 2.0}),
                                    kPi / ((kTwoPi - r.beta.value) / 2.0), Radians{kPi - r.beta.value});
  r.golden = three_point_bound();
  return r;
}

std::vector<Table1Row> table1(unsigned max_depth) {
  require_range(max_depth <= 10, "table1 depth must be at most 10");
  const Solid icosa = make_solid(SolidKind::icosahedron);
  const SphTriangle face = icosa.face_triangle(0);
  std::vector<Table1Row> rows;
  for (unsigned k = 0; k <= max_depth; ++k) rows.push_back({k, face_restricted_report(face, k)});
  return rows;
}

std::vector<Table2Row> table2(std::size_t empirical_limit) {
  std::vector<Table2Row> rows;
  for (const SolidKind kind : {SolidKind::tetrahedron, SolidKind::octahedron, SolidKind::icosahedron}) {
    Table2Row row;
    row.solid = std::string(to_string(kind));
    const std::size_t v = vertex_count(kind, 0);
    row.stage1 = max_ratio(prefix_gap_ratios(kind, v));
    const Radians alpha = solid_edge_length(kind);
    row.stage2 = stage2_bound(alpha);
    row.outside_proven_range = alpha.value > kPi / 2.0;
    unsigned depth = 0;
    while (vertex_count(kind, depth + 1) <= empirical_limit) ++depth;
    if (depth > 0) {
      row.empirical_points = vertex_count(kind, depth);
      const auto reports = prefix_gap_ratios(kind, row.empirical_points);
      double m = 0.0;
      for (const auto& rep : reports)
        if (rep.n > v) m = std::max(m, rep.ratio);
      row.stage2_empirical = m;
    }
    rows.push_back(row);
  }
  Table2Row dodeca;
  dodeca.solid = "dodecahedron";
  dodeca.stage1 = 2.618;
  dodeca.stage2 = 5.995;
  dodeca.computed = false;
  rows.push_back(dodeca);
  return rows;
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::string out = "k,rho_min,rho_max,ratio,twice_ratio\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{:.12g},{:.12g},{:.12g},{:.12g}\n", r.depth, r.report.rho_min.value,
                       r.report.rho_max.value, r.report.ratio, 2.0 * r.report.ratio);
  }
  return out;
}

std::string table1_text(const std::vector<Table1Row>& rows, bool degrees) {
  const double unit = degrees ? 180.0 / kPi : 1.0;
  const char* suffix = degrees ? "(deg)" : "";
  std::string out = fmt::format("{:>3}  {:>12}  {:>12}  {:>8}  {:>8}\n", "k", fmt::format("rho_min{}", suffix),
                                fmt::format("rho_max{}", suffix), "ratio", "2*ratio");
  for (const auto& r : rows) {
    out += fmt::format("{:>3}  {:>12.4f}  {:>12.4f}  {:>8.4f}  {:>8.4f}\n", r.depth, unit * r.report.rho_min.value,
                       unit * r.report.rho_max.value, r.report.ratio, 2.0 * r.report.ratio);
  }
  return out;
}

std::string table2_csv(const std::vector<Table2Row>& rows) {
  std::string out = "solid,stage1,stage2,stage2_empirical,empirical_points,computed,outside_proven_range\n";
  for (const auto& r : rows) {
    const std::string emp = r.stage2_empirical ? fmt::format("{:.12g}", *r.stage2_empirical) : "";
    out += fmt::format("{},{:.12g},{:.12g},{},{},{},{}\n", r.solid, r.stage1, r.stage2, emp, r.empirical_points,
                       r.computed ? "true" : "false", r.outside_proven_range ? "true" : "false");
  }
  return out;
}

std::string table2_text(const std::vector<Table2Row>& rows) {
  std::string out = fmt::format("{:<14}  {:>8}  {:>8}  {:>10}  {}\n", "solid", "stage1", "stage2", "empirical", "notes");
  for (const auto& r : rows) {
    const std::string emp = r.stage2_empirical ? fmt::format("{:.4f}", *r.stage2_empirical) : "-";
    std::vector<std::string> notes;
    if (!r.computed) notes.emplace_back("tabulated constants, not computed");
    if (r.outside_proven_range) notes.emplace_back("edge length above pi/2");
    if (r.stage2_empirical) notes.push_back(fmt::format("empirical over {} points", r.empirical_points));
    out += fmt::format("{:<14}  {:>8.4f}  {:>8.4f}  {:>10}  {}\n", r.solid, r.stage1, r.stage2, emp,
                       fmt::join(notes, "; "));
  }
  return out;
}

std::string to_json(const BoundConstruction& c) {
  std::string pts;
  for (const auto& p : c.points) pts += (pts.empty() ? "" : ",") + fmt_vec(p);
  std::string reps;
  for (const auto& r : c.prefixes) reps += (reps.empty() ? "" : ",") + sphtess::to_json(r);
  const std::string z = c.z ? fmt::format("{:.12g}", c.z->value) : "null";
  return fmt::format(
      R"({{"name":"{}","points":[{}],"prefixes":[{}],"claimed_ratio":{:.12g},"max_prefix_ratio":{:.12g},"x":{:.12g},"z":{}}})",
      c.name, pts, reps, c.claimed_ratio, c.max_prefix_ratio(), c.x.value, z);
}

std::string to_json(const CounterexampleReport& r) {
  return fmt::format(
      R"({{"beta":{:.12g},"gamma":{:.12g},"claimed_ratio":{:.12g},"far_side":{:.12g},"claimed":{},"equidistant":{},"golden":{}}})",
      r.beta.value, r.gamma.value, r.claimed_ratio, r.far_side.value, to_json(r.claimed), to_json(r.equidistant),
      to_json(r.golden));
}

}  // namespace sphtess::analysis
