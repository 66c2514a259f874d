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

#include "sphtess/tessellate.hpp"

#include <algorithm>
#include <cmath>

#include "sphtess/constants.hpp"

namespace sphtess {

std::string_view to_string(SolidKind kind) {
  switch (kind) {
    case SolidKind::tetrahedron: return "tetrahedron";
    case SolidKind::octahedron: return "octahedron";
    case SolidKind::icosahedron: return "icosahedron";
  }
  return "unknown";
}

std::optional<SolidKind> parse_solid_kind(std::string_view name) {
  if (name == "tetra" || name == "tetrahedron") return SolidKind::tetrahedron;
  if (name == "octa" || name == "octahedron") return SolidKind::octahedron;
  if (name == "icosa" || name == "icosahedron") return SolidKind::icosahedron;
  return std::nullopt;
}

Radians solid_edge_length(SolidKind kind) {
  switch (kind) {
    case SolidKind::tetrahedron: return Radians{std::acos(-1.0 / 3.0)};
    case SolidKind::octahedron: return Radians{kPi / 2.0};
    case SolidKind::icosahedron: return Radians{std::acos(1.0 / std::sqrt(5.0))};
  }
  return Radians{0.0};
}

std::size_t vertex_count(SolidKind kind, unsigned depth) {
  std::size_t faces = 20;
  if (kind == SolidKind::tetrahedron) faces = 4;
  if (kind == SolidKind::octahedron) faces = 8;
  return faces * (std::size_t{1} << (2 * depth)) / 2 + 2;
}

SphTriangle Solid::face_triangle(std::size_t f) const {
  const auto& idx = faces.at(f);
  return SphTriangle(vertices[idx[0]], vertices[idx[1]], vertices[idx[2]]);
}

std::size_t Solid::edge_id(VertexIndex a, VertexIndex b) const {
  const EdgeIndices key{std::min(a, b), std::max(a, b)};
  const auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key) {
    throw Error(ErrorCode::InvalidInput, "vertices are not joined by an edge of the solid");
  }
  return static_cast<std::size_t>(it - edges.begin());
}

namespace {

std::vector<Vec3> raw_vertices(SolidKind kind) {
  const double p = kGoldenRatio;
  switch (kind) {
    case SolidKind::tetrahedron:
      return {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    case SolidKind::octahedron:
      return {{0, 0, 1}, {0, 0, -1}, {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
    case SolidKind::icosahedron:
      // Circular permutations of (0, +-1, +-phi), antipodes adjacent.
      return {{0, -1, p}, {0, 1, -p}, {0, 1, p}, {0, -1, -p}, {1, p, 0},  {-1, -p, 0},
              {1, -p, 0}, {-1, p, 0}, {p, 0, 1}, {-p, 0, -1}, {p, 0, -1}, {-p, 0, 1}};
  }
  return {};
}

std::vector<UnitVec3> subdivide_arc(const UnitVec3& from, const UnitVec3& to, unsigned depth) {
  const std::size_t n = std::size_t{1} << depth;
  std::vector<UnitVec3> e(n + 1);
  e[0] = from;
  e[n] = to;
  for (unsigned k = 1; k <= depth; ++k) {
    const std::size_t s = n >> k;
    for (std::size_t m = s; m < n; m += 2 * s) e[m] = midpoint(e[m - s], e[m + s]);
  }
  return e;
}

// Positions of the 2^depth lattice of one face, corners (A, B, C). Lattice
// point (i, j) has weight i towards B and j towards C.
class FaceGrid {
 public:
  // ab[i] runs A->B, ac[j] runs A->C and bc[t] runs B->C, all at resolution
  // 2^depth.
  FaceGrid(unsigned depth, const std::vector<UnitVec3>& ab, const std::vector<UnitVec3>& ac,
           const std::vector<UnitVec3>& bc)
      : n_(std::size_t{1} << depth), pos_((n_ + 1) * (n_ + 2) / 2) {
    for (std::size_t t = 0; t <= n_; ++t) {
      at(t, 0) = ab[t];
      at(0, t) = ac[t];
      at(n_ - t, t) = bc[t];
    }
    for (unsigned k = 1; k <= depth; ++k) {
      const std::size_t s = n_ >> k;
      for (std::size_t i = s; i + 2 * s <= n_; i += s) {
        for (std::size_t j = s; i + j + s <= n_; j += s) {
          const bool i_odd = (i / s) % 2 == 1;
          const bool j_odd = (j / s) % 2 == 1;
          if (!i_odd && !j_odd) continue;
          if (i_odd && !j_odd) {
            at(i, j) = midpoint(at(i - s, j), at(i + s, j));
          } else if (!i_odd) {
            at(i, j) = midpoint(at(i, j - s), at(i, j + s));
          } else {
            at(i, j) = midpoint(at(i - s, j + s), at(i + s, j - s));
          }
        }
      }
    }
  }

  std::size_t resolution() const { return n_; }
  const UnitVec3& operator()(std::size_t i, std::size_t j) const { return pos_[index(i, j)]; }

 private:
  std::size_t index(std::size_t i, std::size_t j) const { return i * (n_ + 1) - i * (i - 1) / 2 + j; }
  UnitVec3& at(std::size_t i, std::size_t j) { return pos_[index(i, j)]; }

  std::size_t n_;
  std::vector<UnitVec3> pos_;
};

std::vector<UnitVec3> reversed(std::vector<UnitVec3> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

// Interior lattice points first appearing at level k of a 2^depth grid, in
// (i, j) lexicographic order.
template <typename Fn>
void for_each_new_interior(std::size_t n, unsigned k, Fn&& fn) {
  const std::size_t s = n >> k;
  for (std::size_t i = s; i + 2 * s <= n; i += s) {
    for (std::size_t j = s; i + j + s <= n; j += s) {
      if (k > 0 && (i / s) % 2 == 0 && (j / s) % 2 == 0) continue;
      fn(i, j);
    }
  }
}

}  // namespace

Solid make_solid(SolidKind kind) {
  Solid s;
  s.kind = kind;
  for (const Vec3& v : raw_vertices(kind)) s.vertices.push_back(normalize(v));
  const double alpha = solid_edge_length(kind).value;
  const std::size_t n = s.vertices.size();
  auto adjacent = [&](std::size_t i, std::size_t j) {
    return std::abs(sph_dist(s.vertices[i], s.vertices[j]).value - alpha) < 1e-9;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (adjacent(i, j)) s.edges.push_back({i, j});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!adjacent(i, j)) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!adjacent(i, k) || !adjacent(j, k)) continue;
        if (triple(s.vertices[i].vec(), s.vertices[j].vec(), s.vertices[k].vec()) > 0.0) {
          s.faces.push_back({i, j, k});
        } else {
          s.faces.push_back({i, k, j});
        }
      }
    }
  }
  return s;
}

std::array<SphTriangle, 4> dissect(const SphTriangle& t) {
  const UnitVec3 ab = midpoint(t.a(), t.b());
  const UnitVec3 ac = midpoint(t.a(), t.c());
  const UnitVec3 bc = midpoint(t.b(), t.c());
  return {SphTriangle(t.a(), ab, ac), SphTriangle(ab, t.b(), bc), SphTriangle(t.c(), ac, bc),
          SphTriangle(ab, ac, bc)};
}

std::array<Arc, 9> edge_set(const SphTriangle& t) {
  const UnitVec3 ab = midpoint(t.a(), t.b());
  const UnitVec3 ac = midpoint(t.a(), t.c());
  const UnitVec3 bc = midpoint(t.b(), t.c());
  return {Arc{t.a(), ab}, Arc{ab, t.b()}, Arc{t.b(), bc}, Arc{bc, t.c()}, Arc{t.c(), ac},
          Arc{ac, t.a()}, Arc{ac, bc},    Arc{bc, ab},    Arc{ab, ac}};
}

std::vector<SphTriangle> dissect_depth(const SphTriangle& t, unsigned depth) {
  std::vector<SphTriangle> current{t};
  for (unsigned k = 0; k < depth; ++k) {
    std::vector<SphTriangle> next;
    next.reserve(current.size() * 4);
    for (const auto& tri : current) {
      for (const auto& child : dissect(tri)) next.push_back(child);
    }
    current = std::move(next);
  }
  return current;
}

unsigned point_level(const PointId& id) {
  return std::visit(
      [](const auto& p) -> unsigned {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, SolidVertex>) {
          return 0;
        } else {
          return p.level;
        }
      },
      id);
}

std::vector<TessPoint> level_points(const Solid& solid, unsigned depth) {
  std::vector<TessPoint> out;
  if (depth == 0) {
    out.reserve(solid.vertices.size());
    for (std::size_t v = 0; v < solid.vertices.size(); ++v) out.push_back({SolidVertex{v}, solid.vertices[v]});
    return out;
  }
  const std::size_t n = std::size_t{1} << depth;

  std::vector<std::vector<UnitVec3>> edge_table;
  edge_table.reserve(solid.edges.size());
  for (const auto& e : solid.edges) edge_table.push_back(subdivide_arc(solid.vertices[e[0]], solid.vertices[e[1]], depth));

  std::vector<std::size_t> owner(solid.edges.size(), solid.faces.size());
  for (std::size_t f = 0; f < solid.faces.size(); ++f) {
    const auto& fc = solid.faces[f];
    for (std::size_t t = 0; t < 3; ++t) {
      const std::size_t id = solid.edge_id(fc[t], fc[(t + 1) % 3]);
      owner[id] = std::min(owner[id], f);
    }
  }

  auto directed = [&](VertexIndex from, VertexIndex to) {
    const auto& table = edge_table[solid.edge_id(from, to)];
    return from < to ? table : reversed(table);
  };

  for (std::size_t f = 0; f < solid.faces.size(); ++f) {
    const auto& fc = solid.faces[f];
    std::array<std::size_t, 3> ids{solid.edge_id(fc[0], fc[1]), solid.edge_id(fc[0], fc[2]),
                                   solid.edge_id(fc[1], fc[2])};
    std::sort(ids.begin(), ids.end());
    for (const std::size_t id : ids) {
      if (owner[id] != f) continue;
      const auto& e = solid.edges[id];
      for (std::size_t m = 1; m < n; m += 2) out.push_back({EdgePoint{e[0], e[1], m, depth}, edge_table[id][m]});
    }
    const FaceGrid grid(depth, directed(fc[0], fc[1]), directed(fc[0], fc[2]), directed(fc[1], fc[2]));
    for_each_new_interior(n, depth, [&](std::size_t i, std::size_t j) {
      out.push_back({FaceInterior{f, i, j, depth}, grid(i, j)});
    });
  }
  return out;
}

std::vector<UnitVec3> dissection_points(const SphTriangle& t, unsigned depth) {
  const std::size_t n = std::size_t{1} << depth;
  const auto ab = subdivide_arc(t.a(), t.b(), depth);
  const auto ac = subdivide_arc(t.a(), t.c(), depth);
  const auto bc = subdivide_arc(t.b(), t.c(), depth);
  const FaceGrid grid(depth, ab, ac, bc);

  std::vector<UnitVec3> out{t.a(), t.b(), t.c()};
  out.reserve((n + 1) * (n + 2) / 2);
  for (unsigned k = 1; k <= depth; ++k) {
    const std::size_t s = n >> k;
    for (const auto* edge : {&ab, &ac, &bc}) {
      for (std::size_t m = s; m < n; m += 2 * s) out.push_back((*edge)[m]);
    }
    for_each_new_interior(n, k, [&](std::size_t i, std::size_t j) { out.push_back(grid(i, j)); });
  }
  return out;
}

TessellationStream::TessellationStream(Solid solid) : solid_(std::move(solid)) { load_level(); }

void TessellationStream::load_level() { level_ = level_points(solid_, depth_); }

unsigned TessellationStream::depth() const { return cursor_ < level_.size() ? depth_ : depth_ + 1; }

std::pair<std::size_t, UnitVec3> TessellationStream::next() {
  while (cursor_ >= level_.size()) {
    ++depth_;
    cursor_ = 0;
    load_level();
  }
  const std::size_t index = emitted_++;
  return {index, level_[cursor_++].position};
}

std::vector<UnitVec3> TessellationStream::take(std::size_t n) {
  std::vector<UnitVec3> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(next().second);
  return out;
}

std::vector<UnitVec3> stream_points(SolidKind kind, std::size_t n) {
  TessellationStream s(make_solid(kind));
  return s.take(n);
}

}  // namespace sphtess
