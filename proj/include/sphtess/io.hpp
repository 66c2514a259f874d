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

#pragma once

// Point list serialization: JSONL, CSV and ASCII PLY.
//
// Coordinates are written with 17 significant digits and read back with
// UnitVec3::adopt, so a write/read cycle reproduces the exact bits.

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sphtess/sphgeom.hpp"

namespace sphtess::io {

enum class PointFormat { jsonl, csv, ply };

std::optional<PointFormat> parse_point_format(std::string_view name);
std::string_view to_string(PointFormat f);

// Format implied by a file name's extension (.jsonl, .csv, .ply).
std::optional<PointFormat> format_from_path(std::string_view path);

void write_points(std::ostream& out, std::span<const UnitVec3> points, PointFormat format);

// Throws InvalidInput on malformed records or zero vectors.
std::vector<UnitVec3> read_points(std::istream& in, PointFormat format);

}  // namespace sphtess::io
