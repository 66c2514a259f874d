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

#include <stdexcept>
#include <string>
#include <string_view>

namespace sphtess {

enum class ErrorCode {
  ZeroVector,
  AntipodalPair,
  DegenerateTriangle,
  OutOfHemisphere,
  DegenerateHull,
  TooFewPoints,
  OriginNotInterior,
  EmptySet,
  IncompleteLevel,
  OutOfRange,
  RootNotBracketed,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::AntipodalPair: return "AntipodalPair";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::OutOfHemisphere: return "OutOfHemisphere";
    case ErrorCode::DegenerateHull: return "DegenerateHull";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::IncompleteLevel: return "IncompleteLevel";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::RootNotBracketed: return "RootNotBracketed";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace sphtess
