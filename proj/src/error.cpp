// Copyright 2026 The sgsolve Authors
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

#include "sgsolve/error.hpp"

namespace sgsolve {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kStrictnessViolated: return "StrictnessViolated";
    case ErrorKind::kNotZeroSum: return "NotZeroSum";
    case ErrorKind::kEmptySystem: return "EmptySystem";
    case ErrorKind::kScaleExceeded: return "ScaleExceeded";
    case ErrorKind::kInfeasibleFlow: return "InfeasibleFlow";
    case ErrorKind::kNumericalBreakdown: return "NumericalBreakdown";
    case ErrorKind::kIterationLimit: return "IterationLimit";
    case ErrorKind::kNotInHull: return "NotInHull";
    case ErrorKind::kUtilityOutOfRange: return "UtilityOutOfRange";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kInternal: return "Internal";
  }
  return "Unknown";
}

bool is_numerical(ErrorKind kind) {
  return kind == ErrorKind::kNumericalBreakdown ||
         kind == ErrorKind::kIterationLimit || kind == ErrorKind::kInternal;
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> index)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
      kind_(kind),
      index_(index) {}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace sgsolve
