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

#ifndef SGSOLVE_ERROR_HPP_
#define SGSOLVE_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sgsolve {

enum class ErrorKind {
  kDimensionMismatch,
  kStrictnessViolated,
  kNotZeroSum,
  kEmptySystem,
  kScaleExceeded,
  kInfeasibleFlow,
  kNumericalBreakdown,
  kIterationLimit,
  kNotInHull,
  kUtilityOutOfRange,
  kParseError,
  kInvalidArgument,
  kInternal,
};

std::string_view error_kind_name(ErrorKind kind);

// Numerical failures (as opposed to model errors in the input) map to a
// distinct CLI exit code.
bool is_numerical(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorKind kind() const { return kind_; }
  // Offending target (0-based) for kStrictnessViolated, when known.
  std::optional<std::size_t> index() const { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace sgsolve

#endif  // SGSOLVE_ERROR_HPP_
