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

#ifndef SGSOLVE_COMMANDS_HPP_
#define SGSOLVE_COMMANDS_HPP_

// The sgsolve subcommands as plain functions returning exit codes:
// 0 success, 1 verification failure, 2 model or usage error, 3 numerical
// failure.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "sgsolve/equilibria.hpp"
#include "sgsolve/error.hpp"

namespace sgsolve {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitModelError = 2;
inline constexpr int kExitNumerical = 3;

int exit_code_for(ErrorKind kind);

// Dispatch by kind; ne-target needs `target_utility`.
EquilibriumResult solve_equilibrium(const SecurityGame& game, EquilibriumKind kind,
                                    std::optional<double> target_utility,
                                    const ColGenConfig& config = {});

struct SolveRequest {
  std::string input;
  std::string equilibrium;
  std::optional<double> target_utility;
  std::optional<double> tolerance;
  std::string output = "-";
  std::string trace;  // JSON-lines pricing trace, if set
  bool timestamp = true;
};
int run_solve(const SolveRequest& request, std::ostream& out, std::ostream& err);

struct VerifyRequest {
  std::string input;
  // Random cases per sampled check; unset uses 500 oracle weights, 200
  // membership points and 100 for the rest.
  std::optional<std::size_t> samples;
  std::uint64_t seed = 20240601;
};
int run_verify(const VerifyRequest& request, std::ostream& out, std::ostream& err);

struct BenchRequest {
  std::string suite;
  std::size_t repeat = 1;
  bool timing = true;
};
int run_bench(const BenchRequest& request, std::ostream& out, std::ostream& err);

struct DbrRequest {
  std::string input;
  std::string weights;  // comma separated
};
int run_dbr(const DbrRequest& request, std::ostream& out, std::ostream& err);

}  // namespace sgsolve

#endif  // SGSOLVE_COMMANDS_HPP_
