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

#ifndef SGSOLVE_RESULT_IO_HPP_
#define SGSOLVE_RESULT_IO_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sgsolve/equilibria.hpp"

namespace sgsolve {

// Serializable view of an EquilibriumResult. Every real is rounded to 12
// significant digits on construction, so writing and re-reading a file
// reproduces the struct exactly.
struct ResultFile {
  struct Entry {
    std::string strategy;  // coverage bits, "0110"
    double probability = 0.0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  std::string equilibrium;
  double value = 0.0;
  double defender_utility = 0.0;
  double attacker_utility = 0.0;
  std::vector<double> x;
  std::vector<Entry> p;
  std::vector<double> y;
  std::optional<std::size_t> attacked_target;  // 1-based
  std::size_t iterations = 0;
  std::size_t columns = 0;
  std::size_t cuts = 0;
  std::size_t lp_solves = 0;
  double max_duality_gap = 0.0;
  std::optional<double> wall_time_seconds;
  std::optional<std::string> timestamp;

  friend bool operator==(const ResultFile&, const ResultFile&) = default;
};

double round_significant(double v, int digits = 12);

ResultFile to_result_file(const EquilibriumResult& result);

std::string serialize_result(const ResultFile& result);
// Strict: unknown fields raise kParseError.
ResultFile parse_result(const std::string& text);

}  // namespace sgsolve

#endif  // SGSOLVE_RESULT_IO_HPP_
