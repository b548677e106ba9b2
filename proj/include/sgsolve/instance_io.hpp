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

#ifndef SGSOLVE_INSTANCE_IO_HPP_
#define SGSOLVE_INSTANCE_IO_HPP_

// Instance files: strict JSON, 1-based target indices.
//
//   {
//     "targets": 2,
//     "payoffs": {"reward": [1, 1], "cost": [0, 0],
//                 "att_reward": [1, 2], "att_cost": [0, 0]},
//     "set_system": {"kind": "uniform_matroid", "k": 1},
//     "metadata": {"name": "g3", "seed": 7, "expected": {"sse": 0.6667}}
//   }
//
// Payoff entries may be numbers or strings holding a rational ("2/3").

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "sgsolve/game.hpp"
#include "sgsolve/set_system.hpp"

namespace sgsolve {

struct InstanceMetadata {
  std::string name;
  std::optional<std::uint64_t> seed;
  // Solver values recorded when the instance was authored, keyed by
  // equilibrium kind name; verify compares against them.
  std::map<std::string, double> expected;
};

struct Instance {
  SecurityGame game;
  InstanceMetadata metadata;
};

// Branch-and-bound budget: SG_NODE_BUDGET when set to a positive integer,
// kDefaultNodeBudget otherwise.
std::uint64_t node_budget_from_env();

// Throws kParseError naming the field path (or the line for JSON syntax
// errors) and validation errors from validate_game.
Instance parse_instance_text(const std::string& text,
                             std::uint64_t node_budget = kDefaultNodeBudget);
Instance parse_instance(const std::filesystem::path& path,
                        std::uint64_t node_budget = kDefaultNodeBudget);

// "3", "-0.25", "2/3".
double parse_rational(const std::string& text);

}  // namespace sgsolve

#endif  // SGSOLVE_INSTANCE_IO_HPP_
