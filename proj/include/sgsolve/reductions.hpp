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

#ifndef SGSOLVE_REDUCTIONS_HPP_
#define SGSOLVE_REDUCTIONS_HPP_

// Constructions that go from games back to polytopes: membership in the
// down-closed hull of E through a game value, and the K_n edge game whose
// value has a closed form.

#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "sgsolve/colgen.hpp"
#include "sgsolve/game.hpp"
#include "sgsolve/set_system.hpp"

namespace sgsolve {

inline constexpr double kMembershipTolerance = 1e-7;
// Coordinates below this count as zero in the 1/x_i construction; it is
// also the slack allowed outside [0, 1].
inline constexpr double kZeroCoordinate = 1e-12;
inline constexpr std::size_t kClosureLimit = 1'000'000;

struct MembershipVerdict {
  bool is_member = false;
  // Zero when x was rejected before building a game.
  double game_value = 0.0;
  std::vector<double> reward;
  std::vector<double> cost;
  double max_duality_gap = 0.0;
};

// x is in the hull of E closed downward iff the zero-sum game with
// (c_i, r_i) = (0, 1/x_i), or (1, 2) where x_i = 0, has value >= 1.
// Coordinates outside [0, 1] (beyond kZeroCoordinate of rounding slack)
// give a non-member without solving.
MembershipVerdict membership_check(std::span<const double> x,
                                   std::shared_ptr<const DbrOracle> oracle,
                                   const ColGenConfig& config = {});

// Every vector obtained by zeroing entries of a member of E, deduplicated
// and sorted. Throws kScaleExceeded past kClosureLimit.
std::vector<PureStrategy> downward_closure(const std::vector<PureStrategy>& strategies);

// Feasibility LP: x = sum p_e e over the downward closure, sum p = 1.
bool brute_membership(std::span<const double> x,
                      const std::vector<PureStrategy>& strategies,
                      double tolerance = 1e-9);

struct KnEdgeGame {
  SecurityGame game;
  // Targets in lexicographic order (u < v), 0-based vertices.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  // 1 - C(n-2, k) / C(n, k).
  double closed_form_value = 0.0;
};

// Edges of K_n as targets, one strategy per distinct coverage vector of a
// k-vertex patrol, r = 1, c = 0.
KnEdgeGame build_kn_edge_game(std::size_t n, std::size_t k);

// Marginal of the uniform mixture over k-vertex patrols.
std::vector<double> uniform_patrol_marginal(std::size_t n, std::size_t k);

double binomial(std::size_t n, std::size_t k);

}  // namespace sgsolve

#endif  // SGSOLVE_REDUCTIONS_HPP_
