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

#ifndef SGSOLVE_REFERENCE_HPP_
#define SGSOLVE_REFERENCE_HPP_

// Explicit-column solvers over a fully listed E. They share no code with the
// column-generation engines beyond the LP core and serve as cross-checks.

#include <cstddef>
#include <optional>
#include <vector>

#include "sgsolve/equilibria.hpp"
#include "sgsolve/game.hpp"
#include "sgsolve/lp.hpp"

namespace sgsolve::reference {

struct MinimaxReference {
  double value = 0.0;
  std::vector<double> x;  // defender marginal
  std::vector<double> y;  // attacker strategy
  double max_duality_gap = 0.0;
};

// Defender side: max u, u <= c_i + (r_i - c_i) x_i, x = sum p_e e over every
// listed e. Attacker side: min v, v >= U^d(e, y) for every listed e. Both
// LPs are solved; `value` is the attacker-side optimum.
MinimaxReference minimax(const SecurityGame& game,
                         const std::vector<PureStrategy>& strategies);

struct SseReference {
  double defender_utility = 0.0;
  std::size_t target = 0;
  std::vector<double> x;
  double max_duality_gap = 0.0;
};

// LP_k with explicit x variables and every listed column, k = 1..n.
SseReference sse(const SecurityGame& game, const std::vector<PureStrategy>& strategies);

struct NeReference {
  double best = 0.0;
  double worst = 0.0;
  double val_bar = 0.0;
  std::vector<double> x_tilde;
  double max_duality_gap = 0.0;
};

// Best and worst gamma . y over the attacker equilibrium set with every
// defender best-response row listed up front.
NeReference ne_extremes(const SecurityGame& game,
                        const std::vector<PureStrategy>& strategies);

// Feasibility of x in the hull of `strategies` (explicit LP).
bool in_hull(std::span<const double> x, const std::vector<PureStrategy>& strategies,
             double tolerance = 1e-9);

}  // namespace sgsolve::reference

#endif  // SGSOLVE_REFERENCE_HPP_
