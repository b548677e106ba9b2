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

#include "sgsolve/reference.hpp"

#include <algorithm>
#include <cmath>

#include "sgsolve/error.hpp"

namespace sgsolve::reference {

namespace {

void require_optimal(const LpSolution& s, const char* what) {
  if (!s.optimal()) {
    fail(ErrorKind::kNumericalBreakdown,
         std::string(what) + " reference LP is " + std::string(lp_status_name(s.status)));
  }
}

void check_dimension(const SecurityGame& game, const std::vector<PureStrategy>& e) {
  if (e.empty()) fail(ErrorKind::kEmptySystem, "reference solver needs strategies");
  for (const auto& s : e) {
    if (s.size() != game.n()) {
      fail(ErrorKind::kDimensionMismatch, "strategy length differs from game");
    }
  }
}

}  // namespace

MinimaxReference minimax(const SecurityGame& game,
                         const std::vector<PureStrategy>& strategies) {
  check_dimension(game, strategies);
  const std::size_t n = game.n();
  const std::size_t m = strategies.size();
  MinimaxReference out;

  // Defender: u, x (n), p (m).
  {
    LinearProgram lp(Sense::kMaximize);
    lp.add_column(1.0, {}, Bounds::unbounded());
    for (std::size_t i = 0; i < n; ++i) lp.add_column(0.0);
    for (std::size_t j = 0; j < m; ++j) lp.add_column(0.0);
    const std::size_t width = 1 + n + m;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> row(width, 0.0);
      row[0] = 1.0;
      row[1 + i] = -(game.reward()[i] - game.cost()[i]);
      lp.add_row(row, Relation::kLessEqual, game.cost()[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> row(width, 0.0);
      row[1 + i] = 1.0;
      for (std::size_t j = 0; j < m; ++j) row[1 + n + j] = -(strategies[j].covers(i) ? 1.0 : 0.0);
      lp.add_row(row, Relation::kEqual, 0.0);
    }
    std::vector<double> simplex(width, 0.0);
    for (std::size_t j = 0; j < m; ++j) simplex[1 + n + j] = 1.0;
    lp.add_row(simplex, Relation::kEqual, 1.0);
    const LpSolution s = solve_lp(lp);
    require_optimal(s, "defender minimax");
    out.x.assign(s.x.begin() + 1, s.x.begin() + 1 + n);
    out.max_duality_gap = std::max(out.max_duality_gap, s.duality_gap);
  }
  // Attacker: v, y (n).
  {
    LinearProgram lp(Sense::kMinimize);
    lp.add_column(1.0, {}, Bounds::unbounded());
    for (std::size_t i = 0; i < n; ++i) lp.add_column(0.0);
    for (const auto& e : strategies) {
      std::vector<double> row(n + 1, 0.0);
      row[0] = 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        row[1 + i] = -(e.covers(i) ? game.reward()[i] : game.cost()[i]);
      }
      lp.add_row(row, Relation::kGreaterEqual, 0.0);
    }
    std::vector<double> simplex(n + 1, 1.0);
    simplex[0] = 0.0;
    lp.add_row(simplex, Relation::kEqual, 1.0);
    const LpSolution s = solve_lp(lp);
    require_optimal(s, "attacker minimax");
    out.value = s.objective;
    out.y.assign(s.x.begin() + 1, s.x.end());
    out.max_duality_gap = std::max(out.max_duality_gap, s.duality_gap);
  }
  return out;
}

SseReference sse(const SecurityGame& game, const std::vector<PureStrategy>& strategies) {
  check_dimension(game, strategies);
  const std::size_t n = game.n();
  const std::size_t m = strategies.size();
  std::optional<SseReference> best;
  double gap = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    LinearProgram lp(Sense::kMaximize);
    for (std::size_t i = 0; i < n; ++i) {
      lp.add_column(i == k ? game.reward()[k] - game.cost()[k] : 0.0, {}, {0.0, 1.0});
    }
    for (std::size_t j = 0; j < m; ++j) lp.add_column(0.0);
    const std::size_t width = n + m;
    const double dk = game.att_reward()[k] - game.att_cost()[k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      std::vector<double> row(width, 0.0);
      row[i] = game.att_reward()[i] - game.att_cost()[i];
      row[k] = -dk;
      lp.add_row(row, Relation::kGreaterEqual, game.att_reward()[i] - game.att_reward()[k]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> row(width, 0.0);
      row[i] = 1.0;
      for (std::size_t j = 0; j < m; ++j) row[n + j] = -(strategies[j].covers(i) ? 1.0 : 0.0);
      lp.add_row(row, Relation::kEqual, 0.0);
    }
    std::vector<double> simplex(width, 0.0);
    for (std::size_t j = 0; j < m; ++j) simplex[n + j] = 1.0;
    lp.add_row(simplex, Relation::kEqual, 1.0);
    const LpSolution s = solve_lp(lp);
    if (s.status == LpStatus::kInfeasible) continue;
    require_optimal(s, "strong Stackelberg");
    gap = std::max(gap, s.duality_gap);
    const double utility = s.objective + game.cost()[k];
    if (best && utility <= best->defender_utility + kTieTolerance) continue;
    SseReference r;
    r.defender_utility = utility;
    r.target = k;
    r.x.assign(s.x.begin(), s.x.begin() + n);
    best = r;
  }
  if (!best) fail(ErrorKind::kInternal, "every strong Stackelberg LP is infeasible");
  best->max_duality_gap = gap;
  return *best;
}

NeReference ne_extremes(const SecurityGame& game,
                        const std::vector<PureStrategy>& strategies) {
  check_dimension(game, strategies);
  const std::size_t n = game.n();
  const SecurityGame companion = to_zero_sum_companion(game);
  const MinimaxReference mm = minimax(companion, strategies);
  NeReference out;
  out.val_bar = mm.value;
  out.x_tilde = mm.x;
  out.max_duality_gap = mm.max_duality_gap;

  std::vector<double> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = attacker_payoff_at(game, mm.x, i);
  const double top = *std::max_element(a.begin(), a.end());
  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    scale = std::max({scale, std::abs(game.att_reward()[i]), std::abs(game.att_cost()[i])});
  }
  for (double& v : a) {
    if (v >= top - kTieTolerance * scale) v = top;
  }
  const NeUtilityCoefficients coef = ne_utility_coefficients(game, mm.value);

  for (Sense sense : {Sense::kMaximize, Sense::kMinimize}) {
    LinearProgram lp(sense);
    for (std::size_t i = 0; i < n; ++i) lp.add_column(coef.gamma[i]);
    for (std::size_t k = 0; k < n; ++k) lp.add_row(a, Relation::kGreaterEqual, a[k]);
    lp.add_row(std::vector<double>(n, 1.0), Relation::kEqual, 1.0);
    for (const auto& e : strategies) {
      std::vector<double> row(n);
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = (game.reward()[i] - game.cost()[i]) * (mm.x[i] - (e.covers(i) ? 1.0 : 0.0));
      }
      lp.add_row(row, Relation::kGreaterEqual, 0.0);
    }
    const LpSolution s = solve_lp(lp);
    require_optimal(s, "attacker equilibrium");
    out.max_duality_gap = std::max(out.max_duality_gap, s.duality_gap);
    (sense == Sense::kMaximize ? out.best : out.worst) = s.objective;
  }
  return out;
}

bool in_hull(std::span<const double> x, const std::vector<PureStrategy>& strategies,
             double tolerance) {
  const std::size_t n = x.size();
  const std::size_t m = strategies.size();
  LinearProgram lp(Sense::kMaximize);
  for (std::size_t j = 0; j < m; ++j) lp.add_column(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = strategies[j].covers(i) ? 1.0 : 0.0;
    lp.add_row(row, Relation::kEqual, x[i]);
  }
  lp.add_row(std::vector<double>(m, 1.0), Relation::kEqual, 1.0);
  SolveOptions options;
  options.feasibility_tolerance = tolerance;
  return solve_lp(lp, options).optimal();
}

}  // namespace sgsolve::reference
