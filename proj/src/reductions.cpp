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

#include "sgsolve/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "sgsolve/equilibria.hpp"
#include "sgsolve/error.hpp"
#include "sgsolve/lp.hpp"

namespace sgsolve {

MembershipVerdict membership_check(std::span<const double> x,
                                   std::shared_ptr<const DbrOracle> oracle,
                                   const ColGenConfig& config) {
  if (!oracle) fail(ErrorKind::kInvalidArgument, "membership check needs a set system");
  if (x.size() != oracle->dimension()) {
    fail(ErrorKind::kDimensionMismatch, "point length differs from the set system");
  }
  MembershipVerdict verdict;
  for (double v : x) {
    if (!std::isfinite(v) || v < -kZeroCoordinate || v > 1.0 + kZeroCoordinate) return verdict;
  }
  const std::size_t n = x.size();
  Payoffs payoffs;
  payoffs.reward.resize(n);
  payoffs.cost.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] < kZeroCoordinate) {
      payoffs.cost[i] = 1.0;
      payoffs.reward[i] = 2.0;
    } else {
      payoffs.cost[i] = 0.0;
      payoffs.reward[i] = 1.0 / std::min(x[i], 1.0);
    }
  }
  // zero-sum: the attacker gets the negation
  payoffs.att_reward.resize(n);
  payoffs.att_cost.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    payoffs.att_reward[i] = -payoffs.cost[i];
    payoffs.att_cost[i] = -payoffs.reward[i];
  }
  verdict.reward = payoffs.reward;
  verdict.cost = payoffs.cost;
  const SecurityGame game = validate_game(std::move(payoffs), std::move(oracle));
  const EquilibriumResult solved = solve_minimax(game, config);
  verdict.game_value = solved.value;
  verdict.max_duality_gap = solved.diagnostics.max_duality_gap;
  verdict.is_member = verdict.game_value >= 1.0 - kMembershipTolerance;
  return verdict;
}

std::vector<PureStrategy> downward_closure(const std::vector<PureStrategy>& strategies) {
  std::unordered_set<PureStrategy, PureStrategyHash> seen;
  for (const auto& e : strategies) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e.covers(i)) on.push_back(i);
    }
    if (on.size() >= 63) fail(ErrorKind::kScaleExceeded, "downward closure too large");
    const std::uint64_t subsets = std::uint64_t{1} << on.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      std::vector<std::uint8_t> bits(e.size(), 0);
      for (std::size_t b = 0; b < on.size(); ++b) {
        if (mask >> b & 1U) bits[on[b]] = 1;
      }
      seen.insert(PureStrategy(std::move(bits)));
      if (seen.size() > kClosureLimit) {
        fail(ErrorKind::kScaleExceeded, "downward closure exceeds 10^6 vectors");
      }
    }
  }
  std::vector<PureStrategy> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool brute_membership(std::span<const double> x,
                      const std::vector<PureStrategy>& strategies, double tolerance) {
  for (const auto& e : strategies) {
    if (e.size() != x.size()) fail(ErrorKind::kDimensionMismatch, "strategy length differs");
  }
  for (double v : x) {
    if (!std::isfinite(v) || v < -tolerance || v > 1.0 + tolerance) return false;
  }
  const std::vector<PureStrategy> closed = downward_closure(strategies);
  LinearProgram lp(Sense::kMaximize);
  for (std::size_t j = 0; j < closed.size(); ++j) lp.add_column(0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<double> row(closed.size());
    for (std::size_t j = 0; j < closed.size(); ++j) row[j] = closed[j].covers(i) ? 1.0 : 0.0;
    lp.add_row(row, Relation::kEqual, x[i]);
  }
  lp.add_row(std::vector<double>(closed.size(), 1.0), Relation::kEqual, 1.0);
  SolveOptions options;
  options.feasibility_tolerance = tolerance;
  const LpSolution s = solve_lp(lp, options);
  if (s.status == LpStatus::kOptimal) return true;
  if (s.status == LpStatus::kInfeasible) return false;
  fail(ErrorKind::kNumericalBreakdown, "membership LP did not terminate cleanly");
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double out = 1.0;
  for (std::size_t i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / i;
  return std::round(out);
}

KnEdgeGame build_kn_edge_game(std::size_t n, std::size_t k) {
  if (k < 1 || k >= n) fail(ErrorKind::kInvalidArgument, "edge game needs 1 <= k < n");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  const std::size_t m = edges.size();

  std::vector<PureStrategy> strategies;
  std::vector<std::uint8_t> chosen(n, 0);
  std::fill(chosen.end() - static_cast<std::ptrdiff_t>(k), chosen.end(), 1);
  // prev_permutation from the largest arrangement walks subsets in
  // lexicographic order of their indicator vectors, descending.
  std::reverse(chosen.begin(), chosen.end());
  do {
    std::vector<std::uint8_t> bits(m);
    for (std::size_t t = 0; t < m; ++t) bits[t] = chosen[edges[t].first] || chosen[edges[t].second];
    PureStrategy e(std::move(bits));
    // k = n - 1 patrols all cover every edge
    if (std::find(strategies.begin(), strategies.end(), e) == strategies.end()) {
      strategies.push_back(std::move(e));
    }
  } while (std::prev_permutation(chosen.begin(), chosen.end()));

  Payoffs payoffs{std::vector<double>(m, 1.0), std::vector<double>(m, 0.0),
                  std::vector<double>(m, 0.0), std::vector<double>(m, -1.0)};
  KnEdgeGame out{validate_game(std::move(payoffs),
                               std::make_shared<ExplicitOracle>(std::move(strategies))),
                 std::move(edges), 0.0};
  out.closed_form_value = 1.0 - binomial(n - 2, k) / binomial(n, k);
  return out;
}

std::vector<double> uniform_patrol_marginal(std::size_t n, std::size_t k) {
  if (k < 1 || k >= n) fail(ErrorKind::kInvalidArgument, "edge game needs 1 <= k < n");
  // an edge is missed when both endpoints lie outside the patrol
  const double covered = 1.0 - binomial(n - 2, k) / binomial(n, k);
  return std::vector<double>(n * (n - 1) / 2, covered);
}

}  // namespace sgsolve
