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

#include "sgsolve/set_system.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "min_cost_flow.hpp"
#include "sgsolve/error.hpp"

namespace sgsolve {

namespace {

using Bits = std::vector<std::uint8_t>;

void check_target(std::size_t target, std::size_t n, const char* what) {
  if (target >= n) {
    std::ostringstream msg;
    msg << what << " refers to target " << (target + 1) << " but n = " << n;
    fail(ErrorKind::kInvalidArgument, msg.str());
  }
}

// Indices of strictly positive weights, heaviest first, lowest index first
// among equal weights.
std::vector<std::size_t> positive_by_weight(std::span<const double> w) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0.0) idx.push_back(i);
  }
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
  return idx;
}

// Lists all subsets of {0..n-1} of size <= k, or nullopt past `limit`.
std::optional<std::vector<PureStrategy>> subsets_up_to(std::size_t n,
                                                       std::size_t k,
                                                       std::size_t limit) {
  // Count first so oversized systems are rejected before allocation.
  double count = 0.0;
  double binom = 1.0;
  for (std::size_t j = 0; j <= std::min(k, n); ++j) {
    count += binom;
    binom = binom * static_cast<double>(n - j) / static_cast<double>(j + 1);
  }
  if (count > static_cast<double>(limit)) return std::nullopt;

  std::vector<PureStrategy> out;
  Bits bits(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t next,
                                                          std::size_t used) {
    out.emplace_back(bits);
    if (used == k) return;
    for (std::size_t i = next; i < n; ++i) {
      bits[i] = 1;
      rec(i + 1, used + 1);
      bits[i] = 0;
    }
  };
  rec(0, 0);
  return out;
}

// Closes `family` under union with one member of each option list in turn
// (choosing no option is always allowed). Returns nullopt past `limit`.
std::optional<std::set<Bits>> union_closure(
    std::size_t n, const std::vector<std::vector<Bits>>& option_lists,
    std::size_t limit) {
  std::set<Bits> family{Bits(n, 0)};
  for (const auto& options : option_lists) {
    std::set<Bits> next = family;
    for (const Bits& base : family) {
      for (const Bits& option : options) {
        Bits merged = base;
        for (std::size_t i = 0; i < n; ++i) merged[i] |= option[i];
        next.insert(std::move(merged));
        if (next.size() > limit) return std::nullopt;
      }
    }
    family = std::move(next);
  }
  return family;
}

std::vector<PureStrategy> to_strategies(const std::set<Bits>& family) {
  std::vector<PureStrategy> out;
  out.reserve(family.size());
  for (const Bits& b : family) out.emplace_back(b);
  return out;
}

Bits indicator(std::size_t n, const std::vector<std::size_t>& members) {
  Bits b(n, 0);
  for (std::size_t i : members) b[i] = 1;
  return b;
}

[[noreturn]] void budget_exceeded(const char* what, std::uint64_t budget) {
  std::ostringstream msg;
  msg << what << " search exceeded the node budget of " << budget;
  fail(ErrorKind::kScaleExceeded, msg.str());
}

}  // namespace

OracleAnswer DbrOracle::best_response(std::span<const double> w) const {
  if (w.size() != dimension()) {
    std::ostringstream msg;
    msg << "weight vector has length " << w.size() << ", expected "
        << dimension();
    fail(ErrorKind::kDimensionMismatch, msg.str());
  }
  for (double v : w) {
    if (!std::isfinite(v)) fail(ErrorKind::kInvalidArgument, "weights must be finite");
  }
  OracleAnswer answer;
  answer.strategy = solve(w);
  answer.value = answer.strategy.dot(w);
  return answer;
}

// ---------------------------------------------------------------------------
// Uniform matroid

UniformMatroidOracle::UniformMatroidOracle(std::size_t n, std::size_t k)
    : n_(n), k_(k) {
  if (k > n) fail(ErrorKind::kInvalidArgument, "uniform matroid needs k <= n");
}

OracleCapabilities UniformMatroidOracle::capabilities() const {
  return {.enumerable = true, .subpure_closed = true, .contains_empty = true};
}

PureStrategy UniformMatroidOracle::solve(std::span<const double> w) const {
  Bits bits(n_, 0);
  auto order = positive_by_weight(w);
  for (std::size_t j = 0; j < order.size() && j < k_; ++j) bits[order[j]] = 1;
  return PureStrategy(std::move(bits));
}

std::optional<std::vector<PureStrategy>> UniformMatroidOracle::enumerate(
    std::size_t limit) const {
  return subsets_up_to(n_, k_, limit);
}

// ---------------------------------------------------------------------------
// Bipartite matching

BipartiteOracle::BipartiteOracle(std::size_t n,
                                 std::vector<std::vector<std::size_t>> allowed)
    : n_(n), allowed_(std::move(allowed)) {
  for (const auto& targets : allowed_) {
    for (std::size_t t : targets) check_target(t, n_, "bipartite resource");
  }
}

OracleCapabilities BipartiteOracle::capabilities() const {
  return {.enumerable = true, .subpure_closed = true, .contains_empty = true};
}

PureStrategy BipartiteOracle::solve(std::span<const double> w) const {
  const std::size_t resources = allowed_.size();
  const std::size_t source = 0;
  const std::size_t sink = 1 + resources + n_;
  internal::MinCostFlow flow(sink + 1);
  for (std::size_t j = 0; j < resources; ++j) {
    flow.add_arc(source, 1 + j, 1, 0.0);
    for (std::size_t t : allowed_[j]) {
      if (w[t] > 0.0) flow.add_arc(1 + j, 1 + resources + t, 1, 0.0);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> target_arcs(n_);
  for (std::size_t t = 0; t < n_; ++t) {
    target_arcs[t] = flow.add_arc(1 + resources + t, sink, 1, -w[t]);
  }
  flow.run(source, sink, static_cast<int>(resources), /*only_improving=*/true);
  Bits bits(n_, 0);
  for (std::size_t t = 0; t < n_; ++t) {
    if (w[t] > 0.0 && flow.flow_on(target_arcs[t]) > 0) bits[t] = 1;
  }
  return PureStrategy(std::move(bits));
}

std::optional<std::vector<PureStrategy>> BipartiteOracle::enumerate(
    std::size_t limit) const {
  std::vector<std::vector<Bits>> options;
  for (const auto& targets : allowed_) {
    std::vector<Bits> choice;
    for (std::size_t t : targets) choice.push_back(indicator(n_, {t}));
    options.push_back(std::move(choice));
  }
  auto family = union_closure(n_, options, limit);
  if (!family) return std::nullopt;
  return to_strategies(*family);
}

// ---------------------------------------------------------------------------
// Maximum coverage

CoverageOracle::CoverageOracle(std::size_t n,
                               std::vector<std::vector<Schedule>> resources,
                               std::uint64_t node_budget)
    : n_(n), resources_(std::move(resources)), node_budget_(node_budget) {
  for (const auto& schedules : resources_) {
    for (const auto& schedule : schedules) {
      for (std::size_t t : schedule) check_target(t, n_, "coverage schedule");
    }
  }
  reach_.assign(resources_.size() + 1, Bits(n_, 0));
  for (std::size_t j = resources_.size(); j-- > 0;) {
    reach_[j] = reach_[j + 1];
    for (const auto& schedule : resources_[j]) {
      for (std::size_t t : schedule) reach_[j][t] = 1;
    }
  }
}

OracleCapabilities CoverageOracle::capabilities() const {
  return {.enumerable = true, .subpure_closed = false, .contains_empty = true};
}

PureStrategy CoverageOracle::solve(std::span<const double> w) const {
  const std::size_t resources = resources_.size();
  std::vector<int> cover_count(n_, 0);
  std::vector<int> choice(resources, -1);
  std::vector<int> best_choice(resources, -1);
  double best = 0.0;  // every resource idle
  double current = 0.0;
  std::uint64_t nodes = 0;

  std::function<void(std::size_t)> branch = [&](std::size_t j) {
    if (++nodes > node_budget_) budget_exceeded("coverage", node_budget_);
    if (j == resources) {
      if (current > best) {
        best = current;
        best_choice = choice;
      }
      return;
    }
    double bound = current;
    for (std::size_t i = 0; i < n_; ++i) {
      if (cover_count[i] == 0 && reach_[j][i] && w[i] > 0.0) bound += w[i];
    }
    if (bound <= best) return;
    const auto& schedules = resources_[j];
    for (std::size_t s = 0; s < schedules.size(); ++s) {
      const double saved = current;
      for (std::size_t t : schedules[s]) {
        if (cover_count[t]++ == 0) current += w[t];
      }
      choice[j] = static_cast<int>(s);
      branch(j + 1);
      choice[j] = -1;
      for (std::size_t t : schedules[s]) --cover_count[t];
      current = saved;
    }
    branch(j + 1);
  };
  branch(0);

  Bits bits(n_, 0);
  for (std::size_t j = 0; j < resources; ++j) {
    if (best_choice[j] < 0) continue;
    for (std::size_t t : resources_[j][best_choice[j]]) bits[t] = 1;
  }
  return PureStrategy(std::move(bits));
}

std::optional<std::vector<PureStrategy>> CoverageOracle::enumerate(
    std::size_t limit) const {
  std::vector<std::vector<Bits>> options;
  for (const auto& schedules : resources_) {
    std::vector<Bits> choice;
    for (const auto& schedule : schedules) choice.push_back(indicator(n_, schedule));
    options.push_back(std::move(choice));
  }
  auto family = union_closure(n_, options, limit);
  if (!family) return std::nullopt;
  return to_strategies(*family);
}

// ---------------------------------------------------------------------------
// Layered graph patrolling

LayeredFlowOracle::LayeredFlowOracle(std::size_t n, LayeredGraph graph,
                                     std::size_t k, std::uint64_t node_budget)
    : n_(n), graph_(std::move(graph)), k_(k), node_budget_(node_budget) {
  const std::size_t P = graph_.positions;
  const std::size_t T = graph_.times;
  if (P == 0 || T == 0) fail(ErrorKind::kInvalidArgument, "empty patrol grid");
  if (k_ == 0) fail(ErrorKind::kInvalidArgument, "layered graph needs k >= 1");
  if (graph_.target_at.empty()) {
    graph_.target_at.assign(P, std::vector<std::optional<std::size_t>>(T));
  }
  if (graph_.target_at.size() != P) {
    fail(ErrorKind::kDimensionMismatch, "target grid has wrong position count");
  }
  std::vector<std::uint8_t> seen(n_, 0);
  for (const auto& row : graph_.target_at) {
    if (row.size() != T) {
      fail(ErrorKind::kDimensionMismatch, "target grid has wrong time count");
    }
    for (const auto& target : row) {
      if (!target) continue;
      check_target(*target, n_, "layered grid");
      if (seen[*target]++) {
        fail(ErrorKind::kInvalidArgument, "target placed on two grid points");
      }
    }
  }
  successors_.assign(T, std::vector<std::vector<std::size_t>>(P));
  for (const auto& move : graph_.moves) {
    if (move.from >= P || move.to >= P || move.time + 1 >= T) {
      fail(ErrorKind::kInvalidArgument, "move leaves the patrol grid");
    }
    auto& succ = successors_[move.time][move.from];
    if (std::find(succ.begin(), succ.end(), move.to) == succ.end()) {
      succ.push_back(move.to);
    }
  }
  for (auto& layer : successors_) {
    for (auto& succ : layer) std::sort(succ.begin(), succ.end());
  }
  // Some position at the last layer must be reachable from the first.
  std::vector<std::uint8_t> reach(P, 1);
  for (std::size_t t = 0; t + 1 < T; ++t) {
    std::vector<std::uint8_t> next(P, 0);
    for (std::size_t p = 0; p < P; ++p) {
      if (!reach[p]) continue;
      for (std::size_t q : successors_[t][p]) next[q] = 1;
    }
    reach = std::move(next);
  }
  if (std::none_of(reach.begin(), reach.end(), [](auto v) { return v != 0; })) {
    fail(ErrorKind::kInfeasibleFlow,
         "no patrol path crosses every time layer");
  }
  // Same sweep restricted to grid points without targets.
  std::vector<std::uint8_t> clear(P, 0);
  for (std::size_t p = 0; p < P; ++p) clear[p] = !graph_.target_at[p][0];
  for (std::size_t t = 0; t + 1 < T; ++t) {
    std::vector<std::uint8_t> next(P, 0);
    for (std::size_t p = 0; p < P; ++p) {
      if (!clear[p]) continue;
      for (std::size_t q : successors_[t][p]) next[q] = !graph_.target_at[q][t + 1];
    }
    clear = std::move(next);
  }
  contains_empty_ =
      std::any_of(clear.begin(), clear.end(), [](auto v) { return v != 0; });
}

OracleCapabilities LayeredFlowOracle::capabilities() const {
  return {.enumerable = true, .subpure_closed = false,
          .contains_empty = contains_empty_};
}

PureStrategy LayeredFlowOracle::solve(std::span<const double> w) const {
  const bool nonnegative =
      std::all_of(w.begin(), w.end(), [](double v) { return v >= 0.0; });
  if (k_ == 1 || nonnegative) return solve_by_flow(w);
  return solve_by_joint_dp(w);
}

PureStrategy LayeredFlowOracle::solve_by_flow(std::span<const double> w) const {
  const std::size_t P = graph_.positions;
  const std::size_t T = graph_.times;
  const int k = static_cast<int>(k_);
  auto in_node = [&](std::size_t p, std::size_t t) { return 2 * (t * P + p); };
  const std::size_t source = 2 * P * T;
  const std::size_t sink = source + 1;
  internal::MinCostFlow flow(sink + 1);

  using Handle = std::pair<std::size_t, std::size_t>;
  std::vector<std::vector<Handle>> target_arcs(n_);
  for (std::size_t t = 0; t < T; ++t) {
    for (std::size_t p = 0; p < P; ++p) {
      const std::size_t in = in_node(p, t);
      const auto& target = graph_.target_at[p][t];
      if (target) {
        // First visit collects the weight; further visits are free.
        target_arcs[*target].push_back(flow.add_arc(in, in + 1, 1, -w[*target]));
        if (k > 1) target_arcs[*target].push_back(flow.add_arc(in, in + 1, k - 1, 0.0));
      } else {
        flow.add_arc(in, in + 1, k, 0.0);
      }
      if (t == 0) flow.add_arc(source, in, k, 0.0);
      if (t + 1 == T) flow.add_arc(in + 1, sink, k, 0.0);
      if (t + 1 < T) {
        for (std::size_t q : successors_[t][p]) {
          flow.add_arc(in + 1, in_node(q, t + 1), k, 0.0);
        }
      }
    }
  }
  const auto result = flow.run(source, sink, k, /*only_improving=*/false);
  if (result.flow < k) {
    fail(ErrorKind::kInfeasibleFlow, "fewer than k patrol paths available");
  }
  Bits bits(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (const Handle& h : target_arcs[i]) {
      if (flow.flow_on(h) > 0) bits[i] = 1;
    }
  }
  return PureStrategy(std::move(bits));
}

PureStrategy LayeredFlowOracle::solve_by_joint_dp(
    std::span<const double> w) const {
  const std::size_t P = graph_.positions;
  const std::size_t T = graph_.times;

  // Positions lying on at least one full path.
  std::vector<Bits> alive(T, Bits(P, 0));
  {
    std::vector<Bits> fwd(T, Bits(P, 0)), bwd(T, Bits(P, 0));
    fwd[0].assign(P, 1);
    for (std::size_t t = 0; t + 1 < T; ++t) {
      for (std::size_t p = 0; p < P; ++p) {
        if (!fwd[t][p]) continue;
        for (std::size_t q : successors_[t][p]) fwd[t + 1][q] = 1;
      }
    }
    bwd[T - 1].assign(P, 1);
    for (std::size_t t = T - 1; t-- > 0;) {
      for (std::size_t p = 0; p < P; ++p) {
        for (std::size_t q : successors_[t][p]) {
          if (bwd[t + 1][q]) bwd[t][p] = 1;
        }
      }
    }
    for (std::size_t t = 0; t < T; ++t) {
      for (std::size_t p = 0; p < P; ++p) alive[t][p] = fwd[t][p] && bwd[t][p];
    }
  }

  using State = std::vector<std::size_t>;  // sorted patroller positions
  auto layer_gain = [&](const State& s, std::size_t t) {
    double gain = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j > 0 && s[j] == s[j - 1]) continue;
      const auto& target = graph_.target_at[s[j]][t];
      if (target) gain += w[*target];
    }
    return gain;
  };
  struct Cell {
    double value;
    State parent;
  };
  std::vector<std::map<State, Cell>> layers(T);
  std::uint64_t work = 0;

  // Multisets of size k over the alive positions of layer 0.
  {
    std::vector<std::size_t> pos;
    for (std::size_t p = 0; p < P; ++p) {
      if (alive[0][p]) pos.push_back(p);
    }
    State s;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (++work > node_budget_) budget_exceeded("layered graph", node_budget_);
      if (s.size() == k_) {
        layers[0].emplace(s, Cell{layer_gain(s, 0), {}});
        return;
      }
      for (std::size_t j = from; j < pos.size(); ++j) {
        s.push_back(pos[j]);
        rec(j);
        s.pop_back();
      }
    };
    rec(0);
  }
  for (std::size_t t = 0; t + 1 < T; ++t) {
    for (const auto& [state, cell] : layers[t]) {
      State next(k_);
      std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (++work > node_budget_) budget_exceeded("layered graph", node_budget_);
        if (j == k_) {
          State key = next;
          std::sort(key.begin(), key.end());
          const double value = cell.value + layer_gain(key, t + 1);
          auto it = layers[t + 1].find(key);
          if (it == layers[t + 1].end()) {
            layers[t + 1].emplace(std::move(key), Cell{value, state});
          } else if (value > it->second.value) {
            it->second = Cell{value, state};
          }
          return;
        }
        for (std::size_t q : successors_[t][state[j]]) {
          if (!alive[t + 1][q]) continue;
          next[j] = q;
          rec(j + 1);
        }
      };
      rec(0);
    }
  }
  const auto& last = layers[T - 1];
  if (last.empty()) fail(ErrorKind::kInfeasibleFlow, "no patrol path available");
  auto best = last.begin();
  for (auto it = last.begin(); it != last.end(); ++it) {
    if (it->second.value > best->second.value) best = it;
  }
  Bits bits(n_, 0);
  State state = best->first;
  for (std::size_t t = T; t-- > 0;) {
    for (std::size_t p : state) {
      const auto& target = graph_.target_at[p][t];
      if (target) bits[*target] = 1;
    }
    if (t > 0) state = layers[t].at(state).parent;
  }
  return PureStrategy(std::move(bits));
}

std::optional<std::vector<PureStrategy>> LayeredFlowOracle::enumerate(
    std::size_t limit) const {
  const std::size_t P = graph_.positions;
  const std::size_t T = graph_.times;
  std::set<Bits> paths;
  Bits bits(n_, 0);
  std::uint64_t work = 0;
  bool overflow = false;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t p,
                                                           std::size_t t) {
    if (overflow) return;
    if (++work > node_budget_) {
      overflow = true;
      return;
    }
    const auto& target = graph_.target_at[p][t];
    const bool fresh = target && !bits[*target];
    if (fresh) bits[*target] = 1;
    if (t + 1 == T) {
      paths.insert(bits);
      if (paths.size() > limit) overflow = true;
    } else {
      for (std::size_t q : successors_[t][p]) walk(q, t + 1);
    }
    if (fresh) bits[*target] = 0;
  };
  for (std::size_t p = 0; p < P; ++p) walk(p, 0);
  if (overflow) return std::nullopt;

  const std::vector<Bits> single(paths.begin(), paths.end());
  std::set<Bits> family(paths.begin(), paths.end());
  for (std::size_t j = 1; j < k_; ++j) {
    std::set<Bits> next;
    for (const Bits& base : family) {
      for (const Bits& path : single) {
        Bits merged = base;
        for (std::size_t i = 0; i < n_; ++i) merged[i] |= path[i];
        next.insert(std::move(merged));
        if (next.size() > limit) return std::nullopt;
      }
    }
    family = std::move(next);
  }
  return to_strategies(family);
}

// ---------------------------------------------------------------------------
// Screening (packing)

PackingOracle::PackingOracle(std::size_t n,
                             std::vector<std::vector<std::size_t>> teams,
                             std::vector<int> capacities,
                             std::uint64_t node_budget)
    : n_(n),
      teams_(std::move(teams)),
      capacities_(std::move(capacities)),
      node_budget_(node_budget) {
  for (int cap : capacities_) {
    if (cap < 0) fail(ErrorKind::kInvalidArgument, "tool capacity is negative");
  }
  for (const auto& team : teams_) {
    for (std::size_t tool : team) {
      if (tool >= capacities_.size()) {
        fail(ErrorKind::kInvalidArgument, "team uses an unknown tool");
      }
    }
  }
}

OracleCapabilities PackingOracle::capabilities() const {
  return {.enumerable = true, .subpure_closed = true, .contains_empty = true};
}

std::size_t PackingOracle::max_assignable() const {
  std::vector<int> residual = capacities_;
  std::size_t best = 0;
  std::uint64_t nodes = 0;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t team,
                                                          std::size_t used) {
    if (++nodes > node_budget_) budget_exceeded("packing", node_budget_);
    best = std::max(best, used);
    if (team == teams_.size() || best >= n_) return;
    int room = static_cast<int>(n_ - used);
    for (std::size_t tool : teams_[team]) room = std::min(room, residual[tool]);
    for (int a = room; a >= 0; --a) {
      for (std::size_t tool : teams_[team]) residual[tool] -= a;
      rec(team + 1, used + static_cast<std::size_t>(a));
      for (std::size_t tool : teams_[team]) residual[tool] += a;
      if (best >= n_) return;
    }
  };
  rec(0, 0);
  return std::min(best, n_);
}

PureStrategy PackingOracle::solve(std::span<const double> w) const {
  const auto order = positive_by_weight(w);
  const std::size_t m = order.size();
  std::vector<double> prefix(m + 1, 0.0);
  for (std::size_t j = 0; j < m; ++j) prefix[j + 1] = prefix[j] + w[order[j]];

  std::vector<int> residual = capacities_;
  std::vector<std::uint8_t> assigned(m, 0), best_assigned(m, 0);
  double current = 0.0;
  double best = 0.0;
  std::uint64_t nodes = 0;

  // Upper bound on further assignments: each team is limited by its
  // scarcest tool. Teams without tools are unlimited.
  auto room = [&]() -> std::size_t {
    std::size_t total = 0;
    for (const auto& team : teams_) {
      if (team.empty()) return std::numeric_limits<std::size_t>::max();
      int r = std::numeric_limits<int>::max();
      for (std::size_t tool : team) r = std::min(r, residual[tool]);
      total += static_cast<std::size_t>(std::max(r, 0));
    }
    return total;
  };

  // Passengers are interchangeable for the capacity constraints, so team
  // indices are taken non-decreasing along the weight order.
  std::function<void(std::size_t, std::size_t)> branch = [&](std::size_t j,
                                                             std::size_t min_team) {
    if (++nodes > node_budget_) budget_exceeded("packing", node_budget_);
    if (current > best) {
      best = current;
      best_assigned = assigned;
    }
    if (j == m) return;
    const std::size_t extra = std::min(room(), m - j);
    const double bound = current + (prefix[j + extra] - prefix[j]);
    if (bound <= best) return;
    for (std::size_t t = min_team; t < teams_.size(); ++t) {
      const auto& team = teams_[t];
      if (std::any_of(team.begin(), team.end(),
                      [&](std::size_t tool) { return residual[tool] < 1; })) {
        continue;
      }
      for (std::size_t tool : team) --residual[tool];
      const double saved = current;
      current += w[order[j]];
      assigned[j] = 1;
      branch(j + 1, t);
      assigned[j] = 0;
      current = saved;
      for (std::size_t tool : team) ++residual[tool];
    }
    branch(j + 1, min_team);
  };
  branch(0, 0);

  Bits bits(n_, 0);
  for (std::size_t j = 0; j < m; ++j) {
    if (best_assigned[j]) bits[order[j]] = 1;
  }
  return PureStrategy(std::move(bits));
}

std::optional<std::vector<PureStrategy>> PackingOracle::enumerate(
    std::size_t limit) const {
  return subsets_up_to(n_, max_assignable(), limit);
}

// ---------------------------------------------------------------------------
// Explicit list

ExplicitOracle::ExplicitOracle(std::vector<PureStrategy> strategies)
    : strategies_(std::move(strategies)) {
  if (strategies_.empty()) fail(ErrorKind::kEmptySystem, "explicit system is empty");
  n_ = strategies_.front().size();
  if (n_ == 0) fail(ErrorKind::kDimensionMismatch, "strategies have length 0");
  std::unordered_set<PureStrategy, PureStrategyHash> members;
  for (auto& s : strategies_) {
    if (s.size() != n_) {
      fail(ErrorKind::kDimensionMismatch, "explicit strategies differ in length");
    }
    s.is_subpure = false;
    if (!members.insert(s).second) {
      fail(ErrorKind::kInvalidArgument,
           "explicit strategy " + s.to_string() + " listed twice");
    }
  }
  caps_.enumerable = true;
  caps_.contains_empty = members.count(PureStrategy::zeros(n_)) > 0;
  caps_.subpure_closed = true;
  for (const auto& s : strategies_) {
    for (std::size_t i = 0; i < n_ && caps_.subpure_closed; ++i) {
      if (!s.covers(i)) continue;
      PureStrategy smaller = s;
      smaller.bits[i] = 0;
      if (!members.count(smaller)) caps_.subpure_closed = false;
    }
  }
}

PureStrategy ExplicitOracle::solve(std::span<const double> w) const {
  std::size_t best = 0;
  double best_value = strategies_[0].dot(w);
  for (std::size_t j = 1; j < strategies_.size(); ++j) {
    const double v = strategies_[j].dot(w);
    if (v > best_value) {
      best = j;
      best_value = v;
    }
  }
  return strategies_[best];
}

std::optional<std::vector<PureStrategy>> ExplicitOracle::enumerate(
    std::size_t limit) const {
  if (strategies_.size() > limit) return std::nullopt;
  return strategies_;
}

// ---------------------------------------------------------------------------
// Relaxed and regularized best responses

OracleAnswer relaxed_best_response(const DbrOracle& oracle,
                                   std::span<const double> w) {
  std::vector<double> positive(w.begin(), w.end());
  for (double& v : positive) v = std::max(v, 0.0);
  OracleAnswer answer = oracle.best_response(positive);
  bool dropped = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (answer.strategy.bits[i] && w[i] <= 0.0) {
      answer.strategy.bits[i] = 0;
      dropped = true;
    }
  }
  answer.strategy.is_subpure = dropped;
  answer.value = answer.strategy.dot(w);
  return answer;
}

DyadicRational snap_to_dyadic(double value) {
  constexpr int kDenominatorBits = 30;
  const double scaled = std::ldexp(value, kDenominatorBits);
  if (!std::isfinite(scaled) || std::abs(scaled) > 9.0e18) {
    fail(ErrorKind::kInvalidArgument, "weight too large to snap to a rational");
  }
  DyadicRational r{std::llround(scaled), std::int64_t{1} << kDenominatorBits};
  if (r.numerator == 0) return {0, 1};
  while (r.denominator > 1 && r.numerator % 2 == 0) {
    r.numerator /= 2;
    r.denominator /= 2;
  }
  return r;
}

int bit_complexity(std::span<const double> w) {
  int q = 1;
  for (double v : w) {
    const DyadicRational r = snap_to_dyadic(v);
    const auto num = static_cast<std::uint64_t>(r.numerator < 0 ? -r.numerator
                                                                : r.numerator);
    q = std::max(q, static_cast<int>(std::bit_width(num)));
    q = std::max(q, static_cast<int>(
                        std::bit_width(static_cast<std::uint64_t>(r.denominator))));
  }
  return q;
}

double regularization_epsilon(std::span<const double> w) {
  return std::ldexp(1.0, -bit_complexity(w)) / (2.0 * static_cast<double>(w.size()));
}

OracleAnswer regularized_dbr(const DbrOracle& oracle, std::span<const double> w) {
  if (w.size() != oracle.dimension()) {
    fail(ErrorKind::kDimensionMismatch, "weight length differs from oracle");
  }
  std::vector<double> shifted(w.size());
  const double eps = regularization_epsilon(w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0.0) {
      fail(ErrorKind::kInvalidArgument, "regularized DBR needs w >= 0");
    }
    const DyadicRational r = snap_to_dyadic(w[i]);
    shifted[i] = static_cast<double>(r.numerator) /
                     static_cast<double>(r.denominator) + eps;
  }
  OracleAnswer answer = oracle.best_response(shifted);
  answer.value = answer.strategy.dot(w);
  return answer;
}

}  // namespace sgsolve
