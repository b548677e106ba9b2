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

#ifndef SGSOLVE_SET_SYSTEM_HPP_
#define SGSOLVE_SET_SYSTEM_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgsolve/game.hpp"

namespace sgsolve {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct OracleCapabilities {
  // All of E can be listed (subject to the size limit passed to enumerate()).
  bool enumerable = true;
  // Every sub-pure strategy is itself a member of E.
  bool subpure_closed = false;
  // The all-zero vector is a member of E.
  bool contains_empty = false;
};

struct OracleAnswer {
  PureStrategy strategy;
  double value = 0.0;  // w . strategy
};

// Defender best response over a set system E of 0/1 vectors:
// argmax_{e in E} w . e. Implementations are exact for arbitrary real
// weights, deterministic, and safe to call concurrently.
class DbrOracle {
 public:
  virtual ~DbrOracle() = default;

  virtual std::size_t dimension() const = 0;
  virtual OracleCapabilities capabilities() const = 0;
  virtual std::string kind() const = 0;

  // Validates w (length, finiteness) and returns the maximizer with its
  // value recomputed as w . e.
  OracleAnswer best_response(std::span<const double> w) const;

  // Lists E without duplicates, or nullopt when |E| would exceed `limit`.
  virtual std::optional<std::vector<PureStrategy>> enumerate(
      std::size_t limit) const = 0;

 protected:
  virtual PureStrategy solve(std::span<const double> w) const = 0;
};

// Subsets of at most k targets. The best response covers the k largest
// positive weights, lowest index first among ties.
class UniformMatroidOracle final : public DbrOracle {
 public:
  UniformMatroidOracle(std::size_t n, std::size_t k);

  std::size_t dimension() const override { return n_; }
  OracleCapabilities capabilities() const override;
  std::string kind() const override { return "uniform_matroid"; }
  std::optional<std::vector<PureStrategy>> enumerate(
      std::size_t limit) const override;

  std::size_t k() const { return k_; }

 protected:
  PureStrategy solve(std::span<const double> w) const override;

 private:
  std::size_t n_;
  std::size_t k_;
};

// Each resource is assigned to at most one of its allowed targets; a target
// is covered when some resource sits on it. Solved as a maximum-weight
// bipartite matching by successive shortest augmenting paths.
class BipartiteOracle final : public DbrOracle {
 public:
  // allowed[j] lists the 0-based targets resource j may cover.
  BipartiteOracle(std::size_t n, std::vector<std::vector<std::size_t>> allowed);

  std::size_t dimension() const override { return n_; }
  OracleCapabilities capabilities() const override;
  std::string kind() const override { return "bipartite"; }
  std::optional<std::vector<PureStrategy>> enumerate(
      std::size_t limit) const override;

  const std::vector<std::vector<std::size_t>>& allowed() const {
    return allowed_;
  }

 protected:
  PureStrategy solve(std::span<const double> w) const override;

 private:
  std::size_t n_;
  std::vector<std::vector<std::size_t>> allowed_;
};

// Each resource picks at most one of its schedules (target subsets); the
// coverage is the union. Exact branch-and-bound, desk scale only.
class CoverageOracle final : public DbrOracle {
 public:
  using Schedule = std::vector<std::size_t>;

  CoverageOracle(std::size_t n, std::vector<std::vector<Schedule>> resources,
                 std::uint64_t node_budget = kDefaultNodeBudget);

  std::size_t dimension() const override { return n_; }
  OracleCapabilities capabilities() const override;
  std::string kind() const override { return "coverage"; }
  std::optional<std::vector<PureStrategy>> enumerate(
      std::size_t limit) const override;

  const std::vector<std::vector<Schedule>>& resources() const {
    return resources_;
  }

 protected:
  PureStrategy solve(std::span<const double> w) const override;

 private:
  std::size_t n_;
  std::vector<std::vector<Schedule>> resources_;
  std::uint64_t node_budget_;
  // reach_[j][i]: target i appears in some schedule of a resource >= j.
  std::vector<std::vector<std::uint8_t>> reach_;
};

// Spatio-temporal patrolling: k patrollers each walk one path through a
// positions x times grid along the allowed moves between consecutive time
// layers. A grid point may carry a target; coverage is the union of visited
// targets.
struct LayeredGraph {
  struct Move {
    std::size_t from;  // position at time t
    std::size_t to;    // position at time t + 1
    std::size_t time;  // t, 0-based
  };
  std::size_t positions = 0;
  std::size_t times = 0;
  // target_at[pos][time]: 0-based target index, if the grid point is one.
  std::vector<std::vector<std::optional<std::size_t>>> target_at;
  std::vector<Move> moves;
};

class LayeredFlowOracle final : public DbrOracle {
 public:
  // Throws kInfeasibleFlow when no source-to-sink path exists.
  LayeredFlowOracle(std::size_t n, LayeredGraph graph, std::size_t k,
                    std::uint64_t node_budget = kDefaultNodeBudget);

  std::size_t dimension() const override { return n_; }
  OracleCapabilities capabilities() const override;
  std::string kind() const override { return "layered_graph"; }
  std::optional<std::vector<PureStrategy>> enumerate(
      std::size_t limit) const override;

  const LayeredGraph& graph() const { return graph_; }
  std::size_t k() const { return k_; }

 protected:
  PureStrategy solve(std::span<const double> w) const override;

 private:
  PureStrategy solve_by_flow(std::span<const double> w) const;
  // Exact dynamic program over multisets of patroller positions; used for
  // signed weights with k >= 2, where a covered target must be charged once
  // and min-cost flow can no longer express that.
  PureStrategy solve_by_joint_dp(std::span<const double> w) const;

  std::size_t n_;
  LayeredGraph graph_;
  std::size_t k_;
  std::uint64_t node_budget_;
  bool contains_empty_ = false;
  // successors_[t][p]: positions reachable at t + 1 from p at t.
  std::vector<std::vector<std::vector<std::size_t>>> successors_;
};

// Passenger screening: each target's passenger is assigned to at most one
// team, and a team assignment consumes one unit of each of its tools.
// Exact branch-and-bound, desk scale only.
class PackingOracle final : public DbrOracle {
 public:
  // teams[t] lists tool indices; capacities[tool] >= 0.
  PackingOracle(std::size_t n, std::vector<std::vector<std::size_t>> teams,
                std::vector<int> capacities,
                std::uint64_t node_budget = kDefaultNodeBudget);

  std::size_t dimension() const override { return n_; }
  OracleCapabilities capabilities() const override;
  std::string kind() const override { return "packing"; }
  std::optional<std::vector<PureStrategy>> enumerate(
      std::size_t limit) const override;

  const std::vector<std::vector<std::size_t>>& teams() const { return teams_; }
  const std::vector<int>& capacities() const { return capacities_; }
  // Largest number of passengers that can be screened simultaneously.
  std::size_t max_assignable() const;

 protected:
  PureStrategy solve(std::span<const double> w) const override;

 private:
  std::size_t n_;
  std::vector<std::vector<std::size_t>> teams_;
  std::vector<int> capacities_;
  std::uint64_t node_budget_;
};

// E listed explicitly. Linear scan, first index wins ties.
class ExplicitOracle final : public DbrOracle {
 public:
  // Throws kEmptySystem for an empty list; rejects non-binary entries,
  // duplicates, and ragged lengths.
  explicit ExplicitOracle(std::vector<PureStrategy> strategies);

  std::size_t dimension() const override { return n_; }
  OracleCapabilities capabilities() const override { return caps_; }
  std::string kind() const override { return "explicit"; }
  std::optional<std::vector<PureStrategy>> enumerate(
      std::size_t limit) const override;

  const std::vector<PureStrategy>& strategies() const { return strategies_; }

 protected:
  PureStrategy solve(std::span<const double> w) const override;

 private:
  std::size_t n_;
  std::vector<PureStrategy> strategies_;
  OracleCapabilities caps_;
};

// Best response over the downward closure of E for signed weights: solve on
// max(w, 0), then drop covered targets with w_i <= 0.
OracleAnswer relaxed_best_response(const DbrOracle& oracle,
                                   std::span<const double> w);

// Dyadic rational p / 2^s obtained by snapping a double to denominator 2^30
// and reducing.
struct DyadicRational {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
};
DyadicRational snap_to_dyadic(double value);
// Largest bit length of any numerator or denominator after snapping.
int bit_complexity(std::span<const double> w);
// 2^-q / (2n) for q = bit_complexity(w).
double regularization_epsilon(std::span<const double> w);

// Best response to w + eps * 1 for w >= 0. The returned strategy is a true
// member of E and optimal for w alone; `value` is reported against w.
OracleAnswer regularized_dbr(const DbrOracle& oracle,
                             std::span<const double> w);

}  // namespace sgsolve

#endif  // SGSOLVE_SET_SYSTEM_HPP_
