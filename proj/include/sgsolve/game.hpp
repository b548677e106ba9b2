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

#ifndef SGSOLVE_GAME_HPP_
#define SGSOLVE_GAME_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sgsolve {

class DbrOracle;

// Tolerance used when validating probability vectors produced by LP solves.
inline constexpr double kProbabilityTolerance = 1e-9;

// A defender pure strategy: the 0/1 coverage vector over targets.
struct PureStrategy {
  std::vector<std::uint8_t> bits;
  // Set when the vector was obtained by dropping targets from a member of E.
  bool is_subpure = false;

  PureStrategy() = default;
  explicit PureStrategy(std::vector<std::uint8_t> b, bool subpure = false);
  static PureStrategy zeros(std::size_t n) {
    return PureStrategy(std::vector<std::uint8_t>(n, 0));
  }
  // Parses "0110".
  static PureStrategy from_string(std::string_view text);

  std::size_t size() const { return bits.size(); }
  bool covers(std::size_t i) const { return bits[i] != 0; }
  std::size_t cardinality() const;
  double dot(std::span<const double> w) const;
  std::string to_string() const;

  // Equality and ordering look at the coverage bits only.
  friend bool operator==(const PureStrategy& a, const PureStrategy& b) {
    return a.bits == b.bits;
  }
  friend bool operator<(const PureStrategy& a, const PureStrategy& b) {
    return a.bits < b.bits;
  }
};

struct PureStrategyHash {
  std::size_t operator()(const PureStrategy& s) const;
};

// Coverage probabilities, 0 <= x_i <= 1.
class Marginal {
 public:
  Marginal() = default;
  // Entries within kProbabilityTolerance of [0,1] are clamped; anything
  // further out is rejected.
  explicit Marginal(std::vector<double> x);

  std::size_t size() const { return x_.size(); }
  double operator[](std::size_t i) const { return x_[i]; }
  std::span<const double> values() const { return x_; }

 private:
  std::vector<double> x_;
};

// Attack probabilities, y_i >= 0 summing to one.
class AttackerMixed {
 public:
  AttackerMixed() = default;
  explicit AttackerMixed(std::vector<double> y);
  static AttackerMixed pure(std::size_t n, std::size_t target);

  std::size_t size() const { return y_.size(); }
  double operator[](std::size_t i) const { return y_[i]; }
  std::span<const double> values() const { return y_; }

 private:
  std::vector<double> y_;
};

// Sparse distribution over defender pure strategies.
class MixedStrategy {
 public:
  using Entry = std::pair<PureStrategy, double>;

  MixedStrategy() = default;
  // Validates nonnegativity, unit mass and distinct support.
  explicit MixedStrategy(std::vector<Entry> support);

  const std::vector<Entry>& support() const { return support_; }
  std::size_t support_size() const { return support_.size(); }
  std::size_t dimension() const;

 private:
  std::vector<Entry> support_;
};

struct Payoffs {
  std::vector<double> reward;      // r: defender, attacked target covered
  std::vector<double> cost;        // c: defender, attacked target uncovered
  std::vector<double> att_reward;  // rho: attacker, uncovered
  std::vector<double> att_cost;    // zeta: attacker, covered
};

// Immutable after construction. Copies share the oracle.
class SecurityGame {
 public:
  std::size_t n() const { return payoffs_.reward.size(); }
  const Payoffs& payoffs() const { return payoffs_; }
  std::span<const double> reward() const { return payoffs_.reward; }
  std::span<const double> cost() const { return payoffs_.cost; }
  std::span<const double> att_reward() const { return payoffs_.att_reward; }
  std::span<const double> att_cost() const { return payoffs_.att_cost; }

  bool has_oracle() const { return oracle_ != nullptr; }
  // Throws kInvalidArgument when the game was built without a set system.
  const DbrOracle& oracle() const;
  const std::shared_ptr<const DbrOracle>& oracle_ptr() const {
    return oracle_;
  }

 private:
  friend SecurityGame validate_game(Payoffs payoffs,
                                    std::shared_ptr<const DbrOracle> oracle);
  SecurityGame(Payoffs payoffs, std::shared_ptr<const DbrOracle> oracle)
      : payoffs_(std::move(payoffs)), oracle_(std::move(oracle)) {}

  Payoffs payoffs_;
  std::shared_ptr<const DbrOracle> oracle_;
};

// Checks equal lengths, n >= 1, oracle dimension, and the strict orderings
// r_i > c_i and rho_i > zeta_i (exact comparisons). A null oracle is allowed
// for payoff-only games.
SecurityGame validate_game(Payoffs payoffs,
                           std::shared_ptr<const DbrOracle> oracle);

bool is_zero_sum(const SecurityGame& game);

// sum_i y_i (r_i x_i + c_i (1 - x_i))
double defender_utility(const SecurityGame& game, std::span<const double> x,
                        std::span<const double> y);
// sum_i y_i (rho_i (1 - x_i) + zeta_i x_i)
double attacker_utility(const SecurityGame& game, std::span<const double> x,
                        std::span<const double> y);

// Per-target payoffs when target i is attacked under coverage x.
double defender_payoff_at(const SecurityGame& game, std::span<const double> x,
                          std::size_t i);
double attacker_payoff_at(const SecurityGame& game, std::span<const double> x,
                          std::size_t i);

Marginal marginal_of(const MixedStrategy& p);

// The zero-sum game with defender payoffs (-zeta, -rho) and the same
// attacker payoffs and set system.
SecurityGame to_zero_sum_companion(const SecurityGame& game);

}  // namespace sgsolve

#endif  // SGSOLVE_GAME_HPP_
