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

#include "sgsolve/game.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "sgsolve/error.hpp"
#include "sgsolve/set_system.hpp"

namespace sgsolve {

PureStrategy::PureStrategy(std::vector<std::uint8_t> b, bool subpure)
    : bits(std::move(b)), is_subpure(subpure) {
  for (auto v : bits) {
    if (v > 1) fail(ErrorKind::kInvalidArgument, "coverage entries must be 0/1");
  }
}

PureStrategy PureStrategy::from_string(std::string_view text) {
  std::vector<std::uint8_t> b;
  b.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      fail(ErrorKind::kParseError,
           "strategy bits must be '0' or '1', got '" + std::string(text) + "'");
    }
    b.push_back(ch == '1' ? 1 : 0);
  }
  return PureStrategy(std::move(b));
}

std::size_t PureStrategy::cardinality() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
}

double PureStrategy::dot(std::span<const double> w) const {
  if (w.size() != bits.size()) {
    fail(ErrorKind::kDimensionMismatch, "weight length differs from strategy");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) total += w[i];
  }
  return total;
}

std::string PureStrategy::to_string() const {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) s[i] = '1';
  }
  return s;
}

std::size_t PureStrategyHash::operator()(const PureStrategy& s) const {
  std::size_t h = 1469598103934665603ull;
  for (auto v : s.bits) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h ^ s.bits.size();
}

Marginal::Marginal(std::vector<double> x) : x_(std::move(x)) {
  for (double& v : x_) {
    if (!std::isfinite(v) || v < -kProbabilityTolerance ||
        v > 1.0 + kProbabilityTolerance) {
      fail(ErrorKind::kInvalidArgument, "marginal entry outside [0,1]");
    }
    v = std::clamp(v, 0.0, 1.0);
  }
}

AttackerMixed::AttackerMixed(std::vector<double> y) : y_(std::move(y)) {
  double total = 0.0;
  for (double& v : y_) {
    if (!std::isfinite(v) || v < -kProbabilityTolerance) {
      fail(ErrorKind::kInvalidArgument, "attack probability is negative");
    }
    v = std::max(v, 0.0);
    total += v;
  }
  if (std::abs(total - 1.0) > kProbabilityTolerance) {
    fail(ErrorKind::kInvalidArgument, "attack probabilities do not sum to 1");
  }
}

AttackerMixed AttackerMixed::pure(std::size_t n, std::size_t target) {
  std::vector<double> y(n, 0.0);
  y.at(target) = 1.0;
  return AttackerMixed(std::move(y));
}

MixedStrategy::MixedStrategy(std::vector<Entry> support)
    : support_(std::move(support)) {
  double total = 0.0;
  std::unordered_set<PureStrategy, PureStrategyHash> seen;
  for (auto& [strategy, prob] : support_) {
    if (!std::isfinite(prob) || prob < -kProbabilityTolerance) {
      fail(ErrorKind::kInvalidArgument, "mixed strategy probability < 0");
    }
    prob = std::max(prob, 0.0);
    total += prob;
    if (!support_.empty() && strategy.size() != support_.front().first.size()) {
      fail(ErrorKind::kDimensionMismatch, "mixed strategy support is ragged");
    }
    if (!seen.insert(strategy).second) {
      fail(ErrorKind::kInvalidArgument,
           "duplicate support strategy " + strategy.to_string());
    }
  }
  if (std::abs(total - 1.0) > kProbabilityTolerance) {
    fail(ErrorKind::kInvalidArgument, "mixed strategy does not sum to 1");
  }
}

std::size_t MixedStrategy::dimension() const {
  return support_.empty() ? 0 : support_.front().first.size();
}

const DbrOracle& SecurityGame::oracle() const {
  if (!oracle_) fail(ErrorKind::kInvalidArgument, "game has no set system");
  return *oracle_;
}

SecurityGame validate_game(Payoffs payoffs,
                           std::shared_ptr<const DbrOracle> oracle) {
  const std::size_t n = payoffs.reward.size();
  if (n == 0) fail(ErrorKind::kDimensionMismatch, "game needs n >= 1 targets");
  if (payoffs.cost.size() != n || payoffs.att_reward.size() != n ||
      payoffs.att_cost.size() != n) {
    fail(ErrorKind::kDimensionMismatch, "payoff vectors differ in length");
  }
  if (oracle && oracle->dimension() != n) {
    std::ostringstream msg;
    msg << "payoffs describe " << n << " targets but the set system has "
        << oracle->dimension();
    fail(ErrorKind::kDimensionMismatch, msg.str());
  }
  for (std::size_t i = 0; i < n; ++i) {
    const bool finite =
        std::isfinite(payoffs.reward[i]) && std::isfinite(payoffs.cost[i]) &&
        std::isfinite(payoffs.att_reward[i]) && std::isfinite(payoffs.att_cost[i]);
    if (!finite) fail(ErrorKind::kInvalidArgument, "payoffs must be finite");
    if (!(payoffs.reward[i] > payoffs.cost[i]) ||
        !(payoffs.att_reward[i] > payoffs.att_cost[i])) {
      std::ostringstream msg;
      msg << "target " << (i + 1) << " needs reward > cost and "
          << "att_reward > att_cost";
      throw Error(ErrorKind::kStrictnessViolated, msg.str(), i);
    }
  }
  return SecurityGame(std::move(payoffs), std::move(oracle));
}

bool is_zero_sum(const SecurityGame& game) {
  const Payoffs& p = game.payoffs();
  for (std::size_t i = 0; i < game.n(); ++i) {
    if (p.reward[i] + p.att_cost[i] != 0.0) return false;
    if (p.cost[i] + p.att_reward[i] != 0.0) return false;
  }
  return true;
}

namespace {

void check_dims(const SecurityGame& game, std::span<const double> x,
                std::span<const double> y) {
  if (x.size() != game.n() || y.size() != game.n()) {
    fail(ErrorKind::kDimensionMismatch, "strategy length differs from game");
  }
}

}  // namespace

double defender_payoff_at(const SecurityGame& game, std::span<const double> x,
                          std::size_t i) {
  return game.reward()[i] * x[i] + game.cost()[i] * (1.0 - x[i]);
}

double attacker_payoff_at(const SecurityGame& game, std::span<const double> x,
                          std::size_t i) {
  return game.att_reward()[i] * (1.0 - x[i]) + game.att_cost()[i] * x[i];
}

double defender_utility(const SecurityGame& game, std::span<const double> x,
                        std::span<const double> y) {
  check_dims(game, x, y);
  double total = 0.0;
  for (std::size_t i = 0; i < game.n(); ++i) {
    total += y[i] * defender_payoff_at(game, x, i);
  }
  return total;
}

double attacker_utility(const SecurityGame& game, std::span<const double> x,
                        std::span<const double> y) {
  check_dims(game, x, y);
  double total = 0.0;
  for (std::size_t i = 0; i < game.n(); ++i) {
    total += y[i] * attacker_payoff_at(game, x, i);
  }
  return total;
}

Marginal marginal_of(const MixedStrategy& p) {
  std::vector<double> x(p.dimension(), 0.0);
  for (const auto& [strategy, prob] : p.support()) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (strategy.covers(i)) x[i] += prob;
    }
  }
  return Marginal(std::move(x));
}

SecurityGame to_zero_sum_companion(const SecurityGame& game) {
  Payoffs p;
  const std::size_t n = game.n();
  p.reward.resize(n);
  p.cost.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.reward[i] = 0.0 - game.att_cost()[i];  // avoids -0.0
    p.cost[i] = 0.0 - game.att_reward()[i];
  }
  p.att_reward = game.payoffs().att_reward;
  p.att_cost = game.payoffs().att_cost;
  return validate_game(std::move(p), game.oracle_ptr());
}

}  // namespace sgsolve
