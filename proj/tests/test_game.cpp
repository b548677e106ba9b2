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

#include <doctest.h>

#include <memory>
#include <random>

#include "sgsolve/error.hpp"
#include "sgsolve/game.hpp"
#include "sgsolve/set_system.hpp"

using namespace sgsolve;

namespace {

Payoffs payoffs(std::vector<double> r, std::vector<double> c,
                std::vector<double> rho, std::vector<double> zeta) {
  return {std::move(r), std::move(c), std::move(rho), std::move(zeta)};
}

}  // namespace

TEST_CASE("validate_game") {
  auto oracle = std::make_shared<UniformMatroidOracle>(2, 1);
  const auto g = validate_game(payoffs({1, 1}, {0, 0}, {0, 0}, {-1, -1}), oracle);
  CHECK(g.n() == 2);
  CHECK(is_zero_sum(g));

  try {
    (void)validate_game(payoffs({1, 1}, {1, 0}, {1, 2}, {0, 0}), oracle);
    FAIL("expected StrictnessViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kStrictnessViolated);
    REQUIRE(e.index().has_value());
    CHECK(*e.index() == 0);
  }
  try {
    (void)validate_game(payoffs({1, 1, 1}, {0, 0, 0}, {1, 1, 1}, {0, 0, 0}), oracle);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDimensionMismatch);
  }
  CHECK_THROWS_AS(validate_game(payoffs({1}, {0, 0}, {1}, {0}), nullptr), Error);
  CHECK_THROWS_AS(validate_game(payoffs({}, {}, {}, {}), nullptr), Error);
  // Second strictness clause, attacker side.
  try {
    (void)validate_game(payoffs({1, 1}, {0, 0}, {1, 0}, {0, 0}), nullptr);
    FAIL("expected StrictnessViolated");
  } catch (const Error& e) {
    CHECK(*e.index() == 1);
  }
}

TEST_CASE("is_zero_sum") {
  CHECK(is_zero_sum(validate_game(payoffs({1, 1}, {0, 0}, {0, 0}, {-1, -1}), nullptr)));
  CHECK_FALSE(is_zero_sum(validate_game(payoffs({1, 1}, {0, 0}, {1, 2}, {0, 0}), nullptr)));
  CHECK(is_zero_sum(validate_game(payoffs({5}, {-2}, {2}, {-5}), nullptr)));
}

TEST_CASE("utilities") {
  const auto g = validate_game(payoffs({1, 1}, {0, 0}, {1, 2}, {0, 0}), nullptr);
  const std::vector<double> x10{1, 0}, y10{1, 0};
  CHECK(defender_utility(g, x10, y10) == 1.0);
  CHECK(attacker_utility(g, x10, y10) == 0.0);
  const std::vector<double> half{0.5, 0.5};
  CHECK(defender_utility(g, half, half) == doctest::Approx(0.5));
  const std::vector<double> x{1.0 / 3, 2.0 / 3};
  CHECK(defender_utility(g, x, half) == doctest::Approx(0.5));
  CHECK(attacker_utility(g, x, std::vector<double>{0, 1}) == doctest::Approx(2.0 / 3));
  const auto sym = validate_game(payoffs({1, 1}, {0, 0}, {1, 1}, {0, 0}), nullptr);
  CHECK(attacker_utility(sym, half, half) == doctest::Approx(0.5));
  CHECK_THROWS_AS(defender_utility(g, std::vector<double>{1}, half), Error);
}

TEST_CASE("bilinearity and zero-sum identity") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-3, 3), p(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    Payoffs pay;
    for (std::size_t i = 0; i < n; ++i) {
      const double c = u(rng), r = c + 0.1 + p(rng);
      const double zeta = u(rng), rho = zeta + 0.1 + p(rng);
      pay.reward.push_back(r);
      pay.cost.push_back(c);
      pay.att_reward.push_back(rho);
      pay.att_cost.push_back(zeta);
    }
    const auto g = validate_game(pay, nullptr);
    std::vector<double> x(n), y(n);
    double total = 0;
    for (auto& v : x) v = p(rng);
    for (auto& v : y) total += (v = p(rng) + 1e-3);
    for (auto& v : y) v /= total;
    const std::size_t i = trial % n;
    const double h = 1e-3;
    auto xh = x;
    xh[i] += h;
    const double dslope = (defender_utility(g, xh, y) - defender_utility(g, x, y)) / h;
    const double aslope = (attacker_utility(g, xh, y) - attacker_utility(g, x, y)) / h;
    CHECK(dslope == doctest::Approx((pay.reward[i] - pay.cost[i]) * y[i]).epsilon(1e-9));
    CHECK(aslope ==
          doctest::Approx(-(pay.att_reward[i] - pay.att_cost[i]) * y[i]).epsilon(1e-9));

    const auto z = to_zero_sum_companion(g);
    CHECK(is_zero_sum(z));
    CHECK(std::abs(defender_utility(z, x, y) + attacker_utility(z, x, y)) <= 1e-12);
  }
}

TEST_CASE("marginal_of") {
  auto pure = [](const char* s) { return PureStrategy::from_string(s); };
  const auto a = marginal_of(MixedStrategy({{pure("10"), 0.5}, {pure("01"), 0.5}}));
  CHECK(a[0] == 0.5);
  CHECK(a[1] == 0.5);
  const auto b = marginal_of(MixedStrategy({{pure("110"), 1.0}}));
  CHECK(b[0] == 1.0);
  CHECK(b[2] == 0.0);
  const auto c = marginal_of(MixedStrategy({{pure("10"), 0.25}, {pure("11"), 0.75}}));
  CHECK(c[0] == 1.0);
  CHECK(c[1] == 0.75);
}

TEST_CASE("strategy validation") {
  auto pure = [](const char* s) { return PureStrategy::from_string(s); };
  CHECK_THROWS_AS(PureStrategy::from_string("012"), Error);
  CHECK_THROWS_AS(MixedStrategy({{pure("10"), 0.5}, {pure("10"), 0.5}}), Error);
  CHECK_THROWS_AS(MixedStrategy({{pure("10"), 0.5}, {pure("01"), 0.6}}), Error);
  CHECK_THROWS_AS(MixedStrategy({{pure("10"), 0.5}, {pure("011"), 0.5}}), Error);
  CHECK_THROWS_AS(Marginal({0.5, 1.1}), Error);
  CHECK(Marginal({1.0 + 1e-10})[0] == 1.0);
  CHECK_THROWS_AS(AttackerMixed({0.5, 0.6}), Error);
  CHECK_THROWS_AS(AttackerMixed({1.5, -0.5}), Error);
  CHECK(AttackerMixed::pure(3, 2)[2] == 1.0);
}

TEST_CASE("zero-sum companion") {
  const auto g = validate_game(payoffs({1, 1}, {0, 0}, {1, 2}, {0, 0}), nullptr);
  const auto z = to_zero_sum_companion(g);
  CHECK(z.reward()[0] == 0.0);
  CHECK(z.reward()[1] == 0.0);
  CHECK(z.cost()[0] == -1.0);
  CHECK(z.cost()[1] == -2.0);
  CHECK_FALSE(std::signbit(z.reward()[0]));
  const auto zz = to_zero_sum_companion(z);
  CHECK(zz.payoffs().reward == z.payoffs().reward);
  CHECK(zz.payoffs().cost == z.payoffs().cost);
  const auto zs = validate_game(payoffs({1, 1}, {0, 0}, {0, 0}, {-1, -1}), nullptr);
  CHECK(to_zero_sum_companion(zs).payoffs().reward == zs.payoffs().reward);
  CHECK(to_zero_sum_companion(zs).payoffs().cost == zs.payoffs().cost);
}
