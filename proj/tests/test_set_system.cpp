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
#include <vector>

#include "brute_force.hpp"
#include "sgsolve/error.hpp"
#include "sgsolve/set_system.hpp"

using namespace sgsolve;

namespace {

PureStrategy ps(const char* s) { return PureStrategy::from_string(s); }

std::vector<double> v(std::initializer_list<double> xs) { return xs; }

LayeredGraph two_by_two() {
  // positions a=0, b=1; targets a1=0, b1=1, a2=2, b2=3.
  LayeredGraph g;
  g.positions = 2;
  g.times = 2;
  g.target_at = {{0, 2}, {1, 3}};
  g.moves = {{0, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  return g;
}

// Random small oracles of every kind.
std::vector<std::shared_ptr<const DbrOracle>> random_zoo(std::mt19937& rng) {
  std::vector<std::shared_ptr<const DbrOracle>> zoo;
  std::uniform_int_distribution<int> coin(0, 1);
  const std::size_t n = 4 + rng() % 4;
  auto random_subset = [&](std::size_t max_size) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (rng() % n < max_size) s.push_back(i);
    return s;
  };
  zoo.push_back(std::make_shared<UniformMatroidOracle>(n, rng() % (n + 1)));
  {
    std::vector<std::vector<std::size_t>> allowed(1 + rng() % 3);
    for (auto& a : allowed) a = random_subset(2);
    zoo.push_back(std::make_shared<BipartiteOracle>(n, allowed));
  }
  {
    std::vector<std::vector<CoverageOracle::Schedule>> res(1 + rng() % 3);
    for (auto& r : res) {
      r.resize(rng() % 4);
      for (auto& s : r) s = random_subset(2);
    }
    zoo.push_back(std::make_shared<CoverageOracle>(n, res));
  }
  {
    LayeredGraph g;
    g.positions = 2 + rng() % 2;
    g.times = 2 + rng() % 2;
    g.target_at.assign(g.positions,
                       std::vector<std::optional<std::size_t>>(g.times));
    std::size_t next = 0;
    for (std::size_t t = 0; t < g.times; ++t)
      for (std::size_t p = 0; p < g.positions; ++p)
        if (coin(rng) || next == 0) g.target_at[p][t] = next++;
    for (std::size_t t = 0; t + 1 < g.times; ++t)
      for (std::size_t p = 0; p < g.positions; ++p) {
        g.moves.push_back({p, p, t});
        for (std::size_t q = 0; q < g.positions; ++q)
          if (q != p && coin(rng)) g.moves.push_back({p, q, t});
      }
    zoo.push_back(std::make_shared<LayeredFlowOracle>(next, g, 1 + rng() % 3));
  }
  {
    const std::size_t tools = 1 + rng() % 3;
    std::vector<std::vector<std::size_t>> teams(rng() % 3 + 1);
    for (auto& t : teams) {
      for (std::size_t k = 0; k < tools; ++k)
        if (coin(rng)) t.push_back(k);
      if (t.empty()) t.push_back(rng() % tools);
    }
    std::vector<int> caps(tools);
    for (int& c : caps) c = static_cast<int>(rng() % 3);
    zoo.push_back(std::make_shared<PackingOracle>(n, teams, caps));
  }
  {
    std::set<brute::Bits> family;
    const std::size_t count = 1 + rng() % 6;
    while (family.size() < count) {
      brute::Bits b(n);
      for (auto& x : b) x = static_cast<std::uint8_t>(coin(rng));
      family.insert(b);
    }
    std::vector<PureStrategy> list;
    for (const auto& b : family) list.emplace_back(b);
    std::shuffle(list.begin(), list.end(), rng);
    zoo.push_back(std::make_shared<ExplicitOracle>(list));
  }
  return zoo;
}

}  // namespace

TEST_CASE("uniform matroid examples") {
  UniformMatroidOracle o2(3, 2);
  auto a = o2.best_response(v({3, 1, 2}));
  CHECK(a.strategy.to_string() == "101");
  CHECK(a.value == 5.0);
  a = o2.best_response(v({-1, -1, -1}));
  CHECK(a.strategy.to_string() == "000");
  CHECK(a.value == 0.0);
  UniformMatroidOracle o3(3, 3);
  CHECK(o3.best_response(v({1, 1, 1})).strategy.to_string() == "111");
  CHECK(UniformMatroidOracle(2, 1).best_response(v({0.5, 0.5})).strategy.to_string() ==
        "10");
  CHECK_THROWS_AS(UniformMatroidOracle(2, 3), Error);
}

TEST_CASE("bipartite examples") {
  BipartiteOracle o(3, {{0, 1}, {1, 2}});
  auto a = o.best_response(v({5, 4, 1}));
  CHECK(a.strategy.to_string() == "110");
  CHECK(a.value == 9.0);
  BipartiteOracle idle(1, {{0}});
  CHECK(idle.best_response(v({-2})).value == 0.0);
  BipartiteOracle dup(2, {{0}, {0}});
  a = dup.best_response(v({7, 1}));
  CHECK(a.strategy.to_string() == "10");
  CHECK(a.value == 7.0);
}

TEST_CASE("coverage examples") {
  CoverageOracle o(3, {{{0, 1}, {1, 2}}});
  auto a = o.best_response(v({3, 1, 2}));
  CHECK(a.strategy.to_string() == "110");
  CHECK(a.value == 4.0);
  CoverageOracle twice(1, {{{0}}, {{0}}});
  CHECK(twice.best_response(v({1})).value == 1.0);
  CoverageOracle none(2, {{}});
  CHECK(none.best_response(v({1, 1})).strategy.to_string() == "00");
}

TEST_CASE("coverage budget") {
  std::vector<std::vector<CoverageOracle::Schedule>> res(12);
  for (std::size_t j = 0; j < res.size(); ++j) res[j] = {{j}, {j + 1}, {j, j + 1}};
  CoverageOracle tiny(13, res, 50);
  std::vector<double> w(13);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = (i % 3 == 0) ? 1.0 : -0.5;
  try {
    (void)tiny.best_response(w);
    FAIL("expected ScaleExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kScaleExceeded);
  }
}

TEST_CASE("layered flow examples") {
  LayeredFlowOracle k1(4, two_by_two(), 1);
  auto a = k1.best_response(v({1, 0, 0, 2}));
  CHECK(a.strategy.to_string() == "1001");
  CHECK(a.value == 3.0);
  LayeredFlowOracle k2(4, two_by_two(), 2);
  CHECK(k2.best_response(v({1, 0, 0, 2})).value == 3.0);
  CHECK(k2.best_response(v({0, 0, 0, 0})).value == 0.0);
  // Signed weights with two patrollers: a1-b2 and b1-b2 avoid a2.
  const auto signed_answer = k2.best_response(v({1, 2, -1, 1}));
  CHECK(signed_answer.strategy.to_string() == "1101");
  CHECK(signed_answer.value == 4.0);

  LayeredGraph broken = two_by_two();
  broken.moves.clear();
  try {
    LayeredFlowOracle bad(4, broken, 1);
    FAIL("expected InfeasibleFlow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInfeasibleFlow);
  }
}

TEST_CASE("packing examples") {
  PackingOracle o(2, {{0}}, {1});
  auto a = o.best_response(v({3, 5}));
  CHECK(a.strategy.to_string() == "01");
  CHECK(a.value == 5.0);
  PackingOracle wide(3, {{0, 1}}, {3, 3});
  CHECK(wide.best_response(v({1, -1, 2})).strategy.to_string() == "101");
  PackingOracle empty(2, {}, {});
  CHECK(empty.best_response(v({1, 1})).value == 0.0);
  CHECK(o.max_assignable() == 1);
}

TEST_CASE("explicit examples") {
  ExplicitOracle o({ps("10"), ps("01")});
  CHECK(o.best_response(v({2, 3})).strategy.to_string() == "01");
  CHECK(o.best_response(v({1, 1})).strategy.to_string() == "10");
  ExplicitOracle single({ps("11")});
  CHECK(single.best_response(v({-4, 1})).strategy.to_string() == "11");
  CHECK_THROWS_AS(ExplicitOracle({}), Error);
  CHECK_THROWS_AS(ExplicitOracle({ps("10"), ps("10")}), Error);
  CHECK_THROWS_AS(ExplicitOracle({ps("10"), ps("1")}), Error);
  try {
    ExplicitOracle({});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kEmptySystem);
  }
  CHECK_THROWS_AS(o.best_response(v({1, 2, 3})), Error);
}

TEST_CASE("relaxed best response") {
  ExplicitOracle o({ps("110"), ps("001")});
  auto a = relaxed_best_response(o, v({1, -5, 0}));
  CHECK(a.strategy.to_string() == "100");
  CHECK(a.value == 1.0);
  CHECK(a.strategy.is_subpure);
  a = relaxed_best_response(o, v({1, 2, 0.5}));
  CHECK(a.strategy.to_string() == "110");
  CHECK_FALSE(a.strategy.is_subpure);
  a = relaxed_best_response(o, v({-1, -1, -1}));
  CHECK(a.strategy.to_string() == "000");
  CHECK(a.value == 0.0);
}

TEST_CASE("regularized best response") {
  ExplicitOracle o({ps("110"), ps("001")});
  auto a = regularized_dbr(o, v({1, 0, 0}));
  CHECK(a.strategy.to_string() == "110");
  CHECK(a.value == 1.0);
  CHECK_FALSE(a.strategy.is_subpure);
  ExplicitOracle c({ps("100"), ps("011"), ps("010")});
  CHECK(regularized_dbr(c, v({0, 0, 0})).strategy.to_string() == "011");
  CHECK(regularized_dbr(c, v({3, 1, 1})).strategy.to_string() ==
        c.best_response(v({3, 1, 1})).strategy.to_string());
  CHECK_THROWS_AS(regularized_dbr(c, v({1, -1, 0})), Error);

  CHECK(bit_complexity(v({0.5, 3})) == 2);
  CHECK(regularization_epsilon(v({0.5, 3})) == doctest::Approx(0.0625));
  const auto r = snap_to_dyadic(0.375);
  CHECK(r.numerator == 3);
  CHECK(r.denominator == 8);
}

TEST_CASE("oracles match brute-force enumeration on random weights") {
  std::mt19937 rng(2024);
  for (int round = 0; round < 12; ++round) {
    for (const auto& oracle : random_zoo(rng)) {
      CAPTURE(oracle->kind());
      const auto family = brute::family_of(*oracle);
      const auto hat = brute::downward(family);
      const std::size_t n = oracle->dimension();

      const auto listed = oracle->enumerate(100000);
      REQUIRE(listed.has_value());
      brute::Family from_oracle;
      for (const auto& s : *listed) from_oracle.insert(s.bits);
      CHECK(from_oracle == family);
      CHECK(listed->size() == family.size());
      CHECK(oracle->capabilities().contains_empty ==
            (family.count(brute::Bits(n, 0)) > 0));

      for (int trial = 0; trial < 500; ++trial) {
        const bool signed_w = trial % 2 == 0;
        const auto w = brute::dyadic_weights(rng, n, signed_w, 0.2);
        const auto answer = oracle->best_response(w);
        CHECK(family.count(answer.strategy.bits) == 1);
        CHECK(answer.value == brute::best_value(family, w));
        CHECK(answer.value == brute::dot(answer.strategy.bits, w));

        const auto relaxed = relaxed_best_response(*oracle, w);
        CHECK(relaxed.value == brute::best_value(hat, w));
        CHECK(hat.count(relaxed.strategy.bits) == 1);
        if (!signed_w) {
          CHECK(relaxed.value == answer.value);
          const auto reg = regularized_dbr(*oracle, w);
          CHECK(family.count(reg.strategy.bits) == 1);
          CHECK_FALSE(reg.strategy.is_subpure);
          CHECK(reg.value == answer.value);
        }
        // Raising one weight never lowers the optimum.
        auto up = w;
        up[trial % n] += 0.25;
        CHECK(oracle->best_response(up).value >= answer.value);
      }
    }
  }
}

TEST_CASE("deterministic answers") {
  std::mt19937 rng(5);
  for (const auto& oracle : random_zoo(rng)) {
    const auto w = brute::dyadic_weights(rng, oracle->dimension(), true);
    CHECK(oracle->best_response(w).strategy == oracle->best_response(w).strategy);
  }
}
