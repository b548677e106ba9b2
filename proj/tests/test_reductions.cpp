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

#include <cmath>
#include <memory>
#include <random>
#include <set>

#include "brute_force.hpp"
#include "sgsolve/equilibria.hpp"
#include "sgsolve/error.hpp"
#include "sgsolve/reductions.hpp"
#include "sgsolve/reference.hpp"

using namespace sgsolve;

namespace {

std::shared_ptr<const DbrOracle> explicit_of(std::initializer_list<const char*> rows) {
  std::vector<PureStrategy> list;
  for (const char* r : rows) list.push_back(PureStrategy::from_string(r));
  return std::make_shared<ExplicitOracle>(list);
}

// Is there a z in conv(E) with z >= x? Enumerates a fine grid of mixtures
// for two strategies, which is exact up to the grid step.
bool dominated_on_grid(const std::vector<double>& x, const PureStrategy& a,
                       const PureStrategy& b) {
  for (int g = 0; g <= 10000; ++g) {
    const double t = g / 10000.0;
    bool ok = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (t * a.covers(i) + (1 - t) * b.covers(i) < x[i] - 1e-12) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("membership examples") {
  const auto e = explicit_of({"10", "01"});
  const auto in = membership_check(std::vector<double>{0.4, 0.5}, e);
  CHECK(in.is_member);
  CHECK(in.game_value == doctest::Approx(10.0 / 9));
  CHECK(in.reward[0] == doctest::Approx(2.5));
  CHECK(in.reward[1] == doctest::Approx(2.0));

  const auto out = membership_check(std::vector<double>{0.6, 0.6}, e);
  CHECK_FALSE(out.is_member);
  CHECK(out.game_value == doctest::Approx(5.0 / 6));

  const auto zero = membership_check(std::vector<double>{0, 0}, e);
  CHECK(zero.is_member);
  CHECK(zero.cost == std::vector<double>{1, 1});
  CHECK(zero.reward == std::vector<double>{2, 2});

  CHECK_FALSE(membership_check(std::vector<double>{-0.1, 0.2}, e).is_member);
  CHECK_FALSE(membership_check(std::vector<double>{1.2, 0.0}, e).is_member);
  CHECK_THROWS_AS(membership_check(std::vector<double>{0.1}, e), Error);

  // Boundary: value exactly 1 is a member.
  const auto edge = membership_check(std::vector<double>{0.5, 0.5}, e);
  CHECK(edge.game_value == doctest::Approx(1.0));
  CHECK(edge.is_member);
}

TEST_CASE("downward closure") {
  auto closed = downward_closure({PureStrategy::from_string("11")});
  REQUIRE(closed.size() == 4);
  CHECK(closed[0].to_string() == "00");
  CHECK(closed[3].to_string() == "11");
  closed = downward_closure({PureStrategy::from_string("10"), PureStrategy::from_string("01")});
  CHECK(closed.size() == 3);

  std::mt19937 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 6;
    std::vector<PureStrategy> list;
    std::size_t bound = 0;
    for (int j = 0; j < 3; ++j) {
      std::vector<std::uint8_t> b(n);
      for (auto& v : b) v = rng() % 2;
      list.emplace_back(b);
      bound += std::size_t{1} << list.back().cardinality();
    }
    const auto c = downward_closure(list);
    CHECK(c.size() <= bound);
    // Subset test against each listed strategy.
    for (const auto& s : c) {
      bool under = false;
      for (const auto& e : list) {
        bool sub = true;
        for (std::size_t i = 0; i < n; ++i) sub = sub && (!s.covers(i) || e.covers(i));
        under = under || sub;
      }
      CHECK(under);
    }
  }
}

TEST_CASE("brute membership") {
  const std::vector<PureStrategy> e{PureStrategy::from_string("110"),
                                    PureStrategy::from_string("011")};
  CHECK(brute_membership(std::vector<double>{0.5, 1.0, 0.5}, e));
  CHECK(brute_membership(std::vector<double>{0.2, 0.1, 0.0}, e));
  // Cardinality bound: sum x > max |e|.
  CHECK_FALSE(brute_membership(std::vector<double>{0.8, 0.8, 0.8}, e));

  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(3);
    for (auto& v : x) v = u(rng);
    CHECK(brute_membership(x, e) == dominated_on_grid(x, e[0], e[1]));
  }
}

TEST_CASE("membership agrees with the brute force") {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> u(0, 1);
  for (int inst = 0; inst < 6; ++inst) {
    const std::size_t n = 3 + inst % 3;
    std::set<brute::Bits> fam;
    const std::size_t m = 2 + rng() % 4;
    while (fam.size() < m) {
      brute::Bits b(n);
      for (auto& v : b) v = rng() % 2;
      fam.insert(b);
    }
    std::vector<PureStrategy> list;
    for (const auto& b : fam) list.emplace_back(b);
    const auto oracle = std::make_shared<ExplicitOracle>(list);
    const auto closed = downward_closure(list);
    int members = 0;
    for (int k = 0; k < 200; ++k) {
      std::vector<double> x(n, 0.0);
      // mixture over the closure, sometimes scaled up past the boundary
      std::vector<double> w(closed.size());
      double total = 0;
      for (auto& v : w) total += (v = u(rng));
      for (std::size_t j = 0; j < closed.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) x[i] += w[j] / total * closed[j].covers(i);
      if (k % 2) {
        const double s = 1.0 + u(rng);
        for (auto& v : x) v = std::min(1.0, v * s);
      }
      const bool want = brute_membership(x, list);
      const auto got = membership_check(x, oracle);
      CAPTURE(inst);
      CAPTURE(k);
      CHECK(got.is_member == want);
      members += want;
      // scaling down keeps members inside
      if (got.is_member) {
        std::vector<double> lower(x);
        for (auto& v : lower) v *= u(rng);
        CHECK(membership_check(lower, oracle).is_member);
      }
    }
    CHECK(members >= 100);
  }
}

TEST_CASE("edge game closed form") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  const auto g = build_kn_edge_game(5, 2);
  CHECK(g.game.n() == 10);
  CHECK(g.edges.front() == std::make_pair<std::size_t, std::size_t>(0, 1));
  CHECK(g.edges.back() == std::make_pair<std::size_t, std::size_t>(3, 4));
  CHECK(g.closed_form_value == doctest::Approx(0.7));
  const auto list = *g.game.oracle().enumerate(1000);
  CHECK(list.size() == 10);
  CHECK(list.front().to_string() == "1111111000");  // patrol {0, 1}
  const auto ref = reference::minimax(g.game, list);
  CHECK(ref.value == doctest::Approx(0.7));
  CHECK(build_kn_edge_game(3, 1).closed_form_value == doctest::Approx(2.0 / 3));
  CHECK(build_kn_edge_game(6, 5).closed_form_value == 1.0);
  CHECK_THROWS_AS(build_kn_edge_game(4, 4), Error);
  CHECK_THROWS_AS(build_kn_edge_game(4, 0), Error);

  for (std::size_t n = 3; n <= 7; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      const auto kn = build_kn_edge_game(n, k);
      const auto r = solve_minimax(kn.game);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(std::abs(r.value - kn.closed_form_value) <= 1e-6);
      const auto x = uniform_patrol_marginal(n, k);
      CHECK(defender_utility(kn.game, x, r.y.values()) >= r.value - 1e-8);
    }
  }
}
