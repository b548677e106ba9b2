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
#include <sstream>

#include "brute_force.hpp"
#include "sgsolve/colgen.hpp"
#include "sgsolve/error.hpp"

using namespace sgsolve;

namespace {

// max sum_e (w . e) p_e  s.t.  sum_e p_e (A e) <= b, sum_e p_e = 1, with
// b chosen so the seed column alone is feasible.
struct RandomMaster {
  AffineColumnMap map;
  std::vector<double> rhs;
};

RandomMaster random_master(std::mt19937& rng, std::size_t n, std::size_t rows,
                           const PureStrategy& seed) {
  std::uniform_int_distribution<int> coef(-4, 4);
  RandomMaster m;
  m.map.objective_slope.resize(n);
  for (auto& v : m.map.objective_slope) v = coef(rng);
  m.map.coeff_base.assign(rows + 1, 0.0);
  m.map.coeff_base[rows] = 1.0;  // convexity row
  m.map.coeff_slope.assign(rows + 1, std::vector<double>(n, 0.0));
  m.rhs.resize(rows + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    double at_seed = 0;
    for (std::size_t i = 0; i < n; ++i) {
      m.map.coeff_slope[r][i] = coef(rng);
      at_seed += m.map.coeff_slope[r][i] * seed.covers(i);
    }
    m.rhs[r] = at_seed + std::uniform_int_distribution<int>(0, 3)(rng);
  }
  m.rhs[rows] = 1.0;
  return m;
}

LinearProgram empty_master(const RandomMaster& m) {
  LinearProgram lp(Sense::kMaximize);
  const std::size_t rows = m.rhs.size();
  for (std::size_t r = 0; r + 1 < rows; ++r) lp.add_row({}, Relation::kLessEqual, m.rhs[r]);
  lp.add_row({}, Relation::kEqual, 1.0);
  return lp;
}

}  // namespace

TEST_CASE("affine column map evaluates base plus slopes") {
  AffineColumnMap map;
  map.objective_base = 1.0;
  map.objective_slope = {2.0, -1.0};
  map.coeff_base = {0.5, 1.0};
  map.coeff_slope = {{1.0, 0.0}, {0.0, 0.0}};
  const auto e = PureStrategy::from_string("11");
  CHECK(map.objective(e) == 2.0);
  CHECK(map.coeffs(e) == std::vector<double>{1.5, 1.0});
  CHECK(map.coeffs(PureStrategy::from_string("00")) == std::vector<double>{0.5, 1.0});
}

TEST_CASE("column generation matches the fully listed master") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 5;
    std::set<brute::Bits> fam;
    const std::size_t want = std::min<std::size_t>(2 + rng() % 8, std::size_t{1} << n);
    while (fam.size() < want) {
      brute::Bits b(n);
      for (auto& x : b) x = rng() % 2;
      fam.insert(b);
    }
    std::vector<PureStrategy> list;
    for (const auto& b : fam) list.emplace_back(b);
    const ExplicitOracle oracle(list);
    const PureStrategy seed = list[rng() % list.size()];
    const auto m = random_master(rng, n, 1 + trial % 3, seed);

    // Full master over every listed strategy.
    LinearProgram full = empty_master(m);
    for (const auto& e : list) full.add_column(m.map.objective(e), m.map.coeffs(e));
    const LpSolution want_sol = solve_lp(full);
    REQUIRE(want_sol.optimal());

    IncrementalLp master(empty_master(m));
    master.add_column(m.map.objective(seed), m.map.coeffs(seed));
    const ColGenConfig config;
    const auto pricer = [&](const LpSolution& s) {
      return price_affine_column(m.map, s, oracle, config.reduced_cost_tolerance);
    };
    const auto run = run_column_generation(master, pricer, {seed}, n, config);
    CAPTURE(trial);
    CHECK(std::abs(run.solution.objective - want_sol.objective) <= 1e-7);
    CHECK(run.trace.monotone_non_decreasing(1e-7));
    CHECK(run.added.size() <= list.size() - 1);
    // Every generated strategy is new.
    std::set<std::string> seen{seed.to_string()};
    for (const auto& [j, s] : run.added) CHECK(seen.insert(s.to_string()).second);
    CHECK(run.max_duality_gap <= 1e-8);
  }
}

TEST_CASE("cut generation over a polytope listed by an oracle") {
  // min sum y over the simplex subject to y . (e - x) <= 0 rows separated
  // one at a time. With x = e0 and every e dominated, nothing is added.
  const ExplicitOracle oracle({PureStrategy::from_string("10"), PureStrategy::from_string("01")});
  LinearProgram lp(Sense::kMaximize);
  lp.add_column(1.0);
  lp.add_column(0.0);
  lp.add_row(std::vector<double>{1.0, 1.0}, Relation::kEqual, 1.0);
  IncrementalLp inc(lp);
  // Separation: require y_0 <= y_1 (the strategy "10" may not beat "01").
  std::size_t calls = 0;
  const CutSeparator sep = [&](const LpSolution& s) -> std::optional<SeparatedCut> {
    ++calls;
    if (s.x[0] - s.x[1] <= 1e-9) return std::nullopt;
    SeparatedCut cut;
    cut.strategy = PureStrategy::from_string("10");
    cut.coeffs = {1.0, -1.0};
    cut.relation = Relation::kLessEqual;
    cut.rhs = 0.0;
    cut.violation = s.x[0] - s.x[1];
    return cut;
  };
  const auto run = run_cut_generation(inc, sep, 2);
  CHECK(run.solution.optimal());
  CHECK(run.solution.objective == doctest::Approx(0.5));
  CHECK(run.trace.monotone_non_increasing());
  CHECK(calls == 2);
  CHECK(run.added.size() == 1);
}

TEST_CASE("duplicate pricer answers raise after one retry") {
  LinearProgram lp(Sense::kMaximize);
  lp.add_row({}, Relation::kEqual, 1.0);
  IncrementalLp master(lp);
  const auto e = PureStrategy::from_string("1");
  master.add_column(1.0, std::vector<double>{1.0});
  std::size_t calls = 0;
  const ColumnPricer stuck = [&](const LpSolution&) -> std::optional<PricedColumn> {
    ++calls;
    return PricedColumn{e, 1.0, {1.0}, 0.5};
  };
  try {
    (void)run_column_generation(master, stuck, {e}, 1);
    FAIL("expected NumericalBreakdown");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::kNumericalBreakdown);
  }
  CHECK(calls == 2);
}

TEST_CASE("iteration cap") {
  ColGenConfig config;
  CHECK(config.iteration_cap(5) == 1050);
  config.max_iterations = 3;
  CHECK(config.iteration_cap(5) == 3);
}

TEST_CASE("dual clamping and initial columns") {
  CHECK(clamp_nonnegative_duals(std::vector<double>{-5e-10, 0.3}) ==
        std::vector<double>{0.0, 0.3});
  CHECK_THROWS_AS(clamp_nonnegative_duals(std::vector<double>{-1e-6}), Error);

  const UniformMatroidOracle m(3, 2);
  CHECK(initial_column(m, InitialColumnPolicy::kAuto).to_string() == "000");
  CHECK(initial_column(m, InitialColumnPolicy::kBestResponseToOnes).to_string() == "110");
  const ExplicitOracle no_empty({PureStrategy::from_string("011")});
  CHECK(initial_column(no_empty, InitialColumnPolicy::kAuto).to_string() == "011");
}

TEST_CASE("trace serialization") {
  ColGenTrace t;
  t.records.push_back({0, 1.0, 0.5, "10"});
  t.records.push_back({1, 1.25, 0.0, ""});
  CHECK(t.monotone_non_decreasing());
  CHECK_FALSE(t.monotone_non_increasing());
  std::ostringstream out;
  t.write_jsonl(out);
  const std::string s = out.str();
  CHECK(std::count(s.begin(), s.end(), '\n') == 2);
  CHECK(s.find("\"iteration\":1") != std::string::npos);
}
