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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "sgsolve/error.hpp"
#include "sgsolve/lp.hpp"

using namespace sgsolve;

namespace {

// Brute-force optimum of max c.x over {A x <= b, x >= 0} by visiting every
// vertex: choose n tight constraints, solve, keep the feasible ones.
struct VertexResult {
  bool feasible = false;
  double best = -kInfinity;
};

VertexResult brute_vertex_max(const std::vector<std::vector<double>>& a,
                              const std::vector<double>& b,
                              const std::vector<double>& c) {
  const int n = static_cast<int>(c.size());
  const int m = static_cast<int>(b.size());
  // Candidate planes: m rows then n coordinate planes.
  const int total = m + n;
  VertexResult out;
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    Eigen::MatrixXd mat(n, n);
    Eigen::VectorXd rhs(n);
    for (int r = 0; r < n; ++r) {
      const int p = pick[r];
      for (int j = 0; j < n; ++j) {
        mat(r, j) = p < m ? a[p][j] : (p - m == j ? 1.0 : 0.0);
      }
      rhs(r) = p < m ? b[p] : 0.0;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(mat);
    if (lu.isInvertible()) {
      Eigen::VectorXd x = lu.solve(rhs);
      bool ok = true;
      for (int j = 0; j < n; ++j) ok = ok && x(j) >= -1e-9;
      for (int i = 0; i < m && ok; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += a[i][j] * x(j);
        ok = s <= b[i] + 1e-9;
      }
      if (ok) {
        out.feasible = true;
        double v = 0.0;
        for (int j = 0; j < n; ++j) v += c[j] * x(j);
        out.best = std::max(out.best, v);
      }
    }
    int k = n - 1;
    while (k >= 0 && pick[k] == total - n + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int j = k + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

void check_certificates(const LpSolution& s) {
  REQUIRE(s.optimal());
  CHECK(s.primal_residual <= 1e-8);
  CHECK(s.dual_residual <= 1e-8);
  CHECK(s.complementarity <= 1e-8);
  CHECK(s.duality_gap <= 1e-8);
}

}  // namespace

TEST_CASE("single bound row") {
  LinearProgram lp;
  const double one = 1.0;
  lp.add_column(1.0);
  lp.add_row(std::span(&one, 1), Relation::kLessEqual, 3.0);
  const auto s = solve_lp(lp);
  CHECK(s.objective == doctest::Approx(3.0));
  CHECK(s.x[0] == doctest::Approx(3.0));
  CHECK(s.duals[0] == doctest::Approx(1.0));
  check_certificates(s);
}

TEST_CASE("tie returns the lowest-index vertex") {
  LinearProgram lp;
  lp.add_column(1.0);
  lp.add_column(1.0);
  const std::vector<double> row{1.0, 1.0};
  lp.add_row(row, Relation::kLessEqual, 1.0);
  const auto s = solve_lp(lp);
  CHECK(s.objective == doctest::Approx(1.0));
  CHECK(s.x[0] == doctest::Approx(1.0));
  CHECK(s.x[1] == doctest::Approx(0.0));
}

TEST_CASE("minimax master of the symmetric two-target game") {
  // max u, u - p_e (r-c) e_i <= c_i, columns e = (1,0), (0,1).
  LinearProgram lp;
  lp.add_column(1.0, {}, Bounds::unbounded());
  lp.add_column(0.0);
  lp.add_column(0.0);
  lp.add_row(std::vector<double>{1.0, -1.0, 0.0}, Relation::kLessEqual, 0.0);
  lp.add_row(std::vector<double>{1.0, 0.0, -1.0}, Relation::kLessEqual, 0.0);
  lp.add_row(std::vector<double>{0.0, 1.0, 1.0}, Relation::kEqual, 1.0);
  const auto s = solve_lp(lp);
  CHECK(s.objective == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.duals[0] == doctest::Approx(0.5));
  CHECK(s.duals[1] == doctest::Approx(0.5));
  check_certificates(s);
}

TEST_CASE("dual sign convention") {
  SUBCASE("max with >= row") {
    // max -x s.t. x >= 2: raising the rhs lowers the optimum.
    LinearProgram lp;
    lp.add_column(-1.0);
    lp.add_row(std::vector<double>{1.0}, Relation::kGreaterEqual, 2.0);
    const auto s = solve_lp(lp);
    CHECK(s.objective == doctest::Approx(-2.0));
    CHECK(s.duals[0] == doctest::Approx(-1.0));
    check_certificates(s);
  }
  SUBCASE("min with >= row") {
    LinearProgram lp(Sense::kMinimize);
    lp.add_column(2.0);
    lp.add_row(std::vector<double>{1.0}, Relation::kGreaterEqual, 3.0);
    const auto s = solve_lp(lp);
    CHECK(s.objective == doctest::Approx(6.0));
    CHECK(s.duals[0] == doctest::Approx(2.0));
    check_certificates(s);
  }
  SUBCASE("negative rhs equality") {
    LinearProgram lp;
    lp.add_column(1.0, {}, Bounds::unbounded());
    lp.add_row(std::vector<double>{2.0}, Relation::kEqual, -4.0);
    const auto s = solve_lp(lp);
    CHECK(s.x[0] == doctest::Approx(-2.0));
    CHECK(s.duals[0] == doctest::Approx(0.5));
    check_certificates(s);
  }
}

TEST_CASE("bounds") {
  LinearProgram lp;
  lp.add_column(1.0, {}, {-1.0, 2.5});
  lp.add_column(-1.0, {}, {-kInfinity, 4.0});
  lp.add_column(0.5, {}, {1.0, 1.0});
  lp.add_row(std::vector<double>{1.0, 1.0, 1.0}, Relation::kGreaterEqual, -100.0);
  const auto s = solve_lp(lp);
  REQUIRE(s.optimal());
  CHECK(s.x[0] == doctest::Approx(2.5));
  CHECK(s.x[2] == doctest::Approx(1.0));
  // x1 has no lower bound, but the row caps how negative it can go.
  CHECK(s.x[1] == doctest::Approx(-103.5));
  check_certificates(s);

  LinearProgram bad;
  bad.add_column(1.0, {}, {2.0, 1.0});
  CHECK(solve_lp(bad).status == LpStatus::kInfeasible);
}

TEST_CASE("infeasible and unbounded") {
  LinearProgram inf;
  inf.add_column(1.0);
  inf.add_row(std::vector<double>{1.0}, Relation::kLessEqual, 1.0);
  inf.add_row(std::vector<double>{1.0}, Relation::kGreaterEqual, 2.0);
  CHECK(solve_lp(inf).status == LpStatus::kInfeasible);

  LinearProgram unb;
  unb.add_column(1.0);
  unb.add_column(0.0);
  unb.add_row(std::vector<double>{1.0, -1.0}, Relation::kLessEqual, 1.0);
  CHECK(solve_lp(unb).status == LpStatus::kUnbounded);
}

TEST_CASE("dimension checks") {
  LinearProgram lp;
  lp.add_column(1.0);
  CHECK_THROWS_AS(lp.add_row(std::vector<double>{1.0, 2.0}, Relation::kEqual, 1.0),
                  Error);
  lp.add_row(std::vector<double>{1.0}, Relation::kLessEqual, 1.0);
  CHECK_THROWS_AS(lp.add_column(1.0, std::vector<double>{1.0, 2.0}), Error);
}

TEST_CASE("random LPs agree with vertex enumeration") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-4, 6);
  std::uniform_int_distribution<int> rhs(0, 10);
  int feasible_count = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    const int m = 2 + trial % 4;
    std::vector<std::vector<double>> a(m, std::vector<double>(n));
    std::vector<double> b(m), c(n);
    for (auto& row : a)
      for (double& v : row) v = coef(rng);
    for (double& v : b) v = rhs(rng) - (trial % 5 == 0 ? 3 : 0);
    for (double& v : c) v = coef(rng);
    // A box row keeps most instances bounded.
    if (trial % 7 != 0) {
      a.push_back(std::vector<double>(n, 1.0));
      b.push_back(8.0);
    }
    LinearProgram lp;
    for (int j = 0; j < n; ++j) lp.add_column(c[j]);
    for (std::size_t i = 0; i < a.size(); ++i) lp.add_row(a[i], Relation::kLessEqual, b[i]);
    const auto s = solve_lp(lp);
    const auto ref = brute_vertex_max(a, b, c);
    if (!ref.feasible) {
      CHECK(s.status == LpStatus::kInfeasible);
      continue;
    }
    if (s.status == LpStatus::kUnbounded) continue;  // vertex scan cannot see rays
    ++feasible_count;
    REQUIRE(s.optimal());
    CHECK(s.objective == doctest::Approx(ref.best).epsilon(1e-9));
    check_certificates(s);
    // Vertex: at most m strictly positive structural values.
    int positive = 0;
    for (double v : s.x) positive += v > 1e-9;
    CHECK(positive <= static_cast<int>(a.size()));
  }
  CHECK(feasible_count > 100);
}

TEST_CASE("deterministic output") {
  LinearProgram lp;
  for (int j = 0; j < 5; ++j) lp.add_column(1.0 + (j % 2));
  lp.add_row(std::vector<double>{1, 1, 1, 1, 1}, Relation::kLessEqual, 2.0);
  lp.add_row(std::vector<double>{1, 2, 0, 2, 1}, Relation::kLessEqual, 3.0);
  const auto a = solve_lp(lp);
  const auto b = solve_lp(lp);
  CHECK(a.x == b.x);
  CHECK(a.iterations == b.iterations);
  CHECK(a.duals == b.duals);
}

TEST_CASE("degenerate cycling example") {
  // Beale's example cycles under textbook Dantzig pricing.
  LinearProgram lp;
  lp.add_column(0.75);
  lp.add_column(-150.0);
  lp.add_column(0.02);
  lp.add_column(-6.0);
  lp.add_row(std::vector<double>{0.25, -60.0, -0.04, 9.0}, Relation::kLessEqual, 0.0);
  lp.add_row(std::vector<double>{0.5, -90.0, -0.02, 3.0}, Relation::kLessEqual, 0.0);
  lp.add_row(std::vector<double>{0.0, 0.0, 1.0, 0.0}, Relation::kLessEqual, 1.0);
  const auto s = solve_lp(lp);
  CHECK(s.objective == doctest::Approx(0.05));
  check_certificates(s);
}

TEST_CASE("incremental re-solve") {
  IncrementalLp inc{LinearProgram{}};
  inc.add_column(1.0, {});
  inc.add_column(2.0, {});
  inc.add_row(std::vector<double>{1.0, 1.0}, Relation::kLessEqual, 4.0);
  inc.add_row(std::vector<double>{0.0, 1.0}, Relation::kLessEqual, 3.0);
  const double base = inc.solve().objective;
  CHECK(base == doctest::Approx(7.0));

  SUBCASE("redundant row keeps the value") {
    inc.add_row(std::vector<double>{1.0, 1.0}, Relation::kLessEqual, 10.0);
    const auto& s = inc.solve();
    CHECK(s.objective == doctest::Approx(base));
    CHECK(s.warm_started);
  }
  SUBCASE("improving column raises the value") {
    inc.add_column(5.0, std::vector<double>{1.0, 0.0});
    const auto& s = inc.solve();
    CHECK(s.objective >= base);
    CHECK(s.objective == doctest::Approx(20.0));
    CHECK(s.warm_started);
    check_certificates(s);
  }
  SUBCASE("violated row lowers the value") {
    inc.add_row(std::vector<double>{0.0, 1.0}, Relation::kLessEqual, 1.0);
    const auto& s = inc.solve();
    CHECK(s.objective <= base);
    CHECK(s.objective == doctest::Approx(5.0));
    check_certificates(s);
  }
  SUBCASE("bounds tightened then fixed") {
    inc.set_bounds(0, {0.0, 0.5});
    CHECK(inc.solve().objective == doctest::Approx(6.5));
    inc.set_bounds(0, Bounds::fixed(0.0));
    CHECK(inc.solve().objective == doctest::Approx(6.0));
    inc.set_bounds(0, {});
    CHECK(inc.solve().objective == doctest::Approx(7.0));
  }
}

TEST_CASE("text dump") {
  LinearProgram lp(Sense::kMinimize);
  lp.add_column(1.0);
  lp.add_column(-2.0, {}, Bounds::unbounded());
  lp.add_row(std::vector<double>{1.0, -1.0}, Relation::kGreaterEqual, 0.5);
  std::ostringstream out;
  write_lp_format(lp, out);
  const std::string text = out.str();
  CHECK(text.find("Minimize") == 0);
  CHECK(text.find(" obj: 1 v0 - 2 v1") != std::string::npos);
  CHECK(text.find(" r0: v0 - v1 >= 0.5") == std::string::npos);
  CHECK(text.find(" r0: 1 v0 - 1 v1 >= 0.5") != std::string::npos);
  CHECK(text.find(" v1 free") != std::string::npos);
}
