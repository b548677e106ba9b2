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

#include "sgsolve/verification.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "sgsolve/equilibria.hpp"
#include "sgsolve/error.hpp"
#include "sgsolve/lp.hpp"
#include "sgsolve/reductions.hpp"
#include "sgsolve/reference.hpp"

namespace sgsolve {

namespace {

constexpr double kReferenceTolerance = 1e-6;
constexpr double kBoundaryDistance = 1e-4;

double brute_best(const std::vector<PureStrategy>& e, std::span<const double> w) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& s : e) best = std::max(best, s.dot(w));
  return best;
}

CheckOutcome outcome(std::string name, std::size_t cases, std::size_t failures,
                     const std::string& first_failure) {
  CheckOutcome out{std::move(name), CheckStatus::kPass, "", cases};
  std::ostringstream d;
  d << cases << " cases";
  if (failures) {
    out.status = CheckStatus::kFail;
    d << ", " << failures << " failed; first: " << first_failure;
  }
  out.detail = d.str();
  return out;
}

// Random convex combination of up to n + 1 members of `pool`.
std::vector<double> random_mixture(std::mt19937_64& rng, const std::vector<PureStrategy>& pool,
                                   std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t m = 1 + rng() % (n + 1);
  std::vector<double> x(n, 0.0), w(m);
  std::vector<std::size_t> idx(m);
  double total = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    idx[j] = pick(rng);
    total += (w[j] = u(rng) + 1e-3);
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) x[i] += w[j] / total * pool[idx[j]].covers(i);
  }
  return x;
}

std::string show(std::span<const double> x) {
  std::ostringstream s;
  s.precision(6);
  s << "(";
  for (std::size_t i = 0; i < x.size(); ++i) s << (i ? ", " : "") << x[i];
  s << ")";
  return s.str();
}

}  // namespace

std::string_view check_status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "PASS";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kSkip: return "SKIP";
  }
  return "?";
}

std::vector<double> dyadic_weights(std::mt19937_64& rng, std::size_t n, bool allow_negative,
                                   bool at_least_one_zero) {
  std::uniform_int_distribution<int> k(allow_negative ? -64 : 0, 64);
  std::vector<double> w(n);
  for (auto& v : w) {
    // a quarter of entries are zero, to exercise ties
    v = rng() % 4 == 0 ? 0.0 : k(rng) / 16.0;
  }
  if (at_least_one_zero && n > 0) w[rng() % n] = 0.0;
  return w;
}

CheckOutcome check_oracle_enumeration(const DbrOracle& oracle,
                                      const std::vector<PureStrategy>& strategies,
                                      std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::set<PureStrategy> members(strategies.begin(), strategies.end());
  std::size_t failures = 0;
  std::string first;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto w = dyadic_weights(rng, oracle.dimension(), s % 2 == 0);
    const OracleAnswer a = oracle.best_response(w);
    const double want = brute_best(strategies, w);
    if (a.value != want || !members.count(a.strategy)) {
      if (!failures++) {
        first = "w=" + show(w) + " got " + a.strategy.to_string() + " value " +
                std::to_string(a.value) + ", enumeration gives " + std::to_string(want);
      }
    }
  }
  return outcome("oracle-vs-enumeration", samples, failures, first);
}

CheckOutcome check_oracle_self_consistency(const DbrOracle& oracle, std::size_t samples,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PureStrategy> seen;
  std::size_t failures = 0;
  std::string first;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto w = dyadic_weights(rng, oracle.dimension(), s % 2 == 0);
    const OracleAnswer a = oracle.best_response(w);
    bool ok = a.strategy.size() == oracle.dimension() && a.value == a.strategy.dot(w);
    for (const auto& e : seen) ok = ok && e.dot(w) <= a.value;
    if (!ok && !failures++) first = "w=" + show(w) + " answer " + a.strategy.to_string();
    if (std::find(seen.begin(), seen.end(), a.strategy) == seen.end()) seen.push_back(a.strategy);
  }
  return outcome("oracle-self-consistency", samples, failures, first);
}

CheckOutcome check_regularization(const DbrOracle& oracle,
                                  const std::vector<PureStrategy>& strategies,
                                  std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::set<PureStrategy> members(strategies.begin(), strategies.end());
  std::size_t failures = 0;
  std::string first;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto w = dyadic_weights(rng, oracle.dimension(), false, true);
    const OracleAnswer a = regularized_dbr(oracle, w);
    const double want = brute_best(strategies, w);
    if (!members.count(a.strategy) || a.value != want) {
      if (!failures++) {
        first = "w=" + show(w) + " got " + a.strategy.to_string() + " value " +
                std::to_string(a.value) + ", optimum " + std::to_string(want);
      }
    }
  }
  return outcome("regularized-dbr", samples, failures, first);
}

SolverCheck check_solvers_against_reference(const SecurityGame& game,
                                            const std::vector<PureStrategy>& strategies) {
  SolverCheck out;
  const auto compare = [&](const std::string& name, double got, double want) {
    const double diff = std::abs(got - want);
    std::ostringstream d;
    d.precision(12);
    d << "engine " << got << ", explicit LP " << want << ", |diff| " << diff;
    out.outcomes.push_back({name, diff <= kReferenceTolerance ? CheckStatus::kPass
                                                                : CheckStatus::kFail,
                            d.str(), 1});
  };
  const auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      out.outcomes.push_back({name, CheckStatus::kFail, e.what(), 1});
    }
  };
  guarded("minimax-vs-explicit", [&] {
    // general-sum games are checked through their zero-sum companion
    const SecurityGame zs = is_zero_sum(game) ? game : to_zero_sum_companion(game);
    const auto r = solve_minimax(zs);
    const auto ref = reference::minimax(zs, strategies);
    out.max_duality_gap =
        std::max({out.max_duality_gap, r.diagnostics.max_duality_gap, ref.max_duality_gap});
    compare("minimax-vs-explicit", r.value, ref.value);
  });
  guarded("sse-vs-explicit", [&] {
    const auto r = solve_sse(game);
    const auto ref = reference::sse(game, strategies);
    out.max_duality_gap =
        std::max({out.max_duality_gap, r.diagnostics.max_duality_gap, ref.max_duality_gap});
    compare("sse-vs-explicit", r.defender_utility, ref.defender_utility);
  });
  guarded("ne-vs-explicit", [&] {
    const auto best = solve_ne_extremal(game, Extremum::kBest);
    const auto worst = solve_ne_extremal(game, Extremum::kWorst);
    const auto ref = reference::ne_extremes(game, strategies);
    out.max_duality_gap =
        std::max({out.max_duality_gap, best.diagnostics.max_duality_gap,
                  worst.diagnostics.max_duality_gap, ref.max_duality_gap});
    compare("ne-best-vs-explicit", best.defender_utility, ref.best);
    compare("ne-worst-vs-explicit", worst.defender_utility, ref.worst);
  });
  return out;
}

double max_scaling_in_closure(std::span<const double> x,
                              const std::vector<PureStrategy>& strategies) {
  const auto closed = downward_closure(strategies);
  const std::size_t m = closed.size();
  LinearProgram lp(Sense::kMaximize);
  lp.add_column(1.0);  // t
  for (std::size_t j = 0; j < m; ++j) lp.add_column(0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<double> row(m + 1);
    row[0] = -x[i];
    for (std::size_t j = 0; j < m; ++j) row[1 + j] = closed[j].covers(i) ? 1.0 : 0.0;
    lp.add_row(row, Relation::kEqual, 0.0);
  }
  std::vector<double> simplex(m + 1, 1.0);
  simplex[0] = 0.0;
  lp.add_row(simplex, Relation::kEqual, 1.0);
  const LpSolution s = solve_lp(lp);
  if (!s.optimal()) {
    fail(ErrorKind::kNumericalBreakdown, "boundary scaling LP is " +
                                             std::string(lp_status_name(s.status)));
  }
  return s.objective;
}

CheckOutcome check_membership(const std::shared_ptr<const DbrOracle>& oracle,
                              const std::vector<PureStrategy>& strategies,
                              std::size_t samples, std::size_t boundary, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t n = oracle->dimension();
  const auto closed = downward_closure(strategies);
  std::size_t failures = 0, near_boundary = 0;
  double gap = 0.0;
  std::string first;
  const auto judge = [&](const std::vector<double>& x, bool at_boundary) {
    const bool want = brute_membership(x, strategies);
    const MembershipVerdict got = membership_check(x, oracle);
    gap = std::max(gap, got.max_duality_gap);
    bool ok = got.is_member == want;
    if (!ok && at_boundary) ok = std::abs(got.game_value - 1.0) <= kMembershipTolerance;
    if (!ok && !failures++) {
      first = "x=" + show(x) + " brute " + (want ? "member" : "non-member") + ", game value " +
              std::to_string(got.game_value);
    }
  };
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<double> x = random_mixture(rng, closed, n);
    if (s % 2 == 1) {
      const double grow = 1.05 + u(rng);
      for (auto& v : x) v = std::min(1.0, v * grow);
    }
    judge(x, false);
  }
  // Boundary points: t* x on the boundary, then nudged in and out by a
  // relative step small enough to stay within kBoundaryDistance.
  std::size_t made = 0;
  for (std::size_t attempt = 0; made < boundary && attempt < 20 * boundary + 20; ++attempt) {
    std::vector<double> x = random_mixture(rng, closed, n);
    double norm = 0.0;
    for (double v : x) norm += v * v;
    if (norm < 1e-6) continue;
    const double t = max_scaling_in_closure(x, strategies);
    for (auto& v : x) v = std::min(1.0, v * t);
    norm = std::sqrt(norm) * t;
    const double step = 0.5 * kBoundaryDistance / std::max(norm, 1.0);
    for (double factor : {1.0, 1.0 - step, 1.0 + step}) {
      std::vector<double> p(x);
      for (auto& v : p) v *= factor;
      judge(p, true);
      ++near_boundary;
    }
    made += 3;
  }
  CheckOutcome out = outcome("membership-vs-brute", samples + near_boundary, failures, first);
  out.max_duality_gap = gap;
  out.detail += " (" + std::to_string(near_boundary) + " within 1e-4 of the boundary)";
  if (near_boundary < boundary && out.status == CheckStatus::kPass) {
    out.status = CheckStatus::kFail;
    out.detail += "; could not place enough boundary points";
  }
  return out;
}

CheckOutcome check_down_monotone(const std::shared_ptr<const DbrOracle>& oracle,
                                 const std::vector<PureStrategy>& strategies,
                                 std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t n = oracle->dimension();
  const auto closed = downward_closure(strategies);
  std::size_t failures = 0, pairs = 0;
  double gap = 0.0;
  std::string first;
  for (std::size_t attempt = 0; pairs < samples && attempt < 10 * samples; ++attempt) {
    const std::vector<double> x = random_mixture(rng, closed, n);
    const MembershipVerdict upper = membership_check(x, oracle);
    gap = std::max(gap, upper.max_duality_gap);
    if (!upper.is_member) {
      if (!failures++) first = "mixture " + show(x) + " classified non-member";
      continue;
    }
    std::vector<double> lower(x);
    for (auto& v : lower) v *= rng() % 5 == 0 ? 0.0 : u(rng);
    const MembershipVerdict below = membership_check(lower, oracle);
    gap = std::max(gap, below.max_duality_gap);
    if (!below.is_member && !failures++) {
      first = show(x) + " member but " + show(lower) + " not";
    }
    ++pairs;
  }
  CheckOutcome out = outcome("down-monotone", pairs, failures, first);
  out.max_duality_gap = gap;
  return out;
}

CheckOutcome check_decomposition(const DbrOracle& oracle,
                                 const std::vector<PureStrategy>& strategies,
                                 std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = oracle.dimension();
  const std::set<PureStrategy> members(strategies.begin(), strategies.end());
  std::size_t failures = 0;
  SolverDiagnostics diagnostics;
  std::string first;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::vector<double> x = random_mixture(rng, strategies, n);
    try {
      const MixedStrategy p = decompose_marginal(x, oracle, {}, &diagnostics);
      const Marginal m = marginal_of(p);
      double err = 0.0;
      for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(m[i] - x[i]));
      bool ok = err <= 1e-8 && p.support_size() <= n + 1;
      for (const auto& [e, prob] : p.support()) ok = ok && members.count(e);
      if (!ok && !failures++) {
        first = "x=" + show(x) + " error " + std::to_string(err) + " support " +
                std::to_string(p.support_size());
      }
    } catch (const std::exception& e) {
      if (!failures++) first = "x=" + show(x) + ": " + e.what();
    }
  }
  CheckOutcome out = outcome("decomposition", samples, failures, first);
  out.max_duality_gap = diagnostics.max_duality_gap;
  return out;
}

}  // namespace sgsolve
