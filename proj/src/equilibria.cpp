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

#include "sgsolve/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace sgsolve {

namespace {

using ColumnList = std::vector<std::pair<std::size_t, PureStrategy>>;

// Probabilities below this are treated as LP noise when reading supports.
constexpr double kSupportFloor = 1e-14;

MixedStrategy mixture_from(const LpSolution& s, const ColumnList& columns) {
  std::vector<MixedStrategy::Entry> support;
  double total = 0.0;
  for (const auto& [index, strategy] : columns) {
    const double p = s.x[index];
    if (p > kSupportFloor) {
      support.emplace_back(strategy, p);
      total += p;
    }
  }
  if (support.empty() || std::abs(total - 1.0) > 1e-7) {
    fail(ErrorKind::kNumericalBreakdown, "master probabilities do not sum to one");
  }
  for (auto& entry : support) entry.second /= total;
  return MixedStrategy(std::move(support));
}

std::vector<double> normalized(std::vector<double> y) {
  double total = 0.0;
  for (double& v : y) {
    v = std::max(v, 0.0);
    total += v;
  }
  if (!(total > 0.0)) fail(ErrorKind::kNumericalBreakdown, "attacker strategy vanished");
  for (double& v : y) v /= total;
  return y;
}

double row_scale(const SecurityGame& game) {
  double s = 1.0;
  const Payoffs& p = game.payoffs();
  for (std::size_t i = 0; i < game.n(); ++i) {
    s = std::max({s, std::abs(p.reward[i]), std::abs(p.cost[i]),
                  std::abs(p.att_reward[i]), std::abs(p.att_cost[i])});
  }
  return s;
}

void fill_utilities(const SecurityGame& game, EquilibriumResult& r) {
  r.defender_utility = defender_utility(game, r.x.values(), r.y.values());
  r.attacker_utility = attacker_utility(game, r.x.values(), r.y.values());
}

// ---------------------------------------------------------------------------
// Minimax master

struct MinimaxOutcome {
  double value = 0.0;
  MixedStrategy p;
  std::vector<double> y;
  SolverDiagnostics diagnostics;
};

MinimaxOutcome run_minimax_master(const SecurityGame& game, const ColGenConfig& config) {
  const std::size_t n = game.n();
  const DbrOracle& oracle = game.oracle();

  AffineColumnMap map;
  map.objective_slope.assign(n, 0.0);
  map.coeff_base.assign(n + 1, 0.0);
  map.coeff_base[n] = 1.0;
  map.coeff_slope.assign(n + 1, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    map.coeff_slope[i][i] = -(game.reward()[i] - game.cost()[i]);
  }

  const PureStrategy seed = initial_column(oracle, config.initial_columns);
  LinearProgram lp(Sense::kMaximize);
  lp.add_column(1.0, {}, Bounds::unbounded());
  lp.add_column(map.objective(seed));
  const std::vector<double> seed_coeffs = map.coeffs(seed);
  for (std::size_t i = 0; i <= n; ++i) {
    const std::vector<double> row{i < n ? 1.0 : 0.0, seed_coeffs[i]};
    lp.add_row(row, i < n ? Relation::kLessEqual : Relation::kEqual,
               i < n ? game.cost()[i] : 1.0);
  }
  IncrementalLp master(std::move(lp), config.lp_options);

  const double tol = config.reduced_cost_tolerance;
  ColumnPricer pricer = [&](const LpSolution& s) -> std::optional<PricedColumn> {
    const std::span<const double> y(s.duals.data(), n);
    const double mu = s.duals[n];
    auto e = price_minimax_column(y, mu, game, tol);
    if (!e) return std::nullopt;
    PricedColumn col;
    col.objective = map.objective(*e);
    col.coeffs = map.coeffs(*e);
    double w_dot_e = 0.0;
    const auto yc = clamp_nonnegative_duals(y);
    for (std::size_t i = 0; i < n; ++i) {
      if (e->covers(i)) w_dot_e += yc[i] * (game.reward()[i] - game.cost()[i]);
    }
    col.reduced_cost = w_dot_e - mu;
    col.strategy = std::move(*e);
    return col;
  };
  ColGenResult run = run_column_generation(master, pricer, {seed}, n, config);

  ColumnList columns{{1, seed}};
  columns.insert(columns.end(), run.added.begin(), run.added.end());
  MinimaxOutcome out;
  out.value = run.solution.objective;
  out.p = mixture_from(run.solution, columns);
  out.y = normalized(clamp_nonnegative_duals(
      std::span<const double>(run.solution.duals.data(), n)));
  out.diagnostics.absorb(run);
  return out;
}

// ---------------------------------------------------------------------------
// Nash context shared by the NE family

struct NeContext {
  MinimaxOutcome companion;
  std::vector<double> x_tilde;
  std::vector<double> attacker_payoff;  // at x~, near-ties snapped to the max
  NeUtilityCoefficients coefficients;
};

NeContext build_ne_context(const SecurityGame& game, const ColGenConfig& config) {
  const SecurityGame companion = to_zero_sum_companion(game);
  NeContext ctx;
  ctx.companion = run_minimax_master(companion, config);
  const Marginal x = marginal_of(ctx.companion.p);
  ctx.x_tilde.assign(x.values().begin(), x.values().end());
  const std::size_t n = game.n();
  ctx.attacker_payoff.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    ctx.attacker_payoff[i] = attacker_payoff_at(game, ctx.x_tilde, i);
  }
  const double top = *std::max_element(ctx.attacker_payoff.begin(),
                                       ctx.attacker_payoff.end());
  for (double& a : ctx.attacker_payoff) {
    if (a >= top - kTieTolerance * row_scale(game)) a = top;
  }
  ctx.coefficients = ne_utility_coefficients(game, ctx.companion.value);
  return ctx;
}

EquilibriumResult ne_result(const SecurityGame& game, const NeContext& ctx,
                            EquilibriumKind kind, std::vector<double> y) {
  EquilibriumResult r;
  r.kind = kind;
  r.x = Marginal(ctx.x_tilde);
  r.p = ctx.companion.p;
  r.y = AttackerMixed(normalized(std::move(y)));
  fill_utilities(game, r);
  r.value = r.defender_utility;
  r.diagnostics = ctx.companion.diagnostics;
  return r;
}

// Attacker equilibrium strategies: rows (best response to x~), simplex, and
// defender best-response rows by separation. `target` adds gamma . y = U.
EquilibriumResult optimize_over_yne(const SecurityGame& game, const NeContext& ctx,
                                    Sense sense, std::optional<double> target,
                                    EquilibriumKind kind, const ColGenConfig& config) {
  const std::size_t n = game.n();
  const auto& gamma = ctx.coefficients.gamma;
  LinearProgram lp(sense);
  for (std::size_t i = 0; i < n; ++i) lp.add_column(target ? 0.0 : gamma[i]);
  for (std::size_t k = 0; k < n; ++k) {
    lp.add_row(ctx.attacker_payoff, Relation::kGreaterEqual, ctx.attacker_payoff[k]);
  }
  lp.add_row(std::vector<double>(n, 1.0), Relation::kEqual, 1.0);
  if (target) lp.add_row(gamma, Relation::kEqual, *target);
  IncrementalLp inc(std::move(lp), config.lp_options);

  CutSeparator separator = [&](const LpSolution& s) {
    return separate_defbest(s.x, ctx.x_tilde, game);
  };
  ColGenResult run = run_cut_generation(inc, separator, n, config);
  if (!run.solution.optimal()) {
    fail(ErrorKind::kNumericalBreakdown,
         "attacker equilibrium LP is " +
             std::string(lp_status_name(run.solution.status)));
  }
  EquilibriumResult r = ne_result(game, ctx, kind, run.solution.x);
  r.diagnostics.absorb(run, true);
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view equilibrium_kind_name(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::kMinimax: return "minimax";
    case EquilibriumKind::kSse: return "sse";
    case EquilibriumKind::kNeAny: return "ne-any";
    case EquilibriumKind::kNeBest: return "ne-best";
    case EquilibriumKind::kNeWorst: return "ne-worst";
    case EquilibriumKind::kNeTarget: return "ne-target";
  }
  return "unknown";
}

std::optional<EquilibriumKind> parse_equilibrium_kind(std::string_view name) {
  for (auto kind : {EquilibriumKind::kMinimax, EquilibriumKind::kSse,
                    EquilibriumKind::kNeAny, EquilibriumKind::kNeBest,
                    EquilibriumKind::kNeWorst, EquilibriumKind::kNeTarget}) {
    if (equilibrium_kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

void SolverDiagnostics::absorb(const ColGenResult& run, bool rows) {
  iterations += run.iterations;
  (rows ? cuts : columns) += run.added.size();
  lp_solves += run.lp_solves;
  max_duality_gap = std::max(max_duality_gap, run.max_duality_gap);
  trace.records.insert(trace.records.end(), run.trace.records.begin(),
                       run.trace.records.end());
}

PureStrategy best_response_defender(const SecurityGame& game,
                                    std::span<const double> y) {
  if (y.size() != game.n()) {
    fail(ErrorKind::kDimensionMismatch, "attacker strategy length differs from game");
  }
  std::vector<double> w(game.n());
  for (std::size_t i = 0; i < game.n(); ++i) {
    w[i] = y[i] * (game.reward()[i] - game.cost()[i]);
  }
  return game.oracle().best_response(w).strategy;
}

std::size_t best_response_attacker(const SecurityGame& game,
                                   std::span<const double> x,
                                   AttackerTieBreak tie_break) {
  if (x.size() != game.n()) {
    fail(ErrorKind::kDimensionMismatch, "marginal length differs from game");
  }
  double top = -kInfinity;
  for (std::size_t i = 0; i < game.n(); ++i) {
    top = std::max(top, attacker_payoff_at(game, x, i));
  }
  std::size_t best = game.n();
  for (std::size_t i = 0; i < game.n(); ++i) {
    if (attacker_payoff_at(game, x, i) < top - kTieTolerance) continue;
    if (best == game.n()) {
      best = i;
      if (tie_break == AttackerTieBreak::kLowestIndex) break;
    } else if (defender_payoff_at(game, x, i) >
               defender_payoff_at(game, x, best) + kTieTolerance) {
      best = i;
    }
  }
  return best;
}

EquilibriumResult solve_minimax(const SecurityGame& game, const ColGenConfig& config) {
  if (!is_zero_sum(game)) {
    fail(ErrorKind::kNotZeroSum, "minimax needs r_i + zeta_i = 0 and c_i + rho_i = 0");
  }
  MinimaxOutcome m = run_minimax_master(game, config);
  EquilibriumResult r;
  r.kind = EquilibriumKind::kMinimax;
  r.value = m.value;
  r.x = marginal_of(m.p);
  r.p = std::move(m.p);
  r.y = AttackerMixed(std::move(m.y));
  r.diagnostics = std::move(m.diagnostics);
  fill_utilities(game, r);
  return r;
}

EquilibriumResult solve_sse(const SecurityGame& game, const ColGenConfig& config) {
  const std::size_t n = game.n();
  const DbrOracle& oracle = game.oracle();
  const double feas_tol = 1e-9 * row_scale(game);
  SolverDiagnostics diagnostics;
  std::optional<EquilibriumResult> best;

  for (std::size_t k = 0; k < n; ++k) {
    const double dk = game.att_reward()[k] - game.att_cost()[k];
    // Rows: incentive rows for i != k, then the simplex row.
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < n; ++i)
      if (i != k) others.push_back(i);
    const std::size_t rows = others.size() + 1;

    AffineColumnMap phase1;
    phase1.objective_slope.assign(n, 0.0);
    phase1.coeff_base.assign(rows, 0.0);
    phase1.coeff_base.back() = 1.0;
    phase1.coeff_slope.assign(rows, std::vector<double>(n, 0.0));
    for (std::size_t r = 0; r < others.size(); ++r) {
      const std::size_t i = others[r];
      phase1.coeff_slope[r][i] = game.att_reward()[i] - game.att_cost()[i];
      phase1.coeff_slope[r][k] = -dk;
    }
    AffineColumnMap phase2 = phase1;
    phase2.objective_base = game.cost()[k];
    phase2.objective_slope[k] = game.reward()[k] - game.cost()[k];

    const PureStrategy seed = initial_column(oracle, config.initial_columns);
    LinearProgram lp(Sense::kMaximize);
    for (std::size_t r = 0; r < others.size(); ++r) lp.add_column(-1.0);
    const std::size_t seed_index = lp.add_column(phase1.objective(seed));
    const std::vector<double> seed_coeffs = phase1.coeffs(seed);
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<double> row(lp.num_variables(), 0.0);
      row[seed_index] = seed_coeffs[r];
      if (r < others.size()) {
        row[r] = 1.0;
        const std::size_t i = others[r];
        lp.add_row(row, Relation::kGreaterEqual,
                   game.att_reward()[i] - game.att_reward()[k]);
      } else {
        lp.add_row(row, Relation::kEqual, 1.0);
      }
    }
    IncrementalLp master(std::move(lp), config.lp_options);
    const double tol = config.reduced_cost_tolerance;

    ColumnPricer price1 = [&](const LpSolution& s) {
      return price_affine_column(phase1, s, oracle, tol);
    };
    ColGenResult run1 = run_column_generation(master, price1, {seed}, n, config);
    diagnostics.absorb(run1);
    if (run1.solution.objective < -feas_tol) continue;  // k is never a best response

    ColumnList columns{{seed_index, seed}};
    columns.insert(columns.end(), run1.added.begin(), run1.added.end());
    std::vector<PureStrategy> known;
    for (const auto& [index, strategy] : columns) {
      master.set_objective(index, phase2.objective(strategy));
      known.push_back(strategy);
    }
    for (std::size_t r = 0; r < others.size(); ++r) {
      master.set_objective(r, 0.0);
      master.set_bounds(r, Bounds::fixed(0.0));
    }
    ColumnPricer price2 = [&](const LpSolution& s) {
      return price_affine_column(phase2, s, oracle, tol);
    };
    ColGenResult run2 = run_column_generation(master, price2, known, n, config);
    diagnostics.absorb(run2);
    columns.insert(columns.end(), run2.added.begin(), run2.added.end());

    const double utility = run2.solution.objective;
    if (best && utility <= best->value + kTieTolerance) continue;
    EquilibriumResult r;
    r.kind = EquilibriumKind::kSse;
    r.p = mixture_from(run2.solution, columns);
    r.x = marginal_of(r.p);
    r.y = AttackerMixed::pure(n, k);
    r.attacked_target = k;
    fill_utilities(game, r);
    r.value = r.defender_utility;
    best = std::move(r);
  }
  if (!best) {
    fail(ErrorKind::kInternal, "no target is a best response to any commitment");
  }
  best->diagnostics = std::move(diagnostics);
  return std::move(*best);
}

TransformedAttacker apply_transform(const SecurityGame& game,
                                    std::span<const double> y) {
  if (y.size() != game.n()) {
    fail(ErrorKind::kDimensionMismatch, "attacker strategy length differs from game");
  }
  TransformedAttacker t;
  t.input.assign(y.begin(), y.end());
  t.output.resize(game.n());
  for (std::size_t i = 0; i < game.n(); ++i) {
    const double ratio = (game.reward()[i] - game.cost()[i]) /
                         (game.att_reward()[i] - game.att_cost()[i]);
    t.output[i] = ratio * y[i];
    t.lambda += t.output[i];
  }
  for (double& v : t.output) v /= t.lambda;
  return t;
}

NeUtilityCoefficients ne_utility_coefficients(const SecurityGame& game,
                                              double val_bar) {
  NeUtilityCoefficients out;
  out.val_bar = val_bar;
  out.gamma.resize(game.n());
  for (std::size_t i = 0; i < game.n(); ++i) {
    const double ratio = (game.reward()[i] - game.cost()[i]) /
                         (game.att_reward()[i] - game.att_cost()[i]);
    out.gamma[i] = game.cost()[i] + ratio * (val_bar + game.att_reward()[i]);
  }
  return out;
}

EquilibriumResult solve_ne_any(const SecurityGame& game, const ColGenConfig& config) {
  const NeContext ctx = build_ne_context(game, config);
  std::vector<double> y(game.n());
  for (std::size_t i = 0; i < game.n(); ++i) {
    const double inverse = (game.att_reward()[i] - game.att_cost()[i]) /
                           (game.reward()[i] - game.cost()[i]);
    y[i] = inverse * ctx.companion.y[i];
  }
  return ne_result(game, ctx, EquilibriumKind::kNeAny, std::move(y));
}

std::optional<SeparatedCut> separate_defbest(std::span<const double> y,
                                             std::span<const double> x_tilde,
                                             const SecurityGame& game,
                                             double tolerance) {
  const std::size_t n = game.n();
  if (y.size() != n || x_tilde.size() != n) {
    fail(ErrorKind::kDimensionMismatch, "separation input length differs from game");
  }
  std::vector<double> w(n);
  double at_x = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::max(y[i], 0.0) * (game.reward()[i] - game.cost()[i]);
    at_x += w[i] * x_tilde[i];
  }
  OracleAnswer answer = game.oracle().best_response(w);
  const double violation = answer.value - at_x;
  if (violation <= tolerance) return std::nullopt;
  SeparatedCut cut;
  cut.coeffs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double e = answer.strategy.covers(i) ? 1.0 : 0.0;
    cut.coeffs[i] = (game.reward()[i] - game.cost()[i]) * (x_tilde[i] - e);
  }
  cut.relation = Relation::kGreaterEqual;
  cut.rhs = 0.0;
  cut.violation = violation;
  cut.strategy = std::move(answer.strategy);
  return cut;
}

EquilibriumResult solve_ne_extremal(const SecurityGame& game, Extremum sense,
                                    const ColGenConfig& config) {
  const NeContext ctx = build_ne_context(game, config);
  return optimize_over_yne(
      game, ctx, sense == Extremum::kBest ? Sense::kMaximize : Sense::kMinimize,
      std::nullopt,
      sense == Extremum::kBest ? EquilibriumKind::kNeBest : EquilibriumKind::kNeWorst,
      config);
}

EquilibriumResult solve_ne_with_utility(const SecurityGame& game, double target,
                                        const ColGenConfig& config) {
  const NeContext ctx = build_ne_context(game, config);
  const EquilibriumResult best = optimize_over_yne(
      game, ctx, Sense::kMaximize, std::nullopt, EquilibriumKind::kNeBest, config);
  const EquilibriumResult worst = optimize_over_yne(
      game, ctx, Sense::kMinimize, std::nullopt, EquilibriumKind::kNeWorst, config);
  auto gamma_dot = [&](const AttackerMixed& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < game.n(); ++i) s += ctx.coefficients.gamma[i] * y[i];
    return s;
  };
  const double hi = gamma_dot(best.y);
  const double lo = gamma_dot(worst.y);
  if (!std::isfinite(target) || target > hi + kUtilityRangeTolerance ||
      target < lo - kUtilityRangeTolerance) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "target utility " << target << " is outside the equilibrium range ["
        << lo << ", " << hi << "]";
    fail(ErrorKind::kUtilityOutOfRange, msg.str());
  }
  EquilibriumResult r =
      optimize_over_yne(game, ctx, Sense::kMaximize, std::clamp(target, lo, hi),
                        EquilibriumKind::kNeTarget, config);
  r.diagnostics.iterations += best.diagnostics.iterations + worst.diagnostics.iterations;
  r.diagnostics.lp_solves += best.diagnostics.lp_solves + worst.diagnostics.lp_solves;
  r.diagnostics.max_duality_gap =
      std::max({r.diagnostics.max_duality_gap, best.diagnostics.max_duality_gap,
                worst.diagnostics.max_duality_gap});
  return r;
}

MixedStrategy decompose_marginal(std::span<const double> x, const DbrOracle& oracle,
                                 const ColGenConfig& config,
                                 SolverDiagnostics* diagnostics) {
  const std::size_t n = oracle.dimension();
  if (x.size() != n) fail(ErrorKind::kDimensionMismatch, "marginal length differs");
  for (double v : x) {
    if (!std::isfinite(v)) fail(ErrorKind::kInvalidArgument, "marginal is not finite");
  }

  AffineColumnMap map;
  map.objective_slope.assign(n, 0.0);
  map.coeff_base.assign(n + 1, 0.0);
  map.coeff_base[n] = 1.0;
  map.coeff_slope.assign(n + 1, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) map.coeff_slope[i][i] = 1.0;

  // Columns: s+ (n), s- (n), then strategies.
  const PureStrategy seed = initial_column(oracle, config.initial_columns);
  LinearProgram lp(Sense::kMaximize);
  for (std::size_t j = 0; j < 2 * n; ++j) lp.add_column(-1.0);
  const std::size_t seed_index = lp.add_column(0.0);
  const std::vector<double> seed_coeffs = map.coeffs(seed);
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<double> row(lp.num_variables(), 0.0);
    if (i < n) {
      row[i] = 1.0;
      row[n + i] = -1.0;
    }
    row[seed_index] = seed_coeffs[i];
    lp.add_row(row, Relation::kEqual, i < n ? x[i] : 1.0);
  }
  IncrementalLp master(std::move(lp), config.lp_options);
  ColumnPricer pricer = [&](const LpSolution& s) {
    return price_affine_column(map, s, oracle, config.reduced_cost_tolerance);
  };
  ColGenResult run = run_column_generation(master, pricer, {seed}, n, config);
  ColumnList columns{{seed_index, seed}};
  columns.insert(columns.end(), run.added.begin(), run.added.end());
  if (diagnostics) {
    diagnostics->absorb(run);
  }

  const double residual = -run.solution.objective;
  if (residual > kHullTolerance) {
    std::vector<double> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = -run.solution.duals[i];
    std::ostringstream msg;
    msg << "point is not a convex combination of pure strategies (residual "
        << residual << ")";
    throw NotInHullError(msg.str(), residual, std::move(sigma), run.solution.duals[n]);
  }
  // Pin the slacks and re-solve so the mixture reproduces x exactly.
  for (std::size_t j = 0; j < 2 * n; ++j) master.set_bounds(j, Bounds::fixed(0.0));
  const LpSolution& pinned = master.solve();
  if (diagnostics) ++diagnostics->lp_solves;
  return mixture_from(pinned.optimal() ? pinned : run.solution, columns);
}

}  // namespace sgsolve
