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

#include "sgsolve/colgen.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace sgsolve {

namespace {

constexpr double kDualNoise = 1e-9;
constexpr double kMonotoneSlack = 1e-7;

SolveOptions tightened(const SolveOptions& base) {
  SolveOptions tight = base;
  tight.pivot_tolerance = std::min(base.pivot_tolerance, 1e-11);
  tight.optimality_tolerance = std::min(base.optimality_tolerance, 1e-11);
  return tight;
}

void account(ColGenResult& result, const LpSolution& s) {
  ++result.lp_solves;
  if (s.optimal()) result.max_duality_gap = std::max(result.max_duality_gap, s.duality_gap);
}

}  // namespace

bool ColGenTrace::monotone_non_decreasing(double slack) const {
  for (std::size_t i = 1; i < records.size(); ++i) {
    const double prev = records[i - 1].master_objective;
    if (records[i].master_objective < prev - slack * (1.0 + std::abs(prev))) return false;
  }
  return true;
}

bool ColGenTrace::monotone_non_increasing(double slack) const {
  for (std::size_t i = 1; i < records.size(); ++i) {
    const double prev = records[i - 1].master_objective;
    if (records[i].master_objective > prev + slack * (1.0 + std::abs(prev))) return false;
  }
  return true;
}

void ColGenTrace::write_jsonl(std::ostream& out) const {
  const auto old = out.precision(17);
  for (const auto& r : records) {
    out << "{\"iteration\":" << r.iteration << ",\"objective\":" << r.master_objective
        << ",\"pricing\":" << r.pricing_value << ",\"added\":\"" << r.added << "\"}\n";
  }
  out.precision(old);
}

ColGenResult run_column_generation(IncrementalLp& master,
                                   const ColumnPricer& pricer,
                                   std::vector<PureStrategy> known,
                                   std::size_t n, const ColGenConfig& config) {
  ColGenResult result;
  std::unordered_set<PureStrategy, PureStrategyHash> columns(known.begin(), known.end());
  const std::size_t cap = config.iteration_cap(n);
  const SolveOptions base_options = master.options();

  auto solve = [&]() -> const LpSolution& {
    const LpSolution& s = master.solve();
    account(result, s);
    if (!s.optimal()) {
      fail(ErrorKind::kNumericalBreakdown,
           "restricted master is " + std::string(lp_status_name(s.status)));
    }
    return s;
  };

  solve();
  while (true) {
    std::optional<PricedColumn> column = pricer(master.last());
    if (column && columns.count(column->strategy)) {
      // A known column priced as improving: float trouble in the master.
      master.set_options(tightened(base_options));
      master.reset_basis();
      solve();
      column = pricer(master.last());
      master.set_options(base_options);
      if (column && columns.count(column->strategy)) {
        fail(ErrorKind::kNumericalBreakdown,
             "pricing returned existing column " + column->strategy.to_string());
      }
    }
    ColGenRecord record;
    record.iteration = result.iterations;
    record.master_objective = master.last().objective;
    if (!result.trace.records.empty()) {
      const double prev = result.trace.records.back().master_objective;
      if (record.master_objective < prev - kMonotoneSlack * (1.0 + std::abs(prev))) {
        fail(ErrorKind::kNumericalBreakdown, "restricted master objective decreased");
      }
    }
    if (!column) {
      result.trace.records.push_back(std::move(record));
      break;
    }
    record.pricing_value = column->reduced_cost;
    record.added = column->strategy.to_string();
    result.trace.records.push_back(std::move(record));

    if (result.iterations >= cap) {
      result.solution = master.last();
      std::ostringstream msg;
      msg << "column generation did not converge in " << cap << " rounds";
      throw IterationLimitError(msg.str(), std::move(result));
    }
    ++result.iterations;
    const std::size_t index =
        master.add_column(column->objective, column->coeffs, Bounds{});
    columns.insert(column->strategy);
    result.added.emplace_back(index, column->strategy);
    solve();
  }
  result.solution = master.last();
  return result;
}

ColGenResult run_cut_generation(IncrementalLp& lp, const CutSeparator& separator,
                                std::size_t n, const ColGenConfig& config) {
  ColGenResult result;
  std::unordered_set<PureStrategy, PureStrategyHash> cuts;
  const std::size_t cap = config.iteration_cap(n);
  const SolveOptions base_options = lp.options();

  auto solve = [&]() -> bool {
    const LpSolution& s = lp.solve();
    account(result, s);
    return s.optimal();
  };

  if (!solve()) {
    result.solution = lp.last();
    return result;
  }
  while (true) {
    std::optional<SeparatedCut> cut = separator(lp.last());
    if (cut && cuts.count(cut->strategy)) {
      lp.set_options(tightened(base_options));
      lp.reset_basis();
      if (!solve()) break;
      cut = separator(lp.last());
      lp.set_options(base_options);
      if (cut && cuts.count(cut->strategy)) {
        fail(ErrorKind::kNumericalBreakdown,
             "separation returned existing row " + cut->strategy.to_string());
      }
    }
    ColGenRecord record;
    record.iteration = result.iterations;
    record.master_objective = lp.last().objective;
    if (!cut) {
      result.trace.records.push_back(std::move(record));
      break;
    }
    record.pricing_value = cut->violation;
    record.added = cut->strategy.to_string();
    result.trace.records.push_back(std::move(record));
    if (result.iterations >= cap) {
      result.solution = lp.last();
      std::ostringstream msg;
      msg << "cut generation did not converge in " << cap << " rounds";
      throw IterationLimitError(msg.str(), std::move(result));
    }
    ++result.iterations;
    lp.add_row(cut->coeffs, cut->relation, cut->rhs);
    cuts.insert(cut->strategy);
    result.added.emplace_back(lp.program().num_rows() - 1, cut->strategy);
    if (!solve()) break;
  }
  result.solution = lp.last();
  return result;
}

double AffineColumnMap::objective(const PureStrategy& e) const {
  double v = objective_base;
  for (std::size_t t = 0; t < e.size(); ++t) {
    if (e.covers(t)) v += objective_slope[t];
  }
  return v;
}

std::vector<double> AffineColumnMap::coeffs(const PureStrategy& e) const {
  std::vector<double> a = coeff_base;
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t t = 0; t < e.size(); ++t) {
      if (e.covers(t)) a[r] += coeff_slope[r][t];
    }
  }
  return a;
}

std::optional<PricedColumn> price_affine_column(const AffineColumnMap& map,
                                                const LpSolution& master,
                                                const DbrOracle& oracle,
                                                double tolerance) {
  const std::size_t n = map.objective_slope.size();
  const std::size_t rows = map.coeff_base.size();
  if (master.duals.size() != rows) {
    fail(ErrorKind::kDimensionMismatch, "dual vector differs from master rows");
  }
  double base = map.objective_base;
  for (std::size_t r = 0; r < rows; ++r) base -= master.duals[r] * map.coeff_base[r];
  std::vector<double> w(n);
  for (std::size_t t = 0; t < n; ++t) {
    double slope = map.objective_slope[t];
    for (std::size_t r = 0; r < rows; ++r) {
      slope -= master.duals[r] * map.coeff_slope[r][t];
    }
    w[t] = slope;
  }
  OracleAnswer answer = oracle.best_response(w);
  const double reduced = answer.value + base;
  if (reduced <= tolerance) return std::nullopt;
  PricedColumn col;
  col.objective = map.objective(answer.strategy);
  col.coeffs = map.coeffs(answer.strategy);
  col.reduced_cost = reduced;
  col.strategy = std::move(answer.strategy);
  return col;
}

std::vector<double> clamp_nonnegative_duals(std::span<const double> y) {
  std::vector<double> out(y.begin(), y.end());
  for (double& v : out) {
    if (v >= 0.0) continue;
    if (v > -kDualNoise) {
      v = 0.0;
    } else {
      std::ostringstream msg;
      msg << "master dual " << v << " is negative beyond float noise";
      fail(ErrorKind::kNumericalBreakdown, msg.str());
    }
  }
  return out;
}

std::optional<PureStrategy> price_minimax_column(std::span<const double> y,
                                                 double mu,
                                                 const SecurityGame& game,
                                                 double tolerance) {
  if (y.size() != game.n()) {
    fail(ErrorKind::kDimensionMismatch, "dual vector differs from target count");
  }
  const std::vector<double> yc = clamp_nonnegative_duals(y);
  std::vector<double> w(game.n());
  for (std::size_t i = 0; i < game.n(); ++i) {
    w[i] = yc[i] * (game.reward()[i] - game.cost()[i]);
  }
  OracleAnswer answer = game.oracle().best_response(w);
  if (answer.value - mu <= tolerance) return std::nullopt;
  return std::move(answer.strategy);
}

PureStrategy initial_column(const DbrOracle& oracle, InitialColumnPolicy policy) {
  if (policy == InitialColumnPolicy::kAuto && oracle.capabilities().contains_empty) {
    return PureStrategy::zeros(oracle.dimension());
  }
  const std::vector<double> ones(oracle.dimension(), 1.0);
  return oracle.best_response(ones).strategy;
}

}  // namespace sgsolve
