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

#include "sgsolve/lp.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "sgsolve/error.hpp"

namespace sgsolve {

std::string_view lp_status_name(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "Optimal";
    case LpStatus::kInfeasible: return "Infeasible";
    case LpStatus::kUnbounded: return "Unbounded";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// LinearProgram

std::size_t LinearProgram::add_column(double objective,
                                      std::span<const double> coeffs,
                                      Bounds bounds) {
  if (!coeffs.empty() && coeffs.size() != rows_.size()) {
    fail(ErrorKind::kDimensionMismatch, "column length differs from row count");
  }
  if (!std::isfinite(objective)) {
    fail(ErrorKind::kInvalidArgument, "objective coefficient is not finite");
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const double a = coeffs.empty() ? 0.0 : coeffs[i];
    if (!std::isfinite(a)) fail(ErrorKind::kInvalidArgument, "coefficient is not finite");
    rows_[i].push_back(a);
  }
  objective_.push_back(objective);
  bounds_.push_back(bounds);
  return objective_.size() - 1;
}

std::size_t LinearProgram::add_row(std::span<const double> coeffs,
                                   Relation relation, double rhs) {
  if (coeffs.size() != objective_.size()) {
    fail(ErrorKind::kDimensionMismatch, "row length differs from variable count");
  }
  for (double a : coeffs) {
    if (!std::isfinite(a)) fail(ErrorKind::kInvalidArgument, "coefficient is not finite");
  }
  if (!std::isfinite(rhs)) fail(ErrorKind::kInvalidArgument, "rhs is not finite");
  rows_.emplace_back(coeffs.begin(), coeffs.end());
  relations_.push_back(relation);
  rhs_.push_back(rhs);
  return rhs_.size() - 1;
}

void LinearProgram::set_objective(std::size_t j, double c) {
  objective_.at(j) = c;
}

void LinearProgram::set_bounds(std::size_t j, Bounds bounds) {
  bounds_.at(j) = bounds;
}

void LinearProgram::set_rhs(std::size_t i, double rhs) { rhs_.at(i) = rhs; }

// ---------------------------------------------------------------------------
// Standard form: maximize c.z s.t. A z = b, z >= 0, b >= 0. Every row also
// owns an artificial identity column, so B^-1 can be read off the tableau.

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct VariableMap {
  double offset = 0.0;
  double sign = 1.0;          // x = offset + sign * z_col - z_neg
  std::size_t col = kNone;
  std::size_t neg_col = kNone;
};

struct StandardForm {
  std::size_t m = 0;
  std::size_t cols = 0;
  std::vector<std::vector<double>> rows;  // m rows of `cols` entries
  std::vector<double> b;
  std::vector<double> cost;
  std::vector<BasisEntry> col_id;
  std::vector<bool> is_artificial;
  std::vector<double> row_sign;
  std::vector<std::size_t> row_of_lp;     // std row -> LP row or kNone
  std::vector<std::size_t> std_row_of_lp; // LP row -> std row
  std::vector<std::size_t> slack_col;     // per std row, kNone for equality
  std::vector<std::size_t> artificial_col;
  std::vector<VariableMap> vars;
  bool bounds_inconsistent = false;
};

std::size_t new_column(StandardForm& f, BasisEntry id, double cost) {
  for (auto& row : f.rows) row.push_back(0.0);
  f.cost.push_back(cost);
  f.col_id.push_back(id);
  f.is_artificial.push_back(id.kind == BasisEntry::Kind::kArtificial);
  return f.cols++;
}

StandardForm build_standard_form(const LinearProgram& lp) {
  StandardForm f;
  const double sense = lp.sense() == Sense::kMaximize ? 1.0 : -1.0;
  const std::size_t nv = lp.num_variables();
  const std::size_t nr = lp.num_rows();
  f.vars.resize(nv);

  // Rows: LP rows first, then one bound row per boxed variable.
  std::vector<std::size_t> bound_row_var;
  for (std::size_t j = 0; j < nv; ++j) {
    const Bounds& bd = lp.bounds(j);
    if (bd.lower > bd.upper) f.bounds_inconsistent = true;
    if (std::isfinite(bd.lower) && std::isfinite(bd.upper)) bound_row_var.push_back(j);
  }
  f.m = nr + bound_row_var.size();
  f.rows.assign(f.m, {});
  f.b.assign(f.m, 0.0);
  f.row_sign.assign(f.m, 1.0);
  f.row_of_lp.assign(f.m, kNone);
  f.std_row_of_lp.assign(nr, kNone);
  f.slack_col.assign(f.m, kNone);
  f.artificial_col.assign(f.m, kNone);
  for (std::size_t i = 0; i < nr; ++i) {
    f.row_of_lp[i] = i;
    f.std_row_of_lp[i] = i;
    f.b[i] = lp.rhs(i);
  }

  for (std::size_t j = 0; j < nv; ++j) {
    const Bounds& bd = lp.bounds(j);
    const double c = lp.objective()[j] * sense;
    VariableMap& vm = f.vars[j];
    if (std::isfinite(bd.lower)) {
      vm.offset = bd.lower;
      vm.sign = 1.0;
    } else if (std::isfinite(bd.upper)) {
      vm.offset = bd.upper;
      vm.sign = -1.0;
    }
    vm.col = new_column(f, {BasisEntry::Kind::kVariable, j}, c * vm.sign);
    if (!std::isfinite(bd.lower) && !std::isfinite(bd.upper)) {
      vm.neg_col = new_column(f, {BasisEntry::Kind::kNegativePart, j}, -c);
    }
    for (std::size_t i = 0; i < nr; ++i) {
      const double a = lp.coefficient(i, j);
      if (a == 0.0) continue;
      f.rows[i][vm.col] = a * vm.sign;
      if (vm.neg_col != kNone) f.rows[i][vm.neg_col] = -a;
      f.b[i] -= a * vm.offset;
    }
  }
  for (std::size_t r = 0; r < bound_row_var.size(); ++r) {
    const std::size_t j = bound_row_var[r];
    const std::size_t row = nr + r;
    f.rows[row][f.vars[j].col] = 1.0;
    f.b[row] = lp.bounds(j).upper - lp.bounds(j).lower;
    f.slack_col[row] = new_column(f, {BasisEntry::Kind::kBoundSlack, j}, 0.0);
    f.rows[row][f.slack_col[row]] = 1.0;
  }
  for (std::size_t i = 0; i < nr; ++i) {
    if (lp.relation(i) == Relation::kEqual) continue;
    f.slack_col[i] = new_column(f, {BasisEntry::Kind::kRowSlack, i}, 0.0);
    f.rows[i][f.slack_col[i]] = lp.relation(i) == Relation::kLessEqual ? 1.0 : -1.0;
  }
  for (std::size_t r = 0; r < f.m; ++r) {
    if (f.b[r] < 0.0) {
      f.row_sign[r] = -1.0;
      f.b[r] = -f.b[r];
      for (double& a : f.rows[r]) a = -a;
    }
  }
  for (std::size_t r = 0; r < f.m; ++r) {
    f.artificial_col[r] = new_column(f, {BasisEntry::Kind::kArtificial, r}, 0.0);
    f.rows[r][f.artificial_col[r]] = 1.0;
  }
  return f;
}

class Tableau {
 public:
  Tableau(const StandardForm& form, const SolveOptions& options)
      : f_(form), opt_(options), width_(form.cols + 1),
        t_(form.m * width_, 0.0), basis_(form.m, kNone),
        allowed_(form.cols, true) {}

  double& at(std::size_t r, std::size_t j) { return t_[r * width_ + j]; }
  double rhs(std::size_t r) const { return t_[r * width_ + f_.cols]; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  std::size_t iterations() const { return iterations_; }
  const std::vector<double>& reduced() const { return d_; }

  void forbid_artificials() {
    for (std::size_t j = 0; j < f_.cols; ++j) allowed_[j] = !f_.is_artificial[j];
  }

  // Recomputes B^-1 [A | b] for the given basic columns with Gauss-Jordan
  // elimination and partial pivoting. Returns false when B is singular.
  bool factor(const std::vector<std::size_t>& basic_cols) {
    const std::size_t m = f_.m;
    for (std::size_t r = 0; r < m; ++r) {
      std::copy(f_.rows[r].begin(), f_.rows[r].end(), t_.begin() + r * width_);
      at(r, f_.cols) = f_.b[r];
    }
    std::vector<bool> done(m, false);
    std::vector<std::size_t> new_basis(m, kNone);
    for (std::size_t col : basic_cols) {
      std::size_t pr = kNone;
      double best = kSingular;
      for (std::size_t r = 0; r < m; ++r) {
        if (done[r]) continue;
        const double a = std::abs(at(r, col));
        if (a > best) {
          best = a;
          pr = r;
        }
      }
      if (pr == kNone) return false;
      eliminate(pr, col);
      done[pr] = true;
      new_basis[pr] = col;
    }
    basis_ = std::move(new_basis);
    pivots_since_factor_ = 0;
    clamp_rhs();
    return true;
  }

  void identity_start() {
    for (std::size_t r = 0; r < f_.m; ++r) {
      std::copy(f_.rows[r].begin(), f_.rows[r].end(), t_.begin() + r * width_);
      at(r, f_.cols) = f_.b[r];
      const std::size_t slack = f_.slack_col[r];
      basis_[r] = (slack != kNone && f_.rows[r][slack] == 1.0) ? slack
                                                               : f_.artificial_col[r];
    }
  }

  bool primal_feasible() const {
    for (std::size_t r = 0; r < f_.m; ++r) {
      if (rhs(r) < -opt_.feasibility_tolerance) return false;
    }
    return true;
  }

  void price(const std::vector<double>& cost) {
    d_ = cost;
    for (std::size_t r = 0; r < f_.m; ++r) {
      const double cb = cost[basis_[r]];
      if (cb == 0.0) continue;
      const double* row = &t_[r * width_];
      for (std::size_t j = 0; j < f_.cols; ++j) d_[j] -= cb * row[j];
    }
  }

  double objective(const std::vector<double>& cost) const {
    double z = 0.0;
    for (std::size_t r = 0; r < f_.m; ++r) z += cost[basis_[r]] * rhs(r);
    return z;
  }

  enum class Outcome { kOptimal, kUnbounded };

  Outcome optimize(const std::vector<double>& cost) {
    price(cost);
    const std::size_t m = f_.m;
    const std::size_t n = f_.cols;
    const std::size_t degenerate_limit = 5 * (m + n);
    const std::size_t iteration_cap = 200 * (m + n) + 10000;
    std::vector<bool> is_basic(n, false);
    std::size_t degenerate_run = 0;
    bool bland = false;
    bool confirmed = false;
    while (true) {
      if (pivots_since_factor_ >= opt_.refactor_interval) refresh(cost);
      std::fill(is_basic.begin(), is_basic.end(), false);
      for (std::size_t col : basis_) is_basic[col] = true;

      std::size_t enter = kNone;
      double best = opt_.optimality_tolerance;
      for (std::size_t j = 0; j < n; ++j) {
        if (!allowed_[j] || is_basic[j] || d_[j] <= opt_.optimality_tolerance) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (d_[j] > best) {
          best = d_[j];
          enter = j;
        }
      }
      if (enter == kNone) {
        // Confirm optimality on a freshly factored tableau.
        if (confirmed || pivots_since_factor_ == 0) return Outcome::kOptimal;
        refresh(cost);
        confirmed = true;
        continue;
      }
      confirmed = false;

      std::size_t leave = kNone;
      double ratio = kInfinity;
      for (std::size_t r = 0; r < m; ++r) {
        const double a = at(r, enter);
        if (a <= opt_.pivot_tolerance) continue;
        const double q = std::max(rhs(r), 0.0) / a;
        if (leave == kNone || q < ratio - 1e-12 * (1.0 + ratio)) {
          leave = r;
          ratio = q;
        } else if (q <= ratio + 1e-12 * (1.0 + ratio)) {
          const bool better = bland ? basis_[r] < basis_[leave]
                                    : a > at(leave, enter);
          if (better) {
            leave = r;
            ratio = std::min(ratio, q);
          }
        }
      }
      if (leave == kNone) return Outcome::kUnbounded;

      if (ratio * d_[enter] <= 1e-12) {
        if (++degenerate_run > degenerate_limit) bland = true;
      } else {
        degenerate_run = 0;
      }
      pivot(leave, enter);
      if (++iterations_ > iteration_cap) {
        fail(ErrorKind::kNumericalBreakdown, "simplex iteration cap reached");
      }
    }
  }

  // Pivots basic artificials out of the basis where possible.
  void expel_artificials() {
    for (std::size_t r = 0; r < f_.m; ++r) {
      if (!f_.is_artificial[basis_[r]]) continue;
      std::size_t best_col = kNone;
      double best = opt_.pivot_tolerance;
      for (std::size_t j = 0; j < f_.cols; ++j) {
        if (f_.is_artificial[j]) continue;
        const double a = std::abs(at(r, j));
        if (a > best) {
          best = a;
          best_col = j;
        }
      }
      if (best_col != kNone) pivot(r, best_col);
    }
  }

  void refresh(const std::vector<double>& cost) {
    if (!factor(std::vector<std::size_t>(basis_))) {
      fail(ErrorKind::kNumericalBreakdown, "basis matrix became singular");
    }
    price(cost);
  }

 private:
  static constexpr double kSingular = 1e-11;

  void eliminate(std::size_t pr, std::size_t col) {
    double* prow = &t_[pr * width_];
    const double inv = 1.0 / prow[col];
    for (std::size_t j = 0; j < width_; ++j) prow[j] *= inv;
    prow[col] = 1.0;
    for (std::size_t r = 0; r < f_.m; ++r) {
      if (r == pr) continue;
      double* row = &t_[r * width_];
      const double factor = row[col];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) row[j] -= factor * prow[j];
      row[col] = 0.0;
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    eliminate(r, col);
    const double dj = d_[col];
    if (dj != 0.0) {
      const double* prow = &t_[r * width_];
      for (std::size_t j = 0; j < f_.cols; ++j) d_[j] -= dj * prow[j];
      d_[col] = 0.0;
    }
    basis_[r] = col;
    ++pivots_since_factor_;
    clamp_rhs();
  }

  void clamp_rhs() {
    for (std::size_t r = 0; r < f_.m; ++r) {
      double& v = at(r, f_.cols);
      if (v < 0.0 && v > -opt_.feasibility_tolerance) v = 0.0;
    }
  }

  const StandardForm& f_;
  const SolveOptions& opt_;
  std::size_t width_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
  std::vector<double> d_;
  std::size_t iterations_ = 0;
  std::size_t pivots_since_factor_ = 0;
};

std::vector<std::size_t> map_warm_basis(const StandardForm& f,
                                        const Basis& warm) {
  if (warm.size() != f.m) return {};
  std::vector<std::size_t> cols;
  cols.reserve(warm.size());
  for (const BasisEntry& entry : warm) {
    if (entry.kind == BasisEntry::Kind::kArtificial) return {};
    auto it = std::find(f.col_id.begin(), f.col_id.end(), entry);
    if (it == f.col_id.end()) return {};
    cols.push_back(static_cast<std::size_t>(it - f.col_id.begin()));
  }
  std::vector<std::size_t> sorted = cols;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};
  return cols;
}

void fill_certificates(const LinearProgram& lp, LpSolution& sol) {
  const std::size_t nv = lp.num_variables();
  const std::size_t nr = lp.num_rows();
  const bool maximize = lp.sense() == Sense::kMaximize;
  double primal_res = 0.0, dual_res = 0.0, comp = 0.0;
  double dual_obj = 0.0;

  for (std::size_t i = 0; i < nr; ++i) {
    double activity = 0.0;
    for (std::size_t j = 0; j < nv; ++j) activity += lp.coefficient(i, j) * sol.x[j];
    const double slack = lp.rhs(i) - activity;  // >= 0 for <= rows
    const double y = sol.duals[i];
    // Sign convention in "maximize" terms.
    const double ymax = maximize ? y : -y;
    switch (lp.relation(i)) {
      case Relation::kLessEqual:
        primal_res = std::max(primal_res, -slack);
        dual_res = std::max(dual_res, -ymax);
        break;
      case Relation::kGreaterEqual:
        primal_res = std::max(primal_res, slack);
        dual_res = std::max(dual_res, ymax);
        break;
      case Relation::kEqual:
        primal_res = std::max(primal_res, std::abs(slack));
        break;
    }
    comp = std::max(comp, std::abs(y * slack));
    dual_obj += y * lp.rhs(i);
  }
  for (std::size_t j = 0; j < nv; ++j) {
    const Bounds& bd = lp.bounds(j);
    const double xj = sol.x[j];
    primal_res = std::max(primal_res, bd.lower - xj);
    primal_res = std::max(primal_res, xj - bd.upper);
    const double d = sol.reduced_costs[j];
    const double dmax = maximize ? d : -d;
    // In maximize terms d > 0 pushes x to its upper bound, d < 0 to its lower.
    const double bound = dmax > 0.0 ? bd.upper : bd.lower;
    if (std::isfinite(bound)) {
      dual_obj += d * bound;
      comp = std::max(comp, std::abs(d * (xj - bound)));
    } else {
      dual_res = std::max(dual_res, std::abs(d));
    }
  }
  sol.dual_objective = dual_obj;
  sol.primal_residual = std::max(primal_res, 0.0);
  sol.dual_residual = std::max(dual_res, 0.0);
  sol.complementarity = comp;
  sol.duality_gap = std::abs(dual_obj - sol.objective);
}

LpSolution solve_once(const LinearProgram& lp, const SolveOptions& options,
                      const Basis* warm_start) {
  LpSolution sol;
  const StandardForm f = build_standard_form(lp);
  if (f.bounds_inconsistent) {
    sol.status = LpStatus::kInfeasible;
    return sol;
  }
  Tableau tab(f, options);

  bool warm = false;
  if (warm_start != nullptr) {
    const auto cols = map_warm_basis(f, *warm_start);
    if (!cols.empty() && tab.factor(cols) && tab.primal_feasible()) warm = true;
  }
  if (!warm) {
    tab.identity_start();
    std::vector<double> phase1(f.cols, 0.0);
    for (std::size_t r = 0; r < f.m; ++r) phase1[f.artificial_col[r]] = -1.0;
    tab.optimize(phase1);
    double scale = 1.0;
    for (double v : f.b) scale = std::max(scale, std::abs(v));
    if (tab.objective(phase1) < -options.feasibility_tolerance * scale) {
      sol.status = LpStatus::kInfeasible;
      sol.iterations = tab.iterations();
      return sol;
    }
    tab.expel_artificials();
  }
  tab.forbid_artificials();
  if (tab.optimize(f.cost) == Tableau::Outcome::kUnbounded) {
    sol.status = LpStatus::kUnbounded;
    sol.iterations = tab.iterations();
    sol.objective = lp.sense() == Sense::kMaximize ? kInfinity : -kInfinity;
    return sol;
  }
  tab.refresh(f.cost);
  if (!tab.primal_feasible()) {
    fail(ErrorKind::kNumericalBreakdown, "optimal basis lost primal feasibility");
  }

  sol.status = LpStatus::kOptimal;
  sol.iterations = tab.iterations();
  sol.warm_started = warm;

  std::vector<double> z(f.cols, 0.0);
  for (std::size_t r = 0; r < f.m; ++r) z[tab.basis()[r]] = std::max(tab.rhs(r), 0.0);
  const std::size_t nv = lp.num_variables();
  sol.x.assign(nv, 0.0);
  for (std::size_t j = 0; j < nv; ++j) {
    const VariableMap& vm = f.vars[j];
    double v = vm.offset + vm.sign * z[vm.col];
    if (vm.neg_col != kNone) v -= z[vm.neg_col];
    sol.x[j] = v;
  }
  double obj = 0.0;
  for (std::size_t j = 0; j < nv; ++j) obj += lp.objective()[j] * sol.x[j];
  sol.objective = obj;

  // y_std = c_B B^-1 = -(reduced cost of the artificial columns).
  const double sense = lp.sense() == Sense::kMaximize ? 1.0 : -1.0;
  sol.duals.assign(lp.num_rows(), 0.0);
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    const std::size_t r = f.std_row_of_lp[i];
    const double y_std = -tab.reduced()[f.artificial_col[r]];
    sol.duals[i] = sense * f.row_sign[r] * y_std;
  }
  sol.reduced_costs.assign(nv, 0.0);
  for (std::size_t j = 0; j < nv; ++j) {
    double d = lp.objective()[j];
    for (std::size_t i = 0; i < lp.num_rows(); ++i) {
      d -= sol.duals[i] * lp.coefficient(i, j);
    }
    sol.reduced_costs[j] = d;
  }
  sol.basis.reserve(f.m);
  for (std::size_t r = 0; r < f.m; ++r) sol.basis.push_back(f.col_id[tab.basis()[r]]);
  fill_certificates(lp, sol);
  return sol;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const SolveOptions& options,
                    const Basis* warm_start) {
  try {
    return solve_once(lp, options, warm_start);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kNumericalBreakdown || warm_start == nullptr) throw;
  }
  // A warm basis that degenerated numerically gets one cold retry.
  return solve_once(lp, options, nullptr);
}

// ---------------------------------------------------------------------------
// IncrementalLp

std::size_t IncrementalLp::add_column(double objective,
                                      std::span<const double> coeffs,
                                      Bounds bounds) {
  const bool boxed = std::isfinite(bounds.lower) && std::isfinite(bounds.upper);
  const std::size_t j = lp_.add_column(objective, coeffs, bounds);
  // A new boxed variable brings a bound row whose slack starts basic.
  if (basis_ && boxed) basis_->push_back({BasisEntry::Kind::kBoundSlack, j});
  return j;
}

std::size_t IncrementalLp::add_row(std::span<const double> coeffs,
                                   Relation relation, double rhs) {
  const std::size_t i = lp_.add_row(coeffs, relation, rhs);
  if (basis_) {
    if (relation == Relation::kEqual) {
      basis_.reset();
    } else {
      basis_->push_back({BasisEntry::Kind::kRowSlack, i});
    }
  }
  return i;
}

void IncrementalLp::set_bounds(std::size_t j, Bounds bounds) {
  const Bounds old = lp_.bounds(j);
  lp_.set_bounds(j, bounds);
  if (!basis_) return;
  const bool old_boxed = std::isfinite(old.lower) && std::isfinite(old.upper);
  const bool new_boxed = std::isfinite(bounds.lower) && std::isfinite(bounds.upper);
  if (std::isfinite(old.lower) != std::isfinite(bounds.lower) ||
      (!std::isfinite(old.lower) &&
       std::isfinite(old.upper) != std::isfinite(bounds.upper))) {
    basis_.reset();
    return;
  }
  const BasisEntry slack{BasisEntry::Kind::kBoundSlack, j};
  if (!old_boxed && new_boxed) {
    basis_->push_back(slack);
  } else if (old_boxed && !new_boxed) {
    auto it = std::find(basis_->begin(), basis_->end(), slack);
    if (it == basis_->end()) {
      basis_.reset();
    } else {
      basis_->erase(it);
    }
  }
}

void IncrementalLp::set_objective(std::size_t j, double c) {
  lp_.set_objective(j, c);
}

void IncrementalLp::set_rhs(std::size_t i, double rhs) { lp_.set_rhs(i, rhs); }

const LpSolution& IncrementalLp::solve() {
  last_ = solve_lp(lp_, options_, basis_ ? &*basis_ : nullptr);
  ++solves_;
  if (last_.optimal() &&
      std::none_of(last_.basis.begin(), last_.basis.end(), [](const BasisEntry& e) {
        return e.kind == BasisEntry::Kind::kArtificial;
      })) {
    basis_ = last_.basis;
  } else {
    basis_.reset();
  }
  return last_;
}

// ---------------------------------------------------------------------------
// Text dump

namespace {

void write_term(std::ostream& out, double coef, std::size_t j, bool first) {
  if (coef < 0.0) {
    out << (first ? " -" : " - ");
  } else {
    out << (first ? " " : " + ");
  }
  out << std::abs(coef) << " v" << j;
}

}  // namespace

void write_lp_format(const LinearProgram& lp, std::ostream& out) {
  const auto old_precision = out.precision(17);
  out << (lp.sense() == Sense::kMaximize ? "Maximize\n" : "Minimize\n");
  out << " obj:";
  bool first = true;
  for (std::size_t j = 0; j < lp.num_variables(); ++j) {
    if (lp.objective()[j] == 0.0) continue;
    write_term(out, lp.objective()[j], j, first);
    first = false;
  }
  if (first) out << " 0 v0";
  out << "\nSubject To\n";
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    out << " r" << i << ":";
    bool first_term = true;
    for (std::size_t j = 0; j < lp.num_variables(); ++j) {
      const double a = lp.coefficient(i, j);
      if (a == 0.0) continue;
      write_term(out, a, j, first_term);
      first_term = false;
    }
    if (first_term) out << " 0 v0";
    switch (lp.relation(i)) {
      case Relation::kLessEqual: out << " <= "; break;
      case Relation::kEqual: out << " = "; break;
      case Relation::kGreaterEqual: out << " >= "; break;
    }
    out << lp.rhs(i) << "\n";
  }
  out << "Bounds\n";
  for (std::size_t j = 0; j < lp.num_variables(); ++j) {
    const Bounds& bd = lp.bounds(j);
    const bool lo = std::isfinite(bd.lower);
    const bool hi = std::isfinite(bd.upper);
    if (!lo && !hi) {
      out << " v" << j << " free\n";
    } else if (lo && hi) {
      out << " " << bd.lower << " <= v" << j << " <= " << bd.upper << "\n";
    } else if (lo) {
      out << " v" << j << " >= " << bd.lower << "\n";
    } else {
      out << " -inf <= v" << j << " <= " << bd.upper << "\n";
    }
  }
  out << "End\n";
  out.precision(old_precision);
}

}  // namespace sgsolve
