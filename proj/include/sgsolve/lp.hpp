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

#ifndef SGSOLVE_LP_HPP_
#define SGSOLVE_LP_HPP_

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sgsolve {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Sense { kMaximize, kMinimize };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view lp_status_name(LpStatus status);

struct Bounds {
  double lower = 0.0;
  double upper = kInfinity;

  static Bounds unbounded() { return {-kInfinity, kInfinity}; }
  static Bounds fixed(double v) { return {v, v}; }
};

// Dense LP: optimize c.x subject to rows a_i.x (<=|=|>=) b_i and per-variable
// bounds. Rows and columns may be appended after construction.
class LinearProgram {
 public:
  explicit LinearProgram(Sense sense = Sense::kMaximize) : sense_(sense) {}

  Sense sense() const { return sense_; }
  std::size_t num_variables() const { return objective_.size(); }
  std::size_t num_rows() const { return rhs_.size(); }

  // Appends a variable with the given coefficients in the existing rows
  // (empty span means all zeros). Returns its index.
  std::size_t add_column(double objective, std::span<const double> coeffs = {},
                         Bounds bounds = {});
  // Appends a row over the existing variables. Returns its index.
  std::size_t add_row(std::span<const double> coeffs, Relation relation,
                      double rhs);

  void set_objective(std::size_t j, double c);
  void set_bounds(std::size_t j, Bounds bounds);
  void set_rhs(std::size_t i, double rhs);

  std::span<const double> objective() const { return objective_; }
  std::span<const double> row(std::size_t i) const { return rows_[i]; }
  double coefficient(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Relation relation(std::size_t i) const { return relations_[i]; }
  double rhs(std::size_t i) const { return rhs_[i]; }
  const Bounds& bounds(std::size_t j) const { return bounds_[j]; }

 private:
  Sense sense_;
  std::vector<double> objective_;
  std::vector<Bounds> bounds_;
  std::vector<std::vector<double>> rows_;
  std::vector<Relation> relations_;
  std::vector<double> rhs_;
};

// One basic column of the internal standard form, named by the entity it
// came from so that a basis survives appending rows and columns.
struct BasisEntry {
  enum class Kind { kVariable, kNegativePart, kRowSlack, kBoundSlack, kArtificial };
  Kind kind;
  std::size_t index;  // variable or row index, per kind

  friend bool operator==(const BasisEntry&, const BasisEntry&) = default;
};
using Basis = std::vector<BasisEntry>;

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
  // Shadow prices: d(objective)/d(rhs_i). For a maximization, <= rows have
  // nonnegative duals and >= rows nonpositive ones; signs flip for
  // minimization.
  std::vector<double> duals;
  // c_j - sum_i duals_i a_ij.
  std::vector<double> reduced_costs;
  std::size_t iterations = 0;
  bool warm_started = false;
  Basis basis;

  // Certificates, filled for optimal solves.
  double dual_objective = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double complementarity = 0.0;
  double duality_gap = 0.0;

  bool optimal() const { return status == LpStatus::kOptimal; }
};

struct SolveOptions {
  double pivot_tolerance = 1e-9;
  double feasibility_tolerance = 1e-8;
  double optimality_tolerance = 1e-9;
  // Pivots between refactorizations of the basis.
  std::size_t refactor_interval = 64;
};

// Two-phase primal simplex on a dense tableau. Dantzig pricing, switching to
// Bland's rule after 5 * (rows + cols) consecutive degenerate pivots. Always
// returns a basic (vertex) solution. Throws kNumericalBreakdown when the
// basis cannot be factorized or the solution fails its own checks.
LpSolution solve_lp(const LinearProgram& lp, const SolveOptions& options = {},
                    const Basis* warm_start = nullptr);

// Owns a program and its last basis; appending rows or columns re-solves
// from the previous basis whenever it is still primal feasible.
class IncrementalLp {
 public:
  explicit IncrementalLp(LinearProgram lp, SolveOptions options = {})
      : lp_(std::move(lp)), options_(options) {}

  const LinearProgram& program() const { return lp_; }
  const SolveOptions& options() const { return options_; }
  void set_options(const SolveOptions& options) { options_ = options; }

  std::size_t add_column(double objective, std::span<const double> coeffs,
                         Bounds bounds = {});
  std::size_t add_row(std::span<const double> coeffs, Relation relation,
                      double rhs);
  void set_bounds(std::size_t j, Bounds bounds);
  void set_objective(std::size_t j, double c);
  void set_rhs(std::size_t i, double rhs);
  // Forgets the stored basis; the next solve starts cold.
  void reset_basis() { basis_.reset(); }

  const LpSolution& solve();
  const LpSolution& last() const { return last_; }
  std::size_t solves() const { return solves_; }

 private:
  LinearProgram lp_;
  SolveOptions options_;
  std::optional<Basis> basis_;
  LpSolution last_;
  std::size_t solves_ = 0;
};

// Writes the program in CPLEX LP text format with variables v0..vK and rows
// r0..rM, one constraint per line.
void write_lp_format(const LinearProgram& lp, std::ostream& out);

}  // namespace sgsolve

#endif  // SGSOLVE_LP_HPP_
