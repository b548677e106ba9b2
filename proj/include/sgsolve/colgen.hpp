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

#ifndef SGSOLVE_COLGEN_HPP_
#define SGSOLVE_COLGEN_HPP_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgsolve/error.hpp"
#include "sgsolve/game.hpp"
#include "sgsolve/lp.hpp"
#include "sgsolve/set_system.hpp"

namespace sgsolve {

enum class InitialColumnPolicy {
  // The all-zero strategy when E contains it, otherwise best_response(1).
  kAuto,
  // Always one call best_response(1).
  kBestResponseToOnes,
};

struct ColGenConfig {
  double reduced_cost_tolerance = 1e-7;
  // Pricing rounds before kIterationLimit; unset means 10 * n + 1000.
  std::optional<std::size_t> max_iterations;
  InitialColumnPolicy initial_columns = InitialColumnPolicy::kAuto;
  SolveOptions lp_options;

  std::size_t iteration_cap(std::size_t n) const {
    return max_iterations ? *max_iterations : 10 * n + 1000;
  }
};

struct ColGenRecord {
  std::size_t iteration = 0;
  double master_objective = 0.0;
  // Reduced cost of the priced column (column generation) or violation of
  // the separated row (cut generation).
  double pricing_value = 0.0;
  // Bits of the column or cut added this round, empty when none was.
  std::string added;
};

struct ColGenTrace {
  std::vector<ColGenRecord> records;

  // Non-decreasing master objective (within `slack`) for column generation.
  bool monotone_non_decreasing(double slack = 1e-9) const;
  bool monotone_non_increasing(double slack = 1e-9) const;
  // One JSON object per line: {"iteration":..,"objective":..,"pricing":..,"added":".."}.
  void write_jsonl(std::ostream& out) const;
};

// A strategy column priced against the current master duals.
struct PricedColumn {
  PureStrategy strategy;
  double objective = 0.0;
  std::vector<double> coeffs;  // one per master row
  double reduced_cost = 0.0;
};

// A row indexed by a pure strategy, found violated at the current point.
struct SeparatedCut {
  PureStrategy strategy;
  std::vector<double> coeffs;  // one per LP variable
  Relation relation = Relation::kGreaterEqual;
  double rhs = 0.0;
  double violation = 0.0;
};

using ColumnPricer =
    std::function<std::optional<PricedColumn>(const LpSolution& master)>;
using CutSeparator =
    std::function<std::optional<SeparatedCut>(const LpSolution& lp)>;

struct ColGenResult {
  LpSolution solution;
  ColGenTrace trace;
  // Master column index and strategy of every column the driver appended.
  std::vector<std::pair<std::size_t, PureStrategy>> added;
  std::size_t iterations = 0;
  std::size_t lp_solves = 0;
  double max_duality_gap = 0.0;
};

// Raised when the pricing/separation loop hits its cap. Carries the best
// restricted solution found so far.
class IterationLimitError : public Error {
 public:
  IterationLimitError(const std::string& message, ColGenResult partial)
      : Error(ErrorKind::kIterationLimit, message), partial_(std::move(partial)) {}
  const ColGenResult& partial() const { return partial_; }

 private:
  ColGenResult partial_;
};

// Re-solves `master` (a maximization) and appends priced columns until the
// pricer returns none. `known` lists strategies already present as columns;
// a pricer answer among them triggers one retry with tighter pivoting and
// then kNumericalBreakdown. The master must stay feasible throughout.
ColGenResult run_column_generation(IncrementalLp& master,
                                   const ColumnPricer& pricer,
                                   std::vector<PureStrategy> known,
                                   std::size_t n, const ColGenConfig& config = {});

// Re-solves `lp` and appends separated rows until the separator returns
// none. Stops early (without throwing) when the LP turns infeasible or
// unbounded; the returned solution carries that status.
ColGenResult run_cut_generation(IncrementalLp& lp, const CutSeparator& separator,
                                std::size_t n, const ColGenConfig& config = {});

// Columns whose master coefficients are affine in the coverage bits:
// column(e) = base + sum_t e_t * slope[t]. Pricing a master over such columns
// is one oracle call on the weights w_t = reduced cost slope.
struct AffineColumnMap {
  double objective_base = 0.0;
  std::vector<double> objective_slope;           // n
  std::vector<double> coeff_base;                // rows
  std::vector<std::vector<double>> coeff_slope;  // rows x n

  double objective(const PureStrategy& e) const;
  std::vector<double> coeffs(const PureStrategy& e) const;
};

// Reduced cost c(e) - duals . A(e) is affine in e; returns the best column
// when its reduced cost exceeds `tolerance`.
std::optional<PricedColumn> price_affine_column(const AffineColumnMap& map,
                                                const LpSolution& master,
                                                const DbrOracle& oracle,
                                                double tolerance);

// Minimax master pricing: w_i = y_i (r_i - c_i); returns the best response
// when w.e - mu exceeds `tolerance`. Duals in (-1e-9, 0) are clamped to 0,
// anything more negative raises kNumericalBreakdown.
std::optional<PureStrategy> price_minimax_column(std::span<const double> y,
                                                 double mu,
                                                 const SecurityGame& game,
                                                 double tolerance = 1e-7);

// Clamps float noise in (-1e-9, 0) to zero; throws on larger negatives.
std::vector<double> clamp_nonnegative_duals(std::span<const double> y);

// Initial column per policy.
PureStrategy initial_column(const DbrOracle& oracle, InitialColumnPolicy policy);

}  // namespace sgsolve

#endif  // SGSOLVE_COLGEN_HPP_
