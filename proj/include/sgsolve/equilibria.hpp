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

#ifndef SGSOLVE_EQUILIBRIA_HPP_
#define SGSOLVE_EQUILIBRIA_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sgsolve/colgen.hpp"
#include "sgsolve/error.hpp"
#include "sgsolve/game.hpp"

namespace sgsolve {

enum class EquilibriumKind { kMinimax, kSse, kNeAny, kNeBest, kNeWorst, kNeTarget };

// "minimax", "sse", "ne-any", "ne-best", "ne-worst", "ne-target".
std::string_view equilibrium_kind_name(EquilibriumKind kind);
std::optional<EquilibriumKind> parse_equilibrium_kind(std::string_view name);

struct SolverDiagnostics {
  std::size_t iterations = 0;  // pricing + separation rounds
  std::size_t columns = 0;     // columns generated by pricing
  std::size_t cuts = 0;        // rows generated by separation
  std::size_t lp_solves = 0;
  double max_duality_gap = 0.0;
  ColGenTrace trace;

  // `rows` marks a cut-generation run.
  void absorb(const ColGenResult& run, bool rows = false);
};

struct EquilibriumResult {
  EquilibriumKind kind = EquilibriumKind::kMinimax;
  // Game value for minimax; the defender's utility otherwise.
  double value = 0.0;
  double defender_utility = 0.0;
  double attacker_utility = 0.0;
  Marginal x;
  MixedStrategy p;
  AttackerMixed y;
  // Set when the attacker plays a pure strategy (SSE).
  std::optional<std::size_t> attacked_target;
  SolverDiagnostics diagnostics;
};

enum class AttackerTieBreak { kFavorDefender, kLowestIndex };

inline constexpr double kTieTolerance = 1e-9;

// argmax_{e in E} U^d(e, y), via w_i = y_i (r_i - c_i).
PureStrategy best_response_defender(const SecurityGame& game,
                                    std::span<const double> y);
// argmax_i of the attacker's payoff at x; ties within kTieTolerance go to the
// defender's preferred target or to the lowest index.
std::size_t best_response_attacker(const SecurityGame& game,
                                   std::span<const double> x,
                                   AttackerTieBreak tie_break);

// Column generation over the maximin master: max u subject to
// u <= c_i + (r_i - c_i) x_i, x = sum_e p_e e, sum_e p_e = 1.
// The attacker strategy is the row duals. Throws kNotZeroSum.
EquilibriumResult solve_minimax(const SecurityGame& game,
                                const ColGenConfig& config = {});

// One LP per candidate attacked target k, each by column generation with a
// slack phase that detects infeasible k. Returns the best feasible k,
// lowest k on ties.
EquilibriumResult solve_sse(const SecurityGame& game,
                            const ColGenConfig& config = {});

// y = f^{-1}(y_hat) where (x~, y_hat) is a minimax equilibrium of the
// zero-sum companion game.
EquilibriumResult solve_ne_any(const SecurityGame& game,
                               const ColGenConfig& config = {});

struct TransformedAttacker {
  std::vector<double> input;
  std::vector<double> output;
  double lambda = 0.0;
};
// f_i(y) = ((r_i - c_i) / (rho_i - zeta_i)) y_i / lambda.
TransformedAttacker apply_transform(const SecurityGame& game,
                                    std::span<const double> y);

struct NeUtilityCoefficients {
  std::vector<double> gamma;
  double val_bar = 0.0;
};
// gamma_i = c_i + (r_i - c_i) / (rho_i - zeta_i) * (val_bar + rho_i), so that
// gamma . y is the defender's utility at any Nash equilibrium using y.
NeUtilityCoefficients ne_utility_coefficients(const SecurityGame& game,
                                              double val_bar);

enum class Extremum { kBest, kWorst };

// Optimizes gamma . y over the attacker's equilibrium strategies, with the
// defender best-response rows added by separation.
EquilibriumResult solve_ne_extremal(const SecurityGame& game, Extremum sense,
                                    const ColGenConfig& config = {});

// Violated defender best-response row at y, if any: a strategy e with
// sum_i y_i (r_i - c_i) (e_i - x~_i) > tolerance.
std::optional<SeparatedCut> separate_defbest(std::span<const double> y,
                                             std::span<const double> x_tilde,
                                             const SecurityGame& game,
                                             double tolerance = 1e-9);

inline constexpr double kUtilityRangeTolerance = 1e-8;

// Nash equilibrium whose defender utility is `target`. Throws
// kUtilityOutOfRange outside [worst, best] (+- 1e-8).
EquilibriumResult solve_ne_with_utility(const SecurityGame& game, double target,
                                        const ColGenConfig& config = {});

// Raised by decompose_marginal when x is not in conv(E). `duals` and `mu`
// are the final master duals: pi . e <= mu for every e in E while
// pi . x > mu (up to the reported residual).
class NotInHullError : public Error {
 public:
  NotInHullError(const std::string& message, double residual,
                 std::vector<double> duals, double mu)
      : Error(ErrorKind::kNotInHull, message),
        residual_(residual), duals_(std::move(duals)), mu_(mu) {}
  double residual() const { return residual_; }
  const std::vector<double>& duals() const { return duals_; }
  double mu() const { return mu_; }

 private:
  double residual_;
  std::vector<double> duals_;
  double mu_;
};

inline constexpr double kHullTolerance = 1e-8;

// Writes x as a convex combination of at most n + 1 members of E.
MixedStrategy decompose_marginal(std::span<const double> x, const DbrOracle& oracle,
                                 const ColGenConfig& config = {},
                                 SolverDiagnostics* diagnostics = nullptr);

}  // namespace sgsolve

#endif  // SGSOLVE_EQUILIBRIA_HPP_
