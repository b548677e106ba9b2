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

#ifndef SGSOLVE_VERIFICATION_HPP_
#define SGSOLVE_VERIFICATION_HPP_

// Cross-checks between the oracle-driven engines and brute-force
// references over an explicitly listed E. Each check is deterministic
// given its seed.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "sgsolve/game.hpp"
#include "sgsolve/set_system.hpp"

namespace sgsolve {

// Largest |E| the explicit references are run on.
inline constexpr std::size_t kVerifyEnumerationLimit = 5000;

enum class CheckStatus { kPass, kFail, kSkip };

struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
  std::size_t cases = 0;
  double max_duality_gap = 0.0;  // over the engine LPs the check ran
};

std::string_view check_status_name(CheckStatus status);

// Weights k / 16 with |k| <= 64; sums of these are exact in doubles.
// With `at_least_one_zero`, one random entry is forced to 0.
std::vector<double> dyadic_weights(std::mt19937_64& rng, std::size_t n, bool allow_negative,
                                   bool at_least_one_zero = false);

// best_response(w).value == max_{e in E} w.e exactly, and the answer is in E.
CheckOutcome check_oracle_enumeration(const DbrOracle& oracle,
                                      const std::vector<PureStrategy>& strategies,
                                      std::size_t samples, std::uint64_t seed);

// Without a listing: value equals w.e and beats every strategy the oracle
// returned for earlier weights.
CheckOutcome check_oracle_self_consistency(const DbrOracle& oracle, std::size_t samples,
                                           std::uint64_t seed);

// regularized_dbr on nonnegative weights with zeros returns a member of E
// achieving the brute-force optimum.
CheckOutcome check_regularization(const DbrOracle& oracle,
                                  const std::vector<PureStrategy>& strategies,
                                  std::size_t samples, std::uint64_t seed);

struct SolverCheck {
  std::vector<CheckOutcome> outcomes;  // minimax, sse, ne-best, ne-worst
  double max_duality_gap = 0.0;        // over engine and reference solves
};
// Engines against the explicit references, tolerance 1e-6. Minimax runs on
// the zero-sum companion of a general-sum game. Solver errors become
// failures.
SolverCheck check_solvers_against_reference(const SecurityGame& game,
                                            const std::vector<PureStrategy>& strategies);

// Largest t with t * x in the downward closure of E (an LP over the closure).
double max_scaling_in_closure(std::span<const double> x,
                              const std::vector<PureStrategy>& strategies);

// membership_check vs brute_membership on `samples` random points (half
// mixtures of the closure, half scaled outward) plus `boundary` points
// within 1e-4 of the boundary, where a disagreement is tolerated only when
// the game value is within 1e-7 of 1.
CheckOutcome check_membership(const std::shared_ptr<const DbrOracle>& oracle,
                              const std::vector<PureStrategy>& strategies,
                              std::size_t samples, std::size_t boundary, std::uint64_t seed);

// Members scaled coordinate-wise by factors in [0, 1] stay members.
CheckOutcome check_down_monotone(const std::shared_ptr<const DbrOracle>& oracle,
                                 const std::vector<PureStrategy>& strategies,
                                 std::size_t samples, std::uint64_t seed);

// decompose_marginal reproduces random mixtures' marginals within 1e-8
// with support <= n + 1, using members of E only.
CheckOutcome check_decomposition(const DbrOracle& oracle,
                                 const std::vector<PureStrategy>& strategies,
                                 std::size_t samples, std::uint64_t seed);

}  // namespace sgsolve

#endif  // SGSOLVE_VERIFICATION_HPP_
