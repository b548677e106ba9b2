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

// sgsolve: equilibria of security games with oracle-described defender
// strategy sets.

#include <iostream>

#include <CLI11.hpp>

#include "sgsolve/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Security game equilibrium solver"};
  app.require_subcommand(1);

  sgsolve::SolveRequest solve;
  bool no_timestamp = false;
  double target_utility = 0.0, tolerance = 0.0;
  auto* s = app.add_subcommand("solve", "Compute one equilibrium and write a result file");
  s->add_option("--input", solve.input, "Instance file")->required();
  s->add_option("--equilibrium", solve.equilibrium,
                "minimax | sse | ne-any | ne-best | ne-worst | ne-target")
      ->required();
  auto* target_opt =
      s->add_option("--target-utility", target_utility, "Defender utility for ne-target");
  auto* tol_opt = s->add_option("--tolerance", tolerance, "Reduced-cost tolerance");
  s->add_option("--output", solve.output, "Result path, - for stdout");
  s->add_option("--trace", solve.trace, "Write the pricing trace as JSON lines");
  s->add_flag("--no-timestamp", no_timestamp, "Omit timestamp and wall time");

  sgsolve::VerifyRequest verify;
  std::size_t samples = 0;
  auto* v = app.add_subcommand("verify", "Run the cross-check suite on one instance");
  v->add_option("--input", verify.input, "Instance file")->required();
  auto* samples_opt = v->add_option("--samples", samples, "Random cases per check")
                          ->check(CLI::PositiveNumber);
  v->add_option("--seed", verify.seed, "Seed for the random checks");

  sgsolve::BenchRequest bench;
  auto* b = app.add_subcommand("bench", "Solve every instance in a directory");
  b->add_option("--suite", bench.suite, "Directory of instance files")->required();
  b->add_option("--repeat", bench.repeat, "Solves per instance and kind")
      ->check(CLI::PositiveNumber);
  b->add_flag("--no-timestamp", no_timestamp, "Print - instead of wall times");

  sgsolve::DbrRequest dbr;
  auto* d = app.add_subcommand("dbr", "Ask the set system's best-response oracle");
  d->add_option("--input", dbr.input, "Instance file")->required();
  d->add_option("--weights", dbr.weights, "Comma separated weights, one per target")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : sgsolve::kExitModelError;
  }

  if (*s) {
    if (*target_opt) solve.target_utility = target_utility;
    if (*tol_opt) solve.tolerance = tolerance;
    solve.timestamp = !no_timestamp;
    return sgsolve::run_solve(solve, std::cout, std::cerr);
  }
  if (*v) {
    if (*samples_opt) verify.samples = samples;
    return sgsolve::run_verify(verify, std::cout, std::cerr);
  }
  if (*b) {
    bench.timing = !no_timestamp;
    return sgsolve::run_bench(bench, std::cout, std::cerr);
  }
  return sgsolve::run_dbr(dbr, std::cout, std::cerr);
}
