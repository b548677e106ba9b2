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

#include "sgsolve/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "sgsolve/instance_io.hpp"
#include "sgsolve/result_io.hpp"
#include "sgsolve/verification.hpp"

namespace sgsolve {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr double kExpectedTolerance = 1e-6;
constexpr double kGapTolerance = 1e-8;

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Runs `body`, mapping exceptions to exit codes with a message on `err`.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << "\n";
    return kExitNumerical;
  }
}

double headline(const EquilibriumResult& r) {
  return r.kind == EquilibriumKind::kMinimax ? r.value : r.defender_utility;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  return is_numerical(kind) ? kExitNumerical : kExitModelError;
}

EquilibriumResult solve_equilibrium(const SecurityGame& game, EquilibriumKind kind,
                                    std::optional<double> target_utility,
                                    const ColGenConfig& config) {
  switch (kind) {
    case EquilibriumKind::kMinimax: return solve_minimax(game, config);
    case EquilibriumKind::kSse: return solve_sse(game, config);
    case EquilibriumKind::kNeAny: return solve_ne_any(game, config);
    case EquilibriumKind::kNeBest: return solve_ne_extremal(game, Extremum::kBest, config);
    case EquilibriumKind::kNeWorst: return solve_ne_extremal(game, Extremum::kWorst, config);
    case EquilibriumKind::kNeTarget:
      if (!target_utility) {
        fail(ErrorKind::kInvalidArgument, "ne-target needs --target-utility");
      }
      return solve_ne_with_utility(game, *target_utility, config);
  }
  fail(ErrorKind::kInternal, "unhandled equilibrium kind");
}

int run_solve(const SolveRequest& request, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto kind = parse_equilibrium_kind(request.equilibrium);
    if (!kind) {
      fail(ErrorKind::kInvalidArgument, "unknown equilibrium \"" + request.equilibrium + "\"");
    }
    ColGenConfig config;
    if (request.tolerance) {
      if (!(*request.tolerance > 0.0)) fail(ErrorKind::kInvalidArgument, "--tolerance must be positive");
      config.reduced_cost_tolerance = *request.tolerance;
    }
    const Instance instance = parse_instance(request.input, node_budget_from_env());
    const auto start = Clock::now();
    const EquilibriumResult result =
        solve_equilibrium(instance.game, *kind, request.target_utility, config);
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();

    ResultFile file = to_result_file(result);
    if (request.timestamp) {
      file.wall_time_seconds = round_significant(seconds, 6);
      file.timestamp = utc_now();
    }
    const std::string text = serialize_result(file);
    if (request.output.empty() || request.output == "-") {
      out << text;
    } else {
      std::ofstream f(request.output, std::ios::binary);
      if (!f) fail(ErrorKind::kInvalidArgument, "cannot write " + request.output);
      f << text;
    }
    if (!request.trace.empty()) {
      std::ofstream f(request.trace, std::ios::binary);
      if (!f) fail(ErrorKind::kInvalidArgument, "cannot write " + request.trace);
      result.diagnostics.trace.write_jsonl(f);
    }
    return kExitOk;
  });
}

int run_verify(const VerifyRequest& request, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance instance = parse_instance(request.input, node_budget_from_env());
    const SecurityGame& game = instance.game;
    const DbrOracle& oracle = game.oracle();
    const std::size_t oracle_samples = request.samples.value_or(500);
    const std::size_t membership_samples = request.samples.value_or(200);
    const std::size_t other_samples = request.samples.value_or(100);
    const std::size_t boundary = std::max<std::size_t>(20, membership_samples / 10);

    std::vector<CheckOutcome> report;
    double max_gap = 0.0;
    const auto listed = oracle.enumerate(kVerifyEnumerationLimit);
    const std::uint64_t seed = request.seed;
    if (listed) {
      report.push_back(check_oracle_enumeration(oracle, *listed, oracle_samples, seed));
      report.push_back(check_regularization(oracle, *listed, other_samples, seed + 1));
      auto solvers = check_solvers_against_reference(game, *listed);
      max_gap = std::max(max_gap, solvers.max_duality_gap);
      for (auto& o : solvers.outcomes) report.push_back(std::move(o));
      report.push_back(check_membership(game.oracle_ptr(), *listed, membership_samples,
                                        boundary, seed + 2));
      report.push_back(check_down_monotone(game.oracle_ptr(), *listed, other_samples, seed + 3));
      report.push_back(check_decomposition(oracle, *listed, other_samples, seed + 4));
    } else {
      const std::string why = "|E| exceeds " + std::to_string(kVerifyEnumerationLimit);
      report.push_back(check_oracle_self_consistency(oracle, oracle_samples, seed));
      for (const char* name : {"oracle-vs-enumeration", "regularized-dbr", "solvers-vs-explicit",
                               "membership-vs-brute", "down-monotone", "decomposition"}) {
        report.push_back({name, CheckStatus::kSkip, why, 0});
      }
    }

    if (instance.metadata.expected.empty()) {
      report.push_back({"expected-values", CheckStatus::kSkip, "none recorded", 0});
    } else {
      std::size_t bad = 0;
      std::ostringstream d;
      for (const auto& [name, want] : instance.metadata.expected) {
        const auto kind = parse_equilibrium_kind(name);
        try {
          const auto r = solve_equilibrium(game, *kind, std::nullopt);
          max_gap = std::max(max_gap, r.diagnostics.max_duality_gap);
          const double got = headline(r);
          if (std::abs(got - want) > kExpectedTolerance) {
            d << (bad++ ? "; " : "") << name << " recorded " << fmt(want) << ", solved "
              << fmt(got);
          }
        } catch (const std::exception& e) {
          d << (bad++ ? "; " : "") << name << ": " << e.what();
        }
      }
      const std::size_t n = instance.metadata.expected.size();
      report.push_back({"expected-values", bad ? CheckStatus::kFail : CheckStatus::kPass,
                        bad ? d.str() : std::to_string(n) + " values match", n});
    }
    for (const auto& o : report) max_gap = std::max(max_gap, o.max_duality_gap);
    {
      std::ostringstream d;
      d << "max gap " << max_gap;
      report.push_back({"duality-gap", max_gap <= kGapTolerance ? CheckStatus::kPass
                                                                 : CheckStatus::kFail,
                        d.str(), 1});
    }

    std::size_t pass = 0, failed = 0, skipped = 0;
    out << "verify " << instance.metadata.name << " (n=" << game.n() << ", "
        << oracle.kind() << ")\n";
    for (const auto& o : report) {
      out << "  " << check_status_name(o.status) << "  " << o.name << ": " << o.detail << "\n";
      pass += o.status == CheckStatus::kPass;
      failed += o.status == CheckStatus::kFail;
      skipped += o.status == CheckStatus::kSkip;
    }
    out << pass << " passed, " << failed << " failed, " << skipped << " skipped\n";
    return failed ? kExitVerifyFailed : kExitOk;
  });
}

int run_bench(const BenchRequest& request, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (request.repeat == 0) fail(ErrorKind::kInvalidArgument, "--repeat must be at least 1");
    std::vector<fs::path> files;
    if (fs::is_directory(request.suite)) {
      for (const auto& entry : fs::directory_iterator(request.suite)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
          files.push_back(entry.path());
        }
      }
    }
    if (files.empty()) {
      fail(ErrorKind::kInvalidArgument, "no instance files in " + request.suite);
    }
    std::sort(files.begin(), files.end());

    int worst = kExitOk;
    out << std::left << std::setw(26) << "instance" << std::setw(10) << "kind" << std::setw(8)
        << "repeat" << std::setw(20) << "value" << std::setw(9) << "columns"
        << "wall_ms\n";
    const std::uint64_t budget = node_budget_from_env();
    for (const auto& path : files) {
      const std::string name = path.stem().string();
      std::optional<Instance> instance;
      try {
        instance = parse_instance(path, budget);
      } catch (const Error& e) {
        out << std::setw(26) << name << "error: " << e.what() << "\n";
        worst = std::max(worst, exit_code_for(e.kind()));
        continue;
      }
      std::vector<EquilibriumKind> kinds{EquilibriumKind::kSse, EquilibriumKind::kNeAny,
                                         EquilibriumKind::kNeBest, EquilibriumKind::kNeWorst};
      if (is_zero_sum(instance->game)) kinds.insert(kinds.begin(), EquilibriumKind::kMinimax);
      for (const EquilibriumKind kind : kinds) {
        std::optional<double> first;
        for (std::size_t rep = 1; rep <= request.repeat; ++rep) {
          out << std::setw(26) << name << std::setw(10) << equilibrium_kind_name(kind)
              << std::setw(8) << rep;
          try {
            const auto start = Clock::now();
            const auto r = solve_equilibrium(instance->game, kind, std::nullopt);
            const double ms =
                std::chrono::duration<double, std::milli>(Clock::now() - start).count();
            const double v = headline(r);
            out << std::setw(20) << fmt(v) << std::setw(9) << r.diagnostics.columns;
            if (request.timing) {
              out << std::fixed << std::setprecision(3) << ms << std::defaultfloat;
            } else {
              out << "-";
            }
            out << "\n";
            if (!first) {
              first = v;
            } else if (*first != v) {
              err << "warning: " << name << " " << equilibrium_kind_name(kind)
                  << " changed across repeats\n";
              worst = std::max(worst, kExitVerifyFailed);
            }
          } catch (const Error& e) {
            out << "error: " << e.what() << "\n";
            worst = std::max(worst, exit_code_for(e.kind()));
          }
        }
      }
    }
    return worst;
  });
}

int run_dbr(const DbrRequest& request, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance instance = parse_instance(request.input, node_budget_from_env());
    std::vector<double> w;
    std::stringstream in(request.weights);
    for (std::string item; std::getline(in, item, ',');) {
      item.erase(0, item.find_first_not_of(" \t"));
      item.erase(item.find_last_not_of(" \t") + 1);
      w.push_back(parse_rational(item));
    }
    const OracleAnswer a = instance.game.oracle().best_response(w);
    out << "bits " << a.strategy.to_string() << "\n";
    out << "value " << fmt(a.value) << "\n";
    return kExitOk;
  });
}

}  // namespace sgsolve
