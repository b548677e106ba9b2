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

#include "sgsolve/result_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>

#include <json.hpp>

#include "sgsolve/error.hpp"

namespace sgsolve {

namespace {

using nlohmann::ordered_json;

std::vector<double> rounded(std::span<const double> v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = round_significant(v[i]);
  return out;
}

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  fail(ErrorKind::kParseError, "result field " + field + ": " + what);
}

double number(const ordered_json& j, const std::string& field) {
  if (!j.is_number()) bad(field, "expected a number");
  return j.get<double>();
}

std::size_t count(const ordered_json& j, const std::string& field) {
  if (!j.is_number_unsigned()) bad(field, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::vector<double> numbers(const ordered_json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array");
  std::vector<double> out;
  for (const auto& v : j) out.push_back(number(v, field));
  return out;
}

}  // namespace

double round_significant(double v, int digits) {
  if (v == 0.0) return 0.0;  // folds -0
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

ResultFile to_result_file(const EquilibriumResult& r) {
  ResultFile out;
  out.equilibrium = std::string(equilibrium_kind_name(r.kind));
  out.value = round_significant(r.value);
  out.defender_utility = round_significant(r.defender_utility);
  out.attacker_utility = round_significant(r.attacker_utility);
  out.x = rounded(r.x.values());
  for (const auto& [s, prob] : r.p.support()) {
    out.p.push_back({s.to_string(), round_significant(prob)});
  }
  out.y = rounded(r.y.values());
  if (r.attacked_target) out.attacked_target = *r.attacked_target + 1;
  out.iterations = r.diagnostics.iterations;
  out.columns = r.diagnostics.columns;
  out.cuts = r.diagnostics.cuts;
  out.lp_solves = r.diagnostics.lp_solves;
  out.max_duality_gap = round_significant(r.diagnostics.max_duality_gap);
  return out;
}

std::string serialize_result(const ResultFile& r) {
  ordered_json j;
  j["equilibrium"] = r.equilibrium;
  j["value"] = r.value;
  j["defender_utility"] = r.defender_utility;
  j["attacker_utility"] = r.attacker_utility;
  j["x"] = r.x;
  ordered_json p = ordered_json::array();
  for (const auto& e : r.p) p.push_back({{"strategy", e.strategy}, {"probability", e.probability}});
  j["p"] = p;
  j["y"] = r.y;
  j["attacked_target"] = r.attacked_target ? ordered_json(*r.attacked_target) : ordered_json();
  ordered_json d;
  d["iterations"] = r.iterations;
  d["columns"] = r.columns;
  d["cuts"] = r.cuts;
  d["lp_solves"] = r.lp_solves;
  d["max_duality_gap"] = r.max_duality_gap;
  if (r.wall_time_seconds) d["wall_time_seconds"] = *r.wall_time_seconds;
  j["diagnostics"] = d;
  if (r.timestamp) j["timestamp"] = *r.timestamp;
  return j.dump(2) + "\n";
}

ResultFile parse_result(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    fail(ErrorKind::kParseError, e.what());
  }
  if (!j.is_object()) bad("(root)", "expected an object");
  static const std::set<std::string> top{"equilibrium", "value", "defender_utility",
                                         "attacker_utility", "x", "p", "y",
                                         "attacked_target", "diagnostics", "timestamp"};
  for (const auto& [k, v] : j.items()) {
    if (!top.count(k)) bad(k, "unknown field");
  }
  for (const char* k : {"equilibrium", "value", "defender_utility", "attacker_utility", "x",
                        "p", "y", "attacked_target", "diagnostics"}) {
    if (!j.contains(k)) bad(k, "missing");
  }
  ResultFile r;
  if (!j["equilibrium"].is_string()) bad("equilibrium", "expected a string");
  r.equilibrium = j["equilibrium"].get<std::string>();
  r.value = number(j["value"], "value");
  r.defender_utility = number(j["defender_utility"], "defender_utility");
  r.attacker_utility = number(j["attacker_utility"], "attacker_utility");
  r.x = numbers(j["x"], "x");
  r.y = numbers(j["y"], "y");
  if (!j["p"].is_array()) bad("p", "expected an array");
  for (const auto& e : j["p"]) {
    if (!e.is_object() || e.size() != 2 || !e.contains("strategy") ||
        !e.contains("probability") || !e["strategy"].is_string()) {
      bad("p", "entries need exactly strategy and probability");
    }
    r.p.push_back({e["strategy"].get<std::string>(), number(e["probability"], "p.probability")});
  }
  if (!j["attacked_target"].is_null()) r.attacked_target = count(j["attacked_target"], "attacked_target");
  const auto& d = j["diagnostics"];
  if (!d.is_object()) bad("diagnostics", "expected an object");
  static const std::set<std::string> diag{"iterations", "columns", "cuts", "lp_solves",
                                          "max_duality_gap", "wall_time_seconds"};
  for (const auto& [k, v] : d.items()) {
    if (!diag.count(k)) bad("diagnostics." + k, "unknown field");
  }
  for (const char* k : {"iterations", "columns", "cuts", "lp_solves", "max_duality_gap"}) {
    if (!d.contains(k)) bad(std::string("diagnostics.") + k, "missing");
  }
  r.iterations = count(d["iterations"], "diagnostics.iterations");
  r.columns = count(d["columns"], "diagnostics.columns");
  r.cuts = count(d["cuts"], "diagnostics.cuts");
  r.lp_solves = count(d["lp_solves"], "diagnostics.lp_solves");
  r.max_duality_gap = number(d["max_duality_gap"], "diagnostics.max_duality_gap");
  if (d.contains("wall_time_seconds")) {
    r.wall_time_seconds = number(d["wall_time_seconds"], "diagnostics.wall_time_seconds");
  }
  if (j.contains("timestamp")) {
    if (!j["timestamp"].is_string()) bad("timestamp", "expected a string");
    r.timestamp = j["timestamp"].get<std::string>();
  }
  return r;
}

}  // namespace sgsolve
