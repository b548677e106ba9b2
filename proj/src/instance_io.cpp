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

#include "sgsolve/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sgsolve/error.hpp"

namespace sgsolve {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(ErrorKind::kParseError, "field " + path + ": " + what);
}

// Rejects keys outside required + optional; `required` must all be present.
void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
  if (!obj.is_object()) bad(path, "expected an object");
  std::set<std::string> known;
  for (const char* k : required) {
    known.insert(k);
    if (!obj.contains(k)) bad(path.empty() ? k : path + "." + k, "missing");
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [key, value] : obj.items()) {
    if (!known.count(key)) bad(path.empty() ? key : path + "." + key, "unknown field");
  }
}

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

double as_number(const json& v, const std::string& path) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      bad(path, e.what());
    }
  }
  bad(path, "expected a number or a rational string");
}

std::size_t as_count(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    bad(path, "expected a nonnegative integer");
  }
  return v.get<std::size_t>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) bad(path, "expected an array");
  return v;
}

// 1-based index in [1, limit] to 0-based.
std::size_t as_index(const json& v, const std::string& path, std::size_t limit) {
  const std::size_t i = as_count(v, path);
  if (i < 1 || i > limit) {
    bad(path, "index " + std::to_string(i) + " outside [1, " + std::to_string(limit) + "]");
  }
  return i - 1;
}

std::vector<std::size_t> index_list(const json& v, const std::string& path, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < as_array(v, path).size(); ++j) {
    out.push_back(as_index(v[j], at(path, j), n));
  }
  return out;
}

std::vector<double> payoff_vector(const json& v, const std::string& path, std::size_t n) {
  as_array(v, path);
  if (v.size() != n) {
    bad(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(v.size()));
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = as_number(v[i], at(path, i));
  return out;
}

std::shared_ptr<const DbrOracle> build_oracle(const json& s, std::size_t n,
                                              std::uint64_t budget) {
  const std::string path = "set_system";
  if (!s.is_object() || !s.contains("kind") || !s["kind"].is_string()) {
    bad(path + ".kind", "missing or not a string");
  }
  const std::string kind = s["kind"].get<std::string>();
  if (kind == "uniform_matroid") {
    check_keys(s, path, {"kind", "k"});
    return std::make_shared<UniformMatroidOracle>(n, as_count(s["k"], path + ".k"));
  }
  if (kind == "bipartite") {
    check_keys(s, path, {"kind", "resources"});
    const std::string p = path + ".resources";
    std::vector<std::vector<std::size_t>> allowed;
    for (std::size_t j = 0; j < as_array(s["resources"], p).size(); ++j) {
      allowed.push_back(index_list(s["resources"][j], at(p, j), n));
    }
    return std::make_shared<BipartiteOracle>(n, std::move(allowed));
  }
  if (kind == "coverage") {
    check_keys(s, path, {"kind", "resources"});
    const std::string p = path + ".resources";
    std::vector<std::vector<CoverageOracle::Schedule>> resources;
    for (std::size_t j = 0; j < as_array(s["resources"], p).size(); ++j) {
      const json& r = s["resources"][j];
      check_keys(r, at(p, j), {"schedules"});
      const std::string sp = at(p, j) + ".schedules";
      std::vector<CoverageOracle::Schedule> schedules;
      for (std::size_t q = 0; q < as_array(r["schedules"], sp).size(); ++q) {
        schedules.push_back(index_list(r["schedules"][q], at(sp, q), n));
      }
      resources.push_back(std::move(schedules));
    }
    return std::make_shared<CoverageOracle>(n, std::move(resources), budget);
  }
  if (kind == "layered_graph") {
    check_keys(s, path, {"kind", "positions", "times", "target_index", "moves", "k"});
    LayeredGraph g;
    g.positions = as_count(s["positions"], path + ".positions");
    g.times = as_count(s["times"], path + ".times");
    g.target_at.assign(g.positions, std::vector<std::optional<std::size_t>>(g.times));
    const std::string tp = path + ".target_index";
    for (std::size_t j = 0; j < as_array(s["target_index"], tp).size(); ++j) {
      const json& e = s["target_index"][j];
      const std::string ep = at(tp, j);
      check_keys(e, ep, {"position", "time", "target"});
      const std::size_t pos = as_index(e["position"], ep + ".position", g.positions);
      const std::size_t t = as_index(e["time"], ep + ".time", g.times);
      if (g.target_at[pos][t]) bad(ep, "grid point listed twice");
      g.target_at[pos][t] = as_index(e["target"], ep + ".target", n);
    }
    const std::string mp = path + ".moves";
    for (std::size_t j = 0; j < as_array(s["moves"], mp).size(); ++j) {
      const json& m = s["moves"][j];
      const std::string ep = at(mp, j);
      check_keys(m, ep, {"from", "to", "time"});
      if (g.times < 2) bad(ep, "moves need at least two time layers");
      g.moves.push_back({as_index(m["from"], ep + ".from", g.positions),
                         as_index(m["to"], ep + ".to", g.positions),
                         as_index(m["time"], ep + ".time", g.times - 1)});
    }
    return std::make_shared<LayeredFlowOracle>(n, std::move(g), as_count(s["k"], path + ".k"),
                                               budget);
  }
  if (kind == "packing") {
    check_keys(s, path, {"kind", "teams", "capacities"});
    const std::string cp = path + ".capacities";
    if (!s["capacities"].is_object()) bad(cp, "expected an object of tool -> integer");
    // tools are numbered in name order
    std::map<std::string, std::size_t> tool_id;
    std::vector<int> capacities;
    for (const auto& [name, cap] : s["capacities"].items()) {
      tool_id.emplace(name, 0);
    }
    for (auto& [name, id] : tool_id) {
      id = capacities.size();
      const json& cap = s["capacities"][name];
      if (!cap.is_number_integer() || cap.get<std::int64_t>() < 0 ||
          cap.get<std::int64_t>() > 1'000'000) {
        bad(cp + "." + name, "expected an integer in [0, 10^6]");
      }
      capacities.push_back(cap.get<int>());
    }
    const std::string tp = path + ".teams";
    std::vector<std::vector<std::size_t>> teams;
    for (std::size_t j = 0; j < as_array(s["teams"], tp).size(); ++j) {
      std::vector<std::size_t> team;
      for (std::size_t q = 0; q < as_array(s["teams"][j], at(tp, j)).size(); ++q) {
        const json& tool = s["teams"][j][q];
        const std::string qp = at(at(tp, j), q);
        if (!tool.is_string()) bad(qp, "expected a tool name");
        const auto it = tool_id.find(tool.get<std::string>());
        if (it == tool_id.end()) bad(qp, "tool has no capacity entry");
        team.push_back(it->second);
      }
      teams.push_back(std::move(team));
    }
    return std::make_shared<PackingOracle>(n, std::move(teams), std::move(capacities), budget);
  }
  if (kind == "explicit") {
    check_keys(s, path, {"kind", "strategies"});
    const std::string p = path + ".strategies";
    std::vector<PureStrategy> list;
    for (std::size_t j = 0; j < as_array(s["strategies"], p).size(); ++j) {
      const json& row = as_array(s["strategies"][j], at(p, j));
      if (row.size() != n) bad(at(p, j), "expected " + std::to_string(n) + " entries");
      std::vector<std::uint8_t> bits(n);
      for (std::size_t i = 0; i < n; ++i) {
        const json& b = row[i];
        if (!b.is_number_integer() || (b.get<std::int64_t>() != 0 && b.get<std::int64_t>() != 1)) {
          bad(at(at(p, j), i), "expected 0 or 1");
        }
        bits[i] = static_cast<std::uint8_t>(b.get<int>());
      }
      list.emplace_back(std::move(bits));
    }
    return std::make_shared<ExplicitOracle>(std::move(list));
  }
  bad(path + ".kind", "unknown set system \"" + kind + "\"");
}

InstanceMetadata parse_metadata(const json& m) {
  check_keys(m, "metadata", {}, {"name", "seed", "expected"});
  InstanceMetadata out;
  if (m.contains("name")) {
    if (!m["name"].is_string()) bad("metadata.name", "expected a string");
    out.name = m["name"].get<std::string>();
  }
  if (m.contains("seed")) {
    if (!m["seed"].is_number_unsigned()) bad("metadata.seed", "expected a nonnegative integer");
    out.seed = m["seed"].get<std::uint64_t>();
  }
  if (m.contains("expected")) {
    const json& e = m["expected"];
    if (!e.is_object()) bad("metadata.expected", "expected an object");
    for (const auto& [key, value] : e.items()) {
      static const std::set<std::string> kinds{"minimax", "sse", "ne-any", "ne-best", "ne-worst"};
      if (!kinds.count(key)) bad("metadata.expected." + key, "unknown field");
      out.expected[key] = as_number(value, "metadata.expected." + key);
    }
  }
  return out;
}

// what() without the leading "Kind: ".
std::string bare_message(const Error& e) {
  const std::string text = e.what();
  const auto colon = text.find(": ");
  return colon == std::string::npos ? text : text.substr(colon + 2);
}

}  // namespace

std::uint64_t node_budget_from_env() {
  const char* text = std::getenv("SG_NODE_BUDGET");
  if (!text || !*text) return kDefaultNodeBudget;
  std::uint64_t v = 0;
  const char* end = text + std::char_traits<char>::length(text);
  const auto [ptr, ec] = std::from_chars(text, end, v);
  if (ec != std::errc() || ptr != end || v == 0) {
    fail(ErrorKind::kInvalidArgument, "SG_NODE_BUDGET must be a positive integer");
  }
  return v;
}

double parse_rational(const std::string& text) {
  const auto to_double = [&](std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
      fail(ErrorKind::kParseError, "not a number: \"" + text + "\"");
    }
    return v;
  };
  const std::string_view view(text);
  const auto slash = view.find('/');
  if (slash == std::string_view::npos) return to_double(view);
  const double den = to_double(view.substr(slash + 1));
  if (den == 0.0) fail(ErrorKind::kParseError, "zero denominator in \"" + text + "\"");
  return to_double(view.substr(0, slash)) / den;
}

Instance parse_instance_text(const std::string& text, std::uint64_t node_budget) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // message carries "line L, column C"
    fail(ErrorKind::kParseError, e.what());
  }
  check_keys(doc, "", {"targets", "payoffs", "set_system"}, {"metadata"});
  const std::size_t n = as_count(doc["targets"], "targets");
  if (n == 0) bad("targets", "need at least one target");

  const json& p = doc["payoffs"];
  check_keys(p, "payoffs", {"reward", "cost", "att_reward", "att_cost"});
  Payoffs payoffs{payoff_vector(p["reward"], "payoffs.reward", n),
                  payoff_vector(p["cost"], "payoffs.cost", n),
                  payoff_vector(p["att_reward"], "payoffs.att_reward", n),
                  payoff_vector(p["att_cost"], "payoffs.att_cost", n)};

  std::shared_ptr<const DbrOracle> oracle;
  try {
    oracle = build_oracle(doc["set_system"], n, node_budget);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParseError) throw;
    throw Error(e.kind(), "field set_system: " + bare_message(e));
  }
  Instance out{[&] {
                 try {
                   return validate_game(std::move(payoffs), oracle);
                 } catch (const Error& e) {
                   if (e.kind() != ErrorKind::kStrictnessViolated || !e.index()) throw;
                   const std::string i = std::to_string(*e.index());
                   throw Error(e.kind(),
                               "field payoffs.*[" + i + "]: " + bare_message(e),
                               e.index());
                 }
               }(),
               {}};
  if (doc.contains("metadata")) out.metadata = parse_metadata(doc["metadata"]);
  return out;
}

Instance parse_instance(const std::filesystem::path& path, std::uint64_t node_budget) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  Instance out = parse_instance_text(buf.str(), node_budget);
  if (out.metadata.name.empty()) out.metadata.name = path.stem().string();
  return out;
}

}  // namespace sgsolve
