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

#ifndef SGSOLVE_TESTS_BRUTE_FORCE_HPP_
#define SGSOLVE_TESTS_BRUTE_FORCE_HPP_

// Independent enumerators for the bundled set-system kinds. They walk the
// raw combinatorial description (every assignment, every path tuple) and
// never call into the oracle code they are used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "sgsolve/set_system.hpp"

namespace brute {

using Bits = std::vector<std::uint8_t>;
using Family = std::set<Bits>;

inline Family uniform_matroid(std::size_t n, std::size_t k) {
  Family out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > k) continue;
    Bits b(n, 0);
    for (std::size_t i = 0; i < n; ++i) b[i] = (mask >> i) & 1;
    out.insert(b);
  }
  return out;
}

inline Family bipartite(std::size_t n,
                        const std::vector<std::vector<std::size_t>>& allowed) {
  Family out;
  std::vector<std::size_t> used;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == allowed.size()) {
      Bits b(n, 0);
      for (std::size_t t : used) b[t] = 1;
      out.insert(b);
      return;
    }
    rec(j + 1);  // idle
    for (std::size_t t : allowed[j]) {
      used.push_back(t);
      rec(j + 1);
      used.pop_back();
    }
  };
  rec(0);
  return out;
}

inline Family coverage(
    std::size_t n,
    const std::vector<std::vector<std::vector<std::size_t>>>& resources) {
  Family out;
  Bits cur(n, 0);
  std::function<void(std::size_t, Bits)> rec = [&](std::size_t j, Bits b) {
    if (j == resources.size()) {
      out.insert(b);
      return;
    }
    rec(j + 1, b);
    for (const auto& schedule : resources[j]) {
      Bits c = b;
      for (std::size_t t : schedule) c[t] = 1;
      rec(j + 1, c);
    }
  };
  rec(0, cur);
  return out;
}

inline std::vector<Bits> layered_paths(std::size_t n,
                                       const sgsolve::LayeredGraph& g) {
  std::vector<Bits> paths;
  std::function<void(std::size_t, std::size_t, Bits)> walk =
      [&](std::size_t pos, std::size_t t, Bits b) {
        if (const auto& tgt = g.target_at[pos][t]) b[*tgt] = 1;
        if (t + 1 == g.times) {
          paths.push_back(b);
          return;
        }
        for (const auto& mv : g.moves) {
          if (mv.time == t && mv.from == pos) walk(mv.to, t + 1, b);
        }
      };
  for (std::size_t p = 0; p < g.positions; ++p) walk(p, 0, Bits(n, 0));
  return paths;
}

inline Family layered(std::size_t n, const sgsolve::LayeredGraph& g,
                      std::size_t k) {
  const auto paths = layered_paths(n, g);
  Family out;
  // Multisets of k paths.
  std::function<void(std::size_t, std::size_t, Bits)> rec =
      [&](std::size_t start, std::size_t left, Bits b) {
        if (left == 0) {
          out.insert(b);
          return;
        }
        for (std::size_t i = start; i < paths.size(); ++i) {
          Bits c = b;
          for (std::size_t t = 0; t < n; ++t) c[t] |= paths[i][t];
          rec(i, left - 1, c);
        }
      };
  rec(0, k, Bits(n, 0));
  return out;
}

inline Family packing(std::size_t n,
                      const std::vector<std::vector<std::size_t>>& teams,
                      const std::vector<int>& capacities) {
  Family out;
  std::vector<int> load(capacities.size(), 0);
  Bits b(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.insert(b);
      return;
    }
    rec(i + 1);
    for (const auto& team : teams) {
      bool fits = true;
      for (std::size_t tool : team) fits = fits && load[tool] < capacities[tool];
      if (!fits) continue;
      for (std::size_t tool : team) ++load[tool];
      b[i] = 1;
      rec(i + 1);
      b[i] = 0;
      for (std::size_t tool : team) --load[tool];
    }
  };
  rec(0);
  return out;
}

// Dispatches on the concrete oracle type.
inline Family family_of(const sgsolve::DbrOracle& oracle) {
  const std::size_t n = oracle.dimension();
  if (auto* o = dynamic_cast<const sgsolve::UniformMatroidOracle*>(&oracle)) {
    return uniform_matroid(n, o->k());
  }
  if (auto* o = dynamic_cast<const sgsolve::BipartiteOracle*>(&oracle)) {
    return bipartite(n, o->allowed());
  }
  if (auto* o = dynamic_cast<const sgsolve::CoverageOracle*>(&oracle)) {
    return coverage(n, o->resources());
  }
  if (auto* o = dynamic_cast<const sgsolve::LayeredFlowOracle*>(&oracle)) {
    return layered(n, o->graph(), o->k());
  }
  if (auto* o = dynamic_cast<const sgsolve::PackingOracle*>(&oracle)) {
    return packing(n, o->teams(), o->capacities());
  }
  if (auto* o = dynamic_cast<const sgsolve::ExplicitOracle*>(&oracle)) {
    Family out;
    for (const auto& s : o->strategies()) out.insert(s.bits);
    return out;
  }
  throw std::logic_error("unknown oracle type");
}

inline Family downward(const Family& f) {
  Family out;
  for (const Bits& b : f) {
    std::vector<std::size_t> ones;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i]) ones.push_back(i);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ones.size()); ++mask) {
      Bits c(b.size(), 0);
      for (std::size_t j = 0; j < ones.size(); ++j)
        if ((mask >> j) & 1) c[ones[j]] = 1;
      out.insert(c);
    }
  }
  return out;
}

inline double dot(const Bits& b, const std::vector<double>& w) {
  double s = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) s += w[i];
  return s;
}

inline double best_value(const Family& f, const std::vector<double>& w) {
  double best = -1e300;
  for (const Bits& b : f) best = std::max(best, dot(b, w));
  return best;
}

// Weights k / 2^s with small numerators, so every subset sum is exact.
inline std::vector<double> dyadic_weights(std::mt19937& rng, std::size_t n,
                                          bool signed_weights,
                                          double zero_fraction = 0.0) {
  std::uniform_int_distribution<int> num(signed_weights ? -64 : 0, 64);
  std::uniform_int_distribution<int> shift(0, 6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(n);
  for (double& v : w) {
    v = u(rng) < zero_fraction ? 0.0 : std::ldexp(num(rng), -shift(rng));
  }
  return w;
}

}  // namespace brute

#endif  // SGSOLVE_TESTS_BRUTE_FORCE_HPP_
