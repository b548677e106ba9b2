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

#include "min_cost_flow.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

namespace sgsolve::internal {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}  // namespace

std::pair<std::size_t, std::size_t> MinCostFlow::add_arc(std::size_t from,
                                                         std::size_t to,
                                                         int capacity,
                                                         double cost) {
  const std::size_t slot = adjacency_[from].size();
  const std::size_t rev_slot = adjacency_[to].size() + (from == to ? 1 : 0);
  adjacency_[from].push_back(Arc{to, rev_slot, capacity, cost});
  adjacency_[to].push_back(Arc{from, slot, 0, -cost});
  return {from, slot};
}

int MinCostFlow::flow_on(std::pair<std::size_t, std::size_t> handle) const {
  const Arc& arc = adjacency_[handle.first][handle.second];
  return adjacency_[arc.to][arc.rev].capacity;
}

bool MinCostFlow::initial_potentials(std::size_t source) {
  const std::size_t n = adjacency_.size();
  potential_.assign(n, kInf);
  std::vector<std::uint8_t> in_queue(n, 0);
  std::vector<std::size_t> relaxations(n, 0);
  std::deque<std::size_t> queue{source};
  potential_[source] = 0.0;
  in_queue[source] = 1;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    in_queue[u] = 0;
    for (const Arc& arc : adjacency_[u]) {
      if (arc.capacity <= 0) continue;
      const double candidate = potential_[u] + arc.cost;
      if (candidate < potential_[arc.to]) {
        potential_[arc.to] = candidate;
        if (!in_queue[arc.to]) {
          if (++relaxations[arc.to] > n) return false;  // negative cycle
          queue.push_back(arc.to);
          in_queue[arc.to] = 1;
        }
      }
    }
  }
  for (double& p : potential_) {
    if (p == kInf) p = 0.0;
  }
  return true;
}

bool MinCostFlow::shortest_path(std::size_t source, std::size_t sink) {
  const std::size_t n = adjacency_.size();
  dist_.assign(n, kInf);
  prev_node_.assign(n, kNone);
  prev_arc_.assign(n, kNone);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  dist_[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist_[u]) continue;
    for (std::size_t slot = 0; slot < adjacency_[u].size(); ++slot) {
      const Arc& arc = adjacency_[u][slot];
      if (arc.capacity <= 0) continue;
      double reduced = arc.cost + potential_[u] - potential_[arc.to];
      if (reduced < 0.0) reduced = 0.0;  // rounding noise only
      const double candidate = d + reduced;
      if (candidate < dist_[arc.to]) {
        dist_[arc.to] = candidate;
        prev_node_[arc.to] = u;
        prev_arc_[arc.to] = slot;
        heap.emplace(candidate, arc.to);
      }
    }
  }
  if (dist_[sink] == kInf) return false;
  for (std::size_t v = 0; v < n; ++v) {
    if (dist_[v] < kInf) potential_[v] += dist_[v];
  }
  return true;
}

MinCostFlow::Result MinCostFlow::run(std::size_t source, std::size_t sink,
                                     int max_flow, bool only_improving) {
  Result result;
  if (!initial_potentials(source)) return result;
  while (result.flow < max_flow) {
    if (!shortest_path(source, sink)) break;
    // True path cost (potentials telescope).
    const double path_cost = potential_[sink] - potential_[source];
    if (only_improving && path_cost >= 0.0) break;
    int push = max_flow - result.flow;
    for (std::size_t v = sink; v != source; v = prev_node_[v]) {
      push = std::min(push, adjacency_[prev_node_[v]][prev_arc_[v]].capacity);
    }
    for (std::size_t v = sink; v != source; v = prev_node_[v]) {
      Arc& arc = adjacency_[prev_node_[v]][prev_arc_[v]];
      arc.capacity -= push;
      adjacency_[arc.to][arc.rev].capacity += push;
    }
    result.flow += push;
    result.cost += push * path_cost;
  }
  return result;
}

}  // namespace sgsolve::internal
