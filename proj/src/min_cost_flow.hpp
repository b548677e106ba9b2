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

#ifndef SGSOLVE_SRC_MIN_COST_FLOW_HPP_
#define SGSOLVE_SRC_MIN_COST_FLOW_HPP_

#include <cstddef>
#include <vector>

namespace sgsolve::internal {

// Successive shortest augmenting paths with node potentials. Arc costs may
// be negative as long as the initial graph has no negative cycle; the first
// potentials come from a label-correcting (Bellman-Ford queue) pass.
class MinCostFlow {
 public:
  struct Arc {
    std::size_t to;
    std::size_t rev;  // index of the reverse arc in adjacency_[to]
    int capacity;
    double cost;
  };

  explicit MinCostFlow(std::size_t nodes) : adjacency_(nodes) {}

  // Returns a handle (node, slot) usable with flow_on().
  std::pair<std::size_t, std::size_t> add_arc(std::size_t from, std::size_t to,
                                              int capacity, double cost);

  struct Result {
    int flow = 0;
    double cost = 0.0;
  };
  // Pushes up to `max_flow` units one shortest path at a time. With
  // `only_improving`, stops as soon as the next path has cost >= 0, which
  // yields a minimum-cost flow of unconstrained value.
  Result run(std::size_t source, std::size_t sink, int max_flow,
             bool only_improving);

  int flow_on(std::pair<std::size_t, std::size_t> handle) const;

 private:
  bool initial_potentials(std::size_t source);
  bool shortest_path(std::size_t source, std::size_t sink);

  std::vector<std::vector<Arc>> adjacency_;
  std::vector<double> potential_;
  std::vector<double> dist_;
  std::vector<std::size_t> prev_node_;
  std::vector<std::size_t> prev_arc_;
};

}  // namespace sgsolve::internal

#endif  // SGSOLVE_SRC_MIN_COST_FLOW_HPP_
