// Copyright 2026 The powerindex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "powerindex/graph.hpp"
#include "powerindex/group.hpp"

namespace powerindex {

/// Undirected power graph: vertex i is group element i, and distinct x, y are
/// adjacent iff one lies in the cyclic subgroup generated by the other.
struct PowerGraph {
  SimpleGraph graph;
  std::string group_label;
};

inline PowerGraph power_graph(const Group &g) {
  const std::size_t n = g.order();
  PowerGraph pg{SimpleGraph(n), g.label()};
  // Marking the powers of each y once gives every edge {x, y} with x in <y>.
  for (Element y = 0; y < n; ++y) {
    Element x = g.mul(y, y);
    while (x != y) {
      pg.graph.add_edge(x, y);
      x = g.mul(x, y);
    }
  }
  return pg;
}

/// Vertex labels of the form "x |x|=k", used by the DOT exporter.
inline std::vector<std::string> element_order_labels(const Group &g) {
  std::vector<std::string> out;
  out.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x)
    out.push_back(std::to_string(x) + " |x|=" + std::to_string(g.element_order(x)));
  return out;
}

}  // namespace powerindex
