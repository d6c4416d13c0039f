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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "powerindex/bitset.hpp"

namespace powerindex {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph stored as bitset adjacency rows. Always irreflexive
/// and symmetric; add_edge enforces both.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : rows_(n, DynamicBitset(n)) {}

  std::size_t vertex_count() const { return rows_.size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto &r : rows_) twice += r.count();
    return twice / 2;
  }

  /// Adds {u, v}. Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (rows_[u].test(v)) return false;
    rows_[u].set(v);
    rows_[v].set(u);
    return true;
  }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const DynamicBitset &neighbours(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(vertex_count());
    for (Vertex v = 0; v < vertex_count(); ++v) d[v] = degree(v);
    return d;
  }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < vertex_count(); ++u)
      rows_[u].for_each([&](std::size_t v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  bool operator==(const SimpleGraph &) const = default;

 private:
  void check_vertex(Vertex v) const {
    if (v >= vertex_count())
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph on " +
                              std::to_string(vertex_count()) + " vertices");
  }

  std::vector<DynamicBitset> rows_;
};

inline bool is_complete(const SimpleGraph &g) {
  const std::size_t n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != n - 1) return false;
  return true;
}

}  // namespace powerindex
