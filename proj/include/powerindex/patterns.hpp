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

// Standard pattern graphs with fixed vertex numbering.

#include <cstdint>
#include <random>

#include "powerindex/graph.hpp"

namespace powerindex {

inline SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// Edgeless graph on n vertices.
inline SimpleGraph null_graph(std::size_t n) { return SimpleGraph(n); }

/// K_{s,t}: side U = 0..s-1, side W = s..s+t-1.
inline SimpleGraph complete_bipartite(std::size_t s, std::size_t t) {
  SimpleGraph g(s + t);
  for (Vertex u = 0; u < s; ++u)
    for (Vertex w = s; w < s + t; ++w) g.add_edge(u, w);
  return g;
}

/// K_{1,t} with centre 0.
inline SimpleGraph star(std::size_t t) { return complete_bipartite(1, t); }

/// nK_2: edges {2i, 2i+1}.
inline SimpleGraph one_factor(std::size_t n) {
  SimpleGraph g(2 * n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

/// K_1 + nK_2: apex 0 joined to everything, plus edges {2i+1, 2i+2}.
inline SimpleGraph apex_one_factor(std::size_t n) {
  SimpleGraph g(2 * n + 1);
  for (Vertex v = 1; v <= 2 * n; ++v) g.add_edge(0, v);
  for (Vertex i = 0; i < n; ++i) g.add_edge(2 * i + 1, 2 * i + 2);
  return g;
}

inline SimpleGraph cycle_graph(std::size_t n) {
  SimpleGraph g(n);
  if (n >= 3)
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  else if (n == 2)
    g.add_edge(0, 1);
  return g;
}

inline SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

/// G(n, p) with p = numerator / 2^16, driven directly by the engine's bits so
/// the output does not depend on the standard library's distributions.
inline SimpleGraph random_graph(std::size_t n, std::uint32_t p_numerator, std::mt19937_64 &rng) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if ((rng() & 0xffffu) < p_numerator) g.add_edge(u, v);
  return g;
}

}  // namespace powerindex
