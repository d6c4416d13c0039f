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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "powerindex/embedding.hpp"
#include "powerindex/graph.hpp"
#include "powerindex/group.hpp"
#include "powerindex/patterns.hpp"

namespace powerindex {

/// A set of pairwise disjoint edges, each stored as (min, max), sorted.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
    for (auto &[u, v] : edges_)
      if (u > v) std::swap(u, v);
    std::sort(edges_.begin(), edges_.end());
  }

  const std::vector<Edge> &edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

  std::vector<Vertex> covered() const {
    std::vector<Vertex> out;
    for (auto [u, v] : edges_) {
      out.push_back(u);
      out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// mate[v] = partner of v, or v itself if uncovered.
  std::vector<Vertex> mates(std::size_t n) const {
    std::vector<Vertex> mate(n);
    std::iota(mate.begin(), mate.end(), Vertex{0});
    for (auto [u, v] : edges_) {
      mate[u] = v;
      mate[v] = u;
    }
    return mate;
  }

  bool is_perfect(std::size_t n) const { return 2 * size() == n; }
  bool is_near_perfect(std::size_t n) const { return 2 * size() + 1 == n; }

  bool operator==(const Matching &) const = default;

 private:
  std::vector<Edge> edges_;
};

/// Empty when `m` is a matching of `g`; otherwise the first problem found.
inline std::optional<std::string> matching_violation(const SimpleGraph &g, const Matching &m) {
  std::vector<char> seen(g.vertex_count(), 0);
  for (auto [u, v] : m.edges()) {
    const std::string e = "{" + std::to_string(u) + "," + std::to_string(v) + "}";
    if (u >= g.vertex_count() || v >= g.vertex_count()) return "edge " + e + " out of range";
    if (!g.adjacent(u, v)) return "edge " + e + " is not an edge of the graph";
    if (seen[u]++ || seen[v]++) return "edge " + e + " shares a vertex with another edge";
  }
  return std::nullopt;
}

namespace detail {

/// Edmonds' blossom algorithm: repeated BFS for augmenting paths from each
/// exposed vertex, contracting odd cycles through their base. O(V^3).
class Blossom {
 public:
  explicit Blossom(const SimpleGraph &g)
      : g_(g), n_(g.vertex_count()), match_(n_, kNone), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  Matching run() {
    // Greedy warm start.
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      for (auto u = g_.neighbours(v).find_first(); u != DynamicBitset::npos; u = g_.neighbours(v).find_next(u))
        if (match_[u] == kNone) {
          match_[u] = v;
          match_[v] = u;
          break;
        }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (match_[root] != kNone) continue;
      Vertex v = find_path(root);
      while (v != kNone) {
        const Vertex pv = parent_[v], ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n_; ++v)
      if (match_[v] != kNone && v < match_[v]) edges.emplace_back(v, match_[v]);
    return Matching(std::move(edges));
  }

 private:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  Vertex lca(Vertex a, Vertex b) const {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNone);
    std::iota(base_.begin(), base_.end(), Vertex{0});
    used_[root] = 1;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      const auto &row = g_.neighbours(v);
      for (auto to = row.find_first(); to != DynamicBitset::npos; to = row.find_next(to)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          const Vertex cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return kNone;
  }

  const SimpleGraph &g_;
  std::size_t n_;
  std::vector<Vertex> match_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

}  // namespace detail

/// Maximum-cardinality matching in a general graph (blossom algorithm).
inline Matching maximum_matching(const SimpleGraph &g) { return detail::Blossom(g).run(); }

inline constexpr std::size_t kBruteForceMatchingLimit = 20;

/// Maximum matching by memoised exhaustive search over vertex subsets; for
/// cross-checking the blossom engine on graphs with at most 20 vertices.
inline Matching maximum_matching_brute_force(const SimpleGraph &g) {
  const std::size_t n = g.vertex_count();
  if (n > kBruteForceMatchingLimit)
    throw std::invalid_argument("brute-force matching is limited to " +
                                std::to_string(kBruteForceMatchingLimit) + " vertices");
  const std::uint32_t full = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  // best[mask] = maximum matching size within the vertex set `mask`.
  std::vector<std::int8_t> best(std::size_t{1} << n, -1);
  std::function<int(std::uint32_t)> solve = [&](std::uint32_t mask) -> int {
    if (mask == 0) return 0;
    if (best[mask] >= 0) return best[mask];
    const auto v = static_cast<Vertex>(std::countr_zero(mask));
    const std::uint32_t rest = mask & ~(std::uint32_t{1} << v);
    int r = solve(rest);
    for (Vertex u = v + 1; u < n; ++u)
      if ((rest >> u & 1u) && g.adjacent(v, u)) r = std::max(r, 1 + solve(rest & ~(std::uint32_t{1} << u)));
    best[mask] = static_cast<std::int8_t>(r);
    return r;
  };
  solve(full);
  // Walk the table to recover one optimal matching.
  std::vector<Edge> edges;
  std::uint32_t mask = full;
  while (mask != 0) {
    const auto v = static_cast<Vertex>(std::countr_zero(mask));
    const std::uint32_t rest = mask & ~(std::uint32_t{1} << v);
    const int target = solve(mask);
    if (solve(rest) == target) {
      mask = rest;
      continue;
    }
    for (Vertex u = v + 1; u < n; ++u) {
      const std::uint32_t after = rest & ~(std::uint32_t{1} << u);
      if ((rest >> u & 1u) && g.adjacent(v, u) && 1 + solve(after) == target) {
        edges.emplace_back(v, u);
        mask = after;
        break;
      }
    }
  }
  return Matching(std::move(edges));
}

/// Pairs every non-identity element of an odd-order group with its inverse;
/// the identity is the single uncovered vertex.
inline Matching near_perfect_matching_odd(const Group &g) {
  if (g.order() % 2 == 0)
    throw std::invalid_argument("near_perfect_matching_odd: group " + g.label() + " has even order");
  std::vector<Edge> edges;
  for (Element x = 1; x < g.order(); ++x)
    if (x < g.inverse(x)) edges.emplace_back(x, g.inverse(x));
  return Matching(std::move(edges));
}

/// The embedding of K_1 + nK_2 (numbering as apex_one_factor) into an
/// odd-order group of order 2n+1: apex -> e, each pair -> {x, x^-1}.
inline EmbeddingWitness apex_one_factor_embedding(const Group &g) {
  const Matching m = near_perfect_matching_odd(g);
  EmbeddingWitness w;
  w.map.assign(g.order(), g.identity());
  w.pattern_ref = "K1+" + std::to_string(m.size()) + "K2";
  w.group_ref = g.label();
  for (std::size_t i = 0; i < m.size(); ++i) {
    w.map[2 * i + 1] = static_cast<Element>(m.edges()[i].first);
    w.map[2 * i + 2] = static_cast<Element>(m.edges()[i].second);
  }
  return w;
}

/// Embedding of nK_2 (numbering as one_factor) read off a perfect matching.
inline EmbeddingWitness one_factor_embedding(const Matching &m, const std::string &group_ref) {
  EmbeddingWitness w;
  w.pattern_ref = std::to_string(m.size()) + "K2";
  w.group_ref = group_ref;
  for (auto [u, v] : m.edges()) {
    w.map.push_back(static_cast<Element>(u));
    w.map.push_back(static_cast<Element>(v));
  }
  return w;
}

}  // namespace powerindex
