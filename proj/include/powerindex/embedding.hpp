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

/// Exhaustive search for embeddings (injective, edge-preserving vertex maps;
/// non-edges are unconstrained) of a pattern graph into a target graph.
///
/// The search is a plain backtracking over pattern vertices with bitset
/// candidate domains. Its only pruning beyond adjacency is symmetry breaking
/// on twins: if two pattern vertices u, v satisfy N(u) - {v} = N(v) - {u},
/// swapping their images maps embeddings to embeddings, so the images of each
/// twin class are forced to increase along the search order. A "no" answer is
/// therefore still a proof that no embedding exists.

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powerindex/graph.hpp"
#include "powerindex/group.hpp"
#include "powerindex/power_graph.hpp"

namespace powerindex {

/// Injective map pattern vertex -> group element certifying an embedding into
/// the power graph of `group_ref`.
struct EmbeddingWitness {
  std::vector<Element> map;
  std::string pattern_ref;
  std::string group_ref;
};

inline bool verify_embedding(const SimpleGraph &pattern, const SimpleGraph &target,
                             std::span<const Element> map) {
  if (map.size() != pattern.vertex_count()) return false;
  std::vector<char> used(target.vertex_count(), 0);
  for (Element x : map) {
    if (x >= target.vertex_count() || used[x]) return false;
    used[x] = 1;
  }
  for (auto [u, v] : pattern.edges())
    if (!target.adjacent(map[u], map[v])) return false;
  return true;
}

inline bool verify_embedding(const SimpleGraph &pattern, const Group &g, const EmbeddingWitness &w) {
  return verify_embedding(pattern, power_graph(g).graph, w.map);
}

namespace detail {

class EmbeddingSearch {
 public:
  /// Callback receives a complete embedding; return false to stop.
  using Visitor = std::function<bool(const std::vector<Element> &)>;

  EmbeddingSearch(const SimpleGraph &pattern, const SimpleGraph &target)
      : p_(pattern), t_(target), map_(pattern.vertex_count(), 0), used_(target.vertex_count()) {
    plan();
  }

  /// Visits embeddings in the search's deterministic order; returns how many
  /// were visited.
  std::size_t run(const Visitor &visit) {
    visited_ = 0;
    stop_ = false;
    if (!feasible()) return 0;
    descend(0, visit);
    return visited_;
  }

 private:
  bool feasible() const {
    if (p_.vertex_count() > t_.vertex_count()) return false;
    if (p_.edge_count() > t_.edge_count()) return false;
    auto dp = p_.degrees(), dt = t_.degrees();
    std::sort(dp.rbegin(), dp.rend());
    std::sort(dt.rbegin(), dt.rend());
    for (std::size_t i = 0; i < dp.size(); ++i)
      if (dp[i] > dt[i]) return false;
    return true;
  }

  void plan() {
    const std::size_t n = p_.vertex_count();
    std::vector<char> placed(n, 0);
    std::vector<std::size_t> placed_neighbours(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      Vertex best = n;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == n || placed_neighbours[v] > placed_neighbours[best] ||
            (placed_neighbours[v] == placed_neighbours[best] && p_.degree(v) > p_.degree(best)))
          best = v;
      }
      placed[best] = 1;
      order_.push_back(best);
      p_.neighbours(best).for_each([&](std::size_t w) { ++placed_neighbours[w]; });
    }

    // Twin classes: identical open neighbourhoods, else identical closed ones.
    twin_before_.assign(n, kNone);
    std::vector<DynamicBitset> closed(n);
    for (Vertex v = 0; v < n; ++v) {
      closed[v] = p_.neighbours(v);
      closed[v].set(v);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex v = order_[i];
      for (std::size_t j = i; j-- > 0;) {
        const Vertex u = order_[j];
        if (p_.neighbours(u) == p_.neighbours(v) || closed[u] == closed[v]) {
          twin_before_[v] = u;
          break;
        }
      }
    }

    static_domain_.assign(n, DynamicBitset(t_.vertex_count()));
    for (Vertex v = 0; v < n; ++v)
      for (Vertex x = 0; x < t_.vertex_count(); ++x)
        if (t_.degree(x) >= p_.degree(v)) static_domain_[v].set(x);
  }

  void descend(std::size_t depth, const Visitor &visit) {
    if (depth == order_.size()) {
      ++visited_;
      if (!visit(map_)) stop_ = true;
      return;
    }
    const Vertex v = order_[depth];
    DynamicBitset domain = static_domain_[v] - used_;
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex u = order_[i];
      if (p_.adjacent(u, v)) domain &= t_.neighbours(map_[u]);
    }
    std::size_t start = 0;
    if (twin_before_[v] != kNone) start = map_[twin_before_[v]] + 1;
    for (auto x = start < t_.vertex_count() ? (domain.test(start) ? start : domain.find_next(start))
                                             : DynamicBitset::npos;
         x != DynamicBitset::npos && !stop_; x = domain.find_next(x)) {
      map_[v] = static_cast<Element>(x);
      used_.set(x);
      descend(depth + 1, visit);
      used_.reset(x);
    }
  }

  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  const SimpleGraph &p_;
  const SimpleGraph &t_;
  std::vector<Vertex> order_;
  std::vector<Vertex> twin_before_;
  std::vector<DynamicBitset> static_domain_;
  std::vector<Element> map_;
  DynamicBitset used_;
  std::size_t visited_ = 0;
  bool stop_ = false;
};

}  // namespace detail

/// First embedding of `pattern` into `target` in search order, if any.
inline std::optional<std::vector<Element>> find_embedding(const SimpleGraph &pattern, const SimpleGraph &target) {
  std::optional<std::vector<Element>> found;
  detail::EmbeddingSearch(pattern, target).run([&](const std::vector<Element> &m) {
    found = m;
    return false;
  });
  return found;
}

/// Visits every embedding up to twin symmetry (at most `limit` of them).
inline std::size_t for_each_embedding(const SimpleGraph &pattern, const SimpleGraph &target,
                                      const std::function<bool(const std::vector<Element> &)> &visit,
                                      std::size_t limit = static_cast<std::size_t>(-1)) {
  std::size_t seen = 0;
  return detail::EmbeddingSearch(pattern, target).run([&](const std::vector<Element> &m) {
    return visit(m) && ++seen < limit;
  });
}

inline std::optional<EmbeddingWitness> embeds(const SimpleGraph &pattern, const Group &g,
                                              const std::string &pattern_ref = "pattern") {
  const auto pg = power_graph(g);
  auto m = find_embedding(pattern, pg.graph);
  if (!m) return std::nullopt;
  return EmbeddingWitness{std::move(*m), pattern_ref, g.label()};
}

}  // namespace powerindex
