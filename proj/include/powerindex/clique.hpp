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
#include <vector>

#include "powerindex/graph.hpp"

namespace powerindex {

struct CliqueResult {
  std::size_t size = 0;
  /// Ascending vertex identifiers.
  std::vector<Vertex> witness;
};

namespace detail {

/// Exact maximum clique: branch and bound where each candidate set is
/// greedily coloured in ascending-identifier order and the colour count bounds
/// the clique that can still be added.
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const SimpleGraph &g) : g_(g) {}

  CliqueResult run() {
    DynamicBitset all(g_.vertex_count());
    all.set_all();
    std::vector<Vertex> current;
    expand(current, all);
    CliqueResult r{best_.size(), best_};
    std::sort(r.witness.begin(), r.witness.end());
    return r;
  }

 private:
  /// Colours `p` greedily; returns vertices in colour order with the running
  /// colour number of each.
  void colour(const DynamicBitset &p, std::vector<Vertex> &order, std::vector<std::size_t> &bounds) const {
    order.clear();
    bounds.clear();
    DynamicBitset uncoloured = p;
    std::size_t colour_number = 0;
    while (uncoloured.any()) {
      ++colour_number;
      DynamicBitset q = uncoloured;
      for (auto v = q.find_first(); v != DynamicBitset::npos; v = q.find_next(v)) {
        q -= g_.neighbours(v);
        uncoloured.reset(v);
        order.push_back(v);
        bounds.push_back(colour_number);
      }
    }
  }

  void expand(std::vector<Vertex> &current, DynamicBitset p) {
    std::vector<Vertex> order;
    std::vector<std::size_t> bounds;
    colour(p, order, bounds);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bounds[i] <= best_.size()) return;
      const Vertex v = order[i];
      current.push_back(v);
      DynamicBitset next = p & g_.neighbours(v);
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      p.reset(v);
    }
  }

  const SimpleGraph &g_;
  std::vector<Vertex> best_;
};

}  // namespace detail

inline CliqueResult clique_number(const SimpleGraph &g) {
  if (g.vertex_count() == 0) return {};
  return detail::MaxCliqueSearch(g).run();
}

inline bool is_clique(const SimpleGraph &g, const std::vector<Vertex> &vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

}  // namespace powerindex
