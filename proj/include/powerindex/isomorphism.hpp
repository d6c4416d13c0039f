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
#include <optional>
#include <tuple>
#include <vector>

#include "powerindex/group.hpp"
#include "powerindex/power_graph.hpp"

namespace powerindex {

/// Isomorphism invariant: the sorted multiset of (element order, power-graph
/// degree, centralizer size) over all elements.
struct GroupFingerprint {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> profile;

  bool operator==(const GroupFingerprint &) const = default;
  auto operator<=>(const GroupFingerprint &) const = default;
};

namespace detail {

inline std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> element_profiles(const Group &g) {
  const auto pg = power_graph(g);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    std::size_t centralizer = 0;
    for (Element y = 0; y < g.order(); ++y) centralizer += g.mul(x, y) == g.mul(y, x);
    out[x] = {g.element_order(x), pg.graph.degree(x), centralizer};
  }
  return out;
}

/// Greedy generating set: repeatedly add an element of largest order outside
/// the subgroup generated so far.
inline std::vector<Element> generating_set(const Group &g) {
  std::vector<char> in_sub(g.order(), 0);
  in_sub[g.identity()] = 1;
  std::size_t covered = 1;
  std::vector<Element> gens;
  while (covered < g.order()) {
    Element best = 0;
    std::size_t best_order = 0;
    for (Element x = 0; x < g.order(); ++x)
      if (!in_sub[x] && g.element_order(x) > best_order) {
        best = x;
        best_order = g.element_order(x);
      }
    gens.push_back(best);
    // Closure under right multiplication by the generators.
    std::vector<Element> members;
    for (Element x = 0; x < g.order(); ++x)
      if (in_sub[x]) members.push_back(x);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Element s : gens) {
        const Element y = g.mul(members[i], s);
        if (!in_sub[y]) {
          in_sub[y] = 1;
          members.push_back(y);
        }
      }
    covered = members.size();
  }
  return gens;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Group &a, const Group &b)
      : a_(a), b_(b), gens_(generating_set(a)), prof_a_(element_profiles(a)), prof_b_(element_profiles(b)) {}

  std::optional<std::vector<Element>> run() {
    std::vector<Element> phi(a_.order(), kUnset), used(b_.order(), 0);
    phi[a_.identity()] = b_.identity();
    used[b_.identity()] = 1;
    if (!extend(0, phi, used)) return std::nullopt;
    return phi;
  }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  /// Defines phi on <gens[0..k)> by closing under right multiplication by
  /// those generators. Fails if the forced images collide or contradict.
  bool close(std::size_t k, std::vector<Element> &phi, std::vector<Element> &used) const {
    std::vector<Element> frontier;
    for (Element x = 0; x < a_.order(); ++x)
      if (phi[x] != kUnset) frontier.push_back(x);
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const Element x = frontier[i];
      for (std::size_t j = 0; j < k; ++j) {
        const Element y = a_.mul(x, gens_[j]);
        const Element img = b_.mul(phi[x], phi[gens_[j]]);
        if (phi[y] == kUnset) {
          if (used[img]) return false;
          phi[y] = img;
          used[img] = 1;
          frontier.push_back(y);
        } else if (phi[y] != img) {
          return false;
        }
      }
    }
    return true;
  }

  bool extend(std::size_t k, std::vector<Element> &phi, std::vector<Element> &used) {
    if (k == gens_.size()) return true;
    const Element g = gens_[k];
    if (phi[g] != kUnset) return extend(k + 1, phi, used);
    for (Element h = 0; h < b_.order(); ++h) {
      if (used[h] || prof_b_[h] != prof_a_[g]) continue;
      auto phi2 = phi;
      auto used2 = used;
      phi2[g] = h;
      used2[h] = 1;
      if (close(k + 1, phi2, used2) && extend(k + 1, phi2, used2)) {
        phi = std::move(phi2);
        used = std::move(used2);
        return true;
      }
    }
    return false;
  }

  const Group &a_;
  const Group &b_;
  std::vector<Element> gens_;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> prof_a_, prof_b_;
};

}  // namespace detail

inline GroupFingerprint fingerprint(const Group &g) {
  GroupFingerprint f{detail::element_profiles(g)};
  std::sort(f.profile.begin(), f.profile.end());
  return f;
}

/// An explicit isomorphism a -> b (phi[x] is the image of x), if one exists.
inline std::optional<std::vector<Element>> find_isomorphism(const Group &a, const Group &b) {
  if (a.order() != b.order()) return std::nullopt;
  return detail::IsomorphismSearch(a, b).run();
}

inline bool are_isomorphic(const Group &a, const Group &b) {
  if (a.order() != b.order() || fingerprint(a) != fingerprint(b)) return false;
  return find_isomorphism(a, b).has_value();
}

}  // namespace powerindex
