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

/// Power index computations: closed forms for complete and complete bipartite
/// patterns, and catalog search for arbitrary patterns.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "powerindex/catalog.hpp"
#include "powerindex/embedding.hpp"
#include "powerindex/group_spec.hpp"
#include "powerindex/isomorphism.hpp"
#include "powerindex/number_theory.hpp"
#include "powerindex/patterns.hpp"
#include "powerindex/power_graph.hpp"

namespace powerindex {

/// Least k with chi(k) >= n: the power index of K_n.
inline u64 theta_complete(u64 n) {
  detail::require_positive(n, "theta_complete");
  static thread_local ChiTable chi_of;
  u64 k = n;
  while (chi_of(k) < n) ++k;
  return k;
}

/// Whether the power index of K_n is n + 1, read off n + 1 (prime power or
/// twice an odd prime) and checked against theta_complete. Needs n >= 2 not a
/// prime power.
inline bool theta_kn_equals_nplus1(u64 n) {
  if (n < 2) throw std::invalid_argument("theta_kn_equals_nplus1: n must be >= 2");
  if (is_prime_power(n)) throw std::invalid_argument("theta_kn_equals_nplus1: " + std::to_string(n) + " is a prime power");
  const auto next = classify_order(n + 1);
  const bool predicted = next.is_prime_power || next.is_twice_odd_prime;
  const bool scanned = theta_complete(n) == n + 1;
  if (predicted != scanned)
    throw std::logic_error("theta_kn_equals_nplus1: classification and scan disagree at n = " + std::to_string(n));
  return predicted;
}

/// K_{s,t} (2 <= s <= t) is power-critical iff phi(s + t) >= s - 1.
inline bool is_kst_power_critical(u64 s, u64 t) {
  if (s < 2 || s > t) throw std::invalid_argument("is_kst_power_critical: need 2 <= s <= t");
  return totient(s + t) + 1 >= s;
}

/// Embedding of K_{s,t} (numbering as complete_bipartite) into the power graph
/// of Z_{s+t}: side U goes to the identity and generators, which are adjacent
/// to everything, side W to what is left.
inline EmbeddingWitness embed_kst_cyclic(u64 s, u64 t) {
  if (!is_kst_power_critical(s, t))
    throw std::invalid_argument("embed_kst_cyclic: phi(" + std::to_string(s + t) + ") < " + std::to_string(s - 1));
  const u64 n = s + t;
  const Group z = construct_group("Z" + std::to_string(n));
  std::vector<Element> hub, rest;
  for (Element x = 0; x < n; ++x) (x == z.identity() || z.element_order(x) == n ? hub : rest).push_back(x);
  // Any hub elements beyond the first s join W.
  rest.insert(rest.begin(), hub.begin() + static_cast<std::ptrdiff_t>(s), hub.end());
  hub.resize(s);
  std::sort(rest.begin(), rest.end());
  EmbeddingWitness w{hub, "K" + std::to_string(s) + "," + std::to_string(t), z.label()};
  w.map.insert(w.map.end(), rest.begin(), rest.end());
  if (!verify_embedding(complete_bipartite(s, t), z, w))
    throw std::logic_error("embed_kst_cyclic: constructed map is not an embedding");
  return w;
}

struct OptimalGroups {
  std::vector<std::string> groups;
  /// False when the catalog at this order is not known to be exhaustive.
  bool complete = false;
};

/// Order-(s+t) catalog groups whose power graph contains K_{s,t}.
inline OptimalGroups kst_optimal_groups(u64 s, u64 t) {
  if (!is_kst_power_critical(s, t))
    throw std::invalid_argument("kst_optimal_groups: K" + std::to_string(s) + "," + std::to_string(t) +
                                " is not power-critical");
  const auto pattern = complete_bipartite(s, t);
  const Catalog &cat = catalog_for_order(s + t);
  OptimalGroups out;
  out.complete = cat.complete;
  for (const auto &g : cat.groups)
    if (embeds(pattern, g)) out.groups.push_back(g.label());
  return out;
}

inline bool is_generalized_quaternion(const Group &g) {
  const std::size_t n = g.order();
  if (n < 8 || (n & (n - 1)) != 0) return false;
  return are_isomorphic(g, construct_group("Q" + std::to_string(n)));
}

struct ThetaResult {
  /// Order of the first group found; 0 when nothing up to max_order works.
  u64 value = 0;
  std::optional<EmbeddingWitness> witness;
  /// Every order searched below `value` had a complete catalog.
  bool exact = false;
  std::vector<u64> searched_orders;
};

/// Smallest catalog group order (from |V| up to max_order, default rho(|V|))
/// whose power graph contains `pattern`. Groups of one order are tried in
/// catalog order.
inline ThetaResult theta_search(const SimpleGraph &pattern, std::optional<u64> max_order = std::nullopt) {
  const u64 n = pattern.vertex_count();
  if (n == 0) throw std::invalid_argument("theta_search: pattern has no vertices");
  const u64 limit = max_order.value_or(rho(n));
  if (limit < n) throw std::invalid_argument("theta_search: max order is below the vertex count");
  if (limit > kMaxGroupOrder) throw std::invalid_argument("theta_search: max order exceeds " + std::to_string(kMaxGroupOrder));
  ThetaResult r;
  r.exact = true;
  for (u64 m = n; m <= limit; ++m) {
    r.searched_orders.push_back(m);
    const Catalog &cat = catalog_for_order(m);
    for (const auto &g : cat.groups) {
      if (auto w = embeds(pattern, g, "pattern")) {
        r.value = m;
        r.witness = std::move(w);
        return r;
      }
    }
    if (!cat.complete) r.exact = false;
  }
  return r;
}

struct CriticalResult {
  bool critical = false;
  /// A negative answer is catalog-relative when this is false.
  bool exact = false;
  std::optional<EmbeddingWitness> witness;
};

/// Whether `pattern` embeds in some group of order |V(pattern)|.
inline CriticalResult is_power_critical(const SimpleGraph &pattern) {
  const u64 n = pattern.vertex_count();
  if (n == 0) throw std::invalid_argument("is_power_critical: pattern has no vertices");
  if (is_prime_power(n)) {
    // Power graph of Z_n is complete; the identity map is an embedding.
    const Group z = construct_group("Z" + std::to_string(n));
    EmbeddingWitness w{{}, "pattern", z.label()};
    for (Element x = 0; x < n; ++x) w.map.push_back(x);
    if (!verify_embedding(pattern, z, w)) throw std::logic_error("is_power_critical: identity map rejected");
    return {true, true, std::move(w)};
  }
  auto r = theta_search(pattern, n);
  CriticalResult out;
  out.critical = r.value == n;
  out.exact = out.critical || r.exact;
  out.witness = std::move(r.witness);
  return out;
}

struct DegreeCheck {
  std::size_t degree = 0;
  /// Some non-identity element is adjacent to every other element.
  bool holds = false;
};

inline DegreeCheck max_nonidentity_degree(const Group &g) {
  if (g.order() < 2) throw std::invalid_argument("max_nonidentity_degree: trivial group");
  const auto pg = power_graph(g);
  DegreeCheck d;
  for (Element x = 0; x < g.order(); ++x)
    if (x != g.identity()) d.degree = std::max(d.degree, pg.graph.degree(x));
  d.holds = d.degree + 1 >= g.order();
  return d;
}

}  // namespace powerindex
