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

// Slow, obviously-correct reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "powerindex/group.hpp"

namespace oracle {

using Table = std::vector<std::vector<int>>;
using Adjacency = std::vector<std::vector<bool>>;

inline std::uint64_t totient(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++c;
  return c;
}

inline std::uint64_t least_prime_factor(std::uint64_t n) {
  for (std::uint64_t p = 2; p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

/// Walks n, n/p, ... down to 1, dividing by the least prime each time.
inline std::uint64_t chi(std::uint64_t n) {
  std::uint64_t sum = 0;
  while (true) {
    sum += totient(n);
    if (n == 1) return sum;
    n /= least_prime_factor(n);
  }
}

inline bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  const auto p = least_prime_factor(n);
  while (n % p == 0) n /= p;
  return n == 1;
}

inline std::uint64_t rho(std::uint64_t n) {
  std::uint64_t q = std::max<std::uint64_t>(n, 2);
  while (!is_prime_power(q)) ++q;
  return q;
}

/// x ~ y iff x != y and y = x^k or x = y^k for some k, by brute multiplication.
inline Adjacency power_graph(const powerindex::Group &g) {
  const std::size_t n = g.order();
  Adjacency adj(n, std::vector<bool>(n, false));
  for (powerindex::Element x = 0; x < n; ++x) {
    powerindex::Element y = x;
    for (std::size_t k = 0; k <= n; ++k) {
      if (y != x) adj[x][y] = adj[y][x] = true;
      y = g.mul(y, x);
    }
  }
  return adj;
}

/// Plain Bron-Kerbosch without pivoting.
inline std::size_t clique_number(const Adjacency &adj) {
  std::size_t best = 0;
  std::function<void(std::size_t, std::vector<std::size_t>, std::vector<std::size_t>)> bk =
      [&](std::size_t size, std::vector<std::size_t> p, std::vector<std::size_t> x) {
        if (p.empty() && x.empty()) best = std::max(best, size);
        while (!p.empty()) {
          const std::size_t v = p.back();
          std::vector<std::size_t> np, nx;
          for (auto w : p)
            if (adj[v][w]) np.push_back(w);
          for (auto w : x)
            if (adj[v][w]) nx.push_back(w);
          bk(size + 1, np, nx);
          p.pop_back();
          x.push_back(v);
        }
      };
  std::vector<std::size_t> all(adj.size());
  std::iota(all.begin(), all.end(), 0);
  bk(0, all, {});
  return best;
}

/// Size of a maximum matching by trying every edge at the lowest free vertex.
inline std::size_t max_matching_size(const Adjacency &adj) {
  const std::size_t n = adj.size();
  std::vector<bool> used(n, false);
  std::function<std::size_t(std::size_t)> go = [&](std::size_t v) -> std::size_t {
    while (v < n && used[v]) ++v;
    if (v >= n) return 0;
    used[v] = true;
    std::size_t best = go(v + 1);
    for (std::size_t u = v + 1; u < n; ++u)
      if (!used[u] && adj[v][u]) {
        used[u] = true;
        best = std::max(best, 1 + go(v + 1));
        used[u] = false;
      }
    used[v] = false;
    return best;
  };
  return go(0);
}

/// Whether `map` is a homomorphism (hence, if bijective, an isomorphism) a -> b.
inline bool is_homomorphism(const Table &a, const Table &b, const std::vector<int> &map) {
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (map[a[x][y]] != b[map[x]][map[y]]) return false;
  return true;
}

/// Tries every bijection fixing 0.
inline bool isomorphic(const Table &a, const Table &b) {
  if (a.size() != b.size()) return false;
  std::vector<int> map(a.size());
  std::iota(map.begin(), map.end(), 0);
  do {
    if (is_homomorphism(a, b, map)) return true;
  } while (std::next_permutation(map.begin() + 1, map.end()));
  return false;
}

inline Table table_of(const powerindex::Group &g) {
  Table t(g.order(), std::vector<int>(g.order()));
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      t[a][b] = static_cast<int>(g.mul(static_cast<powerindex::Element>(a), static_cast<powerindex::Element>(b)));
  return t;
}

/// Every group of order n (n <= 8) up to isomorphism, found by filling Latin
/// squares with identity 0 cell by cell and rejecting partial tables that
/// already break associativity.
inline std::vector<Table> all_groups(int n) {
  Table t(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) t[0][i] = t[i][0] = i;
  std::vector<Table> found;
  auto associative_so_far = [&](int a, int b) {
    const int v = t[a][b];
    for (int c = 0; c < n; ++c) {
      // (ab)c = a(bc)
      if (t[b][c] >= 0 && t[v][c] >= 0 && t[a][t[b][c]] >= 0 && t[v][c] != t[a][t[b][c]]) return false;
      // (ca)b = c(ab)
      if (t[c][a] >= 0 && t[t[c][a]][b] >= 0 && t[c][v] >= 0 && t[t[c][a]][b] != t[c][v]) return false;
    }
    return true;
  };
  std::function<void(int)> fill = [&](int cell) {
    if (cell == n * n) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (t[t[a][b]][c] != t[a][t[b][c]]) return;
      for (const auto &f : found)
        if (isomorphic(t, f)) return;
      found.push_back(t);
      return;
    }
    const int a = cell / n, b = cell % n;
    if (t[a][b] >= 0) return fill(cell + 1);
    for (int v = 0; v < n; ++v) {
      bool clash = false;
      for (int k = 0; k < n && !clash; ++k) clash = t[a][k] == v || t[k][b] == v;
      if (clash) continue;
      t[a][b] = v;
      if (associative_so_far(a, b)) fill(cell + 1);
      t[a][b] = -1;
    }
  };
  fill(0);
  return found;
}

/// Deterministic source for hand-rolled property tests.
inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(0x9e3779b97f4a7c15ULL ^ salt); }

}  // namespace oracle
