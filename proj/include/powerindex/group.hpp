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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "powerindex/number_theory.hpp"

namespace powerindex {

/// Group elements are the identifiers 0..n-1; 0 is always the identity.
using Element = std::uint32_t;

/// Largest group order the library will build a dense table for (|S_7|).
inline constexpr std::size_t kMaxGroupOrder = 5040;

/// Raised when a multiplication table fails a group axiom.
class GroupAxiomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Checks closure, identity at index 0, unique solvability of a*x = b and
/// x*a = b, then associativity (exhaustive for n <= 64, a fixed pseudo-random
/// sample of triples above that). Returns a description of the first violation.
inline std::optional<std::string> first_axiom_violation(std::size_t n,
                                                        std::span<const Element> table) {
  using std::to_string;
  if (n == 0) return "group order must be positive";
  if (n > kMaxGroupOrder) return "group order " + to_string(n) + " exceeds " + to_string(kMaxGroupOrder);
  if (table.size() != n * n) return "table has " + to_string(table.size()) + " entries, expected n*n";
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= n)
      return "closure: entry mul[" + to_string(i / n) + "][" + to_string(i % n) + "] = " +
             to_string(table[i]) + " is not an element";
  for (Element x = 0; x < n; ++x) {
    if (table[x] != x || table[x * n] != x)
      return "identity: element 0 is not a two-sided identity (fails at " + to_string(x) + ")";
  }
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (seen[table[a * n + x]]++)
        return "inverses: row " + to_string(a) + " repeats element " + to_string(table[a * n + x]);
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (seen[table[x * n + a]]++)
        return "inverses: column " + to_string(a) + " repeats element " + to_string(table[x * n + a]);
    }
  }
  auto check = [&](std::size_t a, std::size_t b, std::size_t c) -> std::optional<std::string> {
    const std::size_t ab = table[a * n + b], bc = table[b * n + c];
    if (table[ab * n + c] != table[a * n + bc])
      return "associativity: (" + to_string(a) + "*" + to_string(b) + ")*" + to_string(c) + " != " +
             to_string(a) + "*(" + to_string(b) + "*" + to_string(c) + ")";
    return std::nullopt;
  };
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (auto v = check(a, b, c)) return v;
  } else {
    std::mt19937_64 rng(0x5eed0fa55ULL);
    for (int s = 0; s < 200000; ++s) {
      if (auto v = check(rng() % n, rng() % n, rng() % n)) return v;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// A finite group given by its dense Cayley table. Immutable once built.
class Group {
 public:
  /// Validates every group axiom; throws GroupAxiomError naming the first one
  /// that fails.
  static Group from_table(std::size_t n, std::vector<Element> table, std::string label) {
    if (auto violation = detail::first_axiom_violation(n, table)) throw GroupAxiomError(*violation);
    return Group(n, std::move(table), std::move(label));
  }

  /// For family constructors whose tables are correct by construction.
  static Group from_trusted_table(std::size_t n, std::vector<Element> table, std::string label) {
    return Group(n, std::move(table), std::move(label));
  }

  std::size_t order() const { return n_; }
  Element identity() const { return 0; }
  const std::string &label() const { return label_; }

  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Element inverse(Element x) const { return inv_[check(x)]; }
  std::size_t element_order(Element x) const { return orders_[check(x)]; }

  std::span<const Element> inverses() const { return inv_; }
  std::span<const std::size_t> element_orders() const { return orders_; }
  std::span<const Element> table() const { return table_; }

  Element power(Element x, u64 k) const {
    k %= orders_[check(x)];
    Element r = identity();
    for (u64 i = 0; i < k; ++i) r = mul(r, x);
    return r;
  }

  /// Powers e, x, x^2, ..., x^(|x|-1).
  std::vector<Element> cyclic_subgroup(Element x) const {
    std::vector<Element> out;
    out.reserve(orders_[check(x)]);
    Element y = identity();
    do {
      out.push_back(y);
      y = mul(y, x);
    } while (y != identity());
    return out;
  }

  std::vector<Element> involutions() const {
    std::vector<Element> out;
    for (Element x = 0; x < n_; ++x)
      if (orders_[x] == 2) out.push_back(x);
    return out;
  }

  bool is_abelian() const {
    for (Element a = 0; a < n_; ++a)
      for (Element b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  bool is_cyclic() const {
    for (auto o : orders_)
      if (o == n_) return true;
    return false;
  }

  bool operator==(const Group &o) const { return n_ == o.n_ && table_ == o.table_; }

 private:
  Group(std::size_t n, std::vector<Element> table, std::string label)
      : n_(n), table_(std::move(table)), label_(std::move(label)), inv_(n), orders_(n) {
    for (Element x = 0; x < n_; ++x) {
      std::size_t k = 1;
      Element y = x;
      while (y != identity()) {
        y = mul(y, x);
        ++k;
      }
      orders_[x] = k;
    }
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        if (mul(x, y) == identity()) {
          inv_[x] = y;
          break;
        }
  }

  std::size_t check(Element x) const {
    if (x >= n_)
      throw std::out_of_range("element " + std::to_string(x) + " out of range for group of order " +
                              std::to_string(n_));
    return x;
  }

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::string label_;
  std::vector<Element> inv_;
  std::vector<std::size_t> orders_;
};

/// Least k >= 1 with x^k = e.
inline std::size_t element_order(const Group &g, Element x) { return g.element_order(x); }

inline std::vector<Element> involutions(const Group &g) { return g.involutions(); }

/// The set U-bar: involutions together with the identity, ascending.
inline std::vector<Element> involutions_and_identity(const Group &g) {
  std::vector<Element> out{g.identity()};
  for (Element x : g.involutions()) out.push_back(x);
  return out;
}

enum class PrimeSubgroupStatus {
  unique,
  not_unique,
  /// p does not divide |G|, so there is no subgroup of order p at all.
  no_such_subgroup,
};

/// Whether all elements of prime order p generate one common subgroup.
inline PrimeSubgroupStatus unique_subgroup_of_prime_order(const Group &g, u64 p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (g.order() % p != 0) return PrimeSubgroupStatus::no_such_subgroup;
  std::optional<std::vector<Element>> first;
  for (Element x = 0; x < g.order(); ++x) {
    if (g.element_order(x) != p) continue;
    auto h = g.cyclic_subgroup(x);
    std::sort(h.begin(), h.end());
    if (!first)
      first = std::move(h);
    else if (*first != h)
      return PrimeSubgroupStatus::not_unique;
  }
  return PrimeSubgroupStatus::unique;
}

/// Checks the invariants every Group value must satisfy. Empty on success.
inline std::optional<std::string> group_invariant_violation(const Group &g) {
  if (auto v = detail::first_axiom_violation(g.order(), g.table())) return v;
  for (Element x = 0; x < g.order(); ++x) {
    const std::size_t o = g.element_order(x);
    if (g.order() % o != 0) return "order of " + std::to_string(x) + " does not divide |G|";
    if ((x == g.identity()) != (o == 1)) return "element order 1 must be the identity only";
    if (g.mul(x, g.inverse(x)) != g.identity()) return "inverse table wrong at " + std::to_string(x);
    if (g.element_order(g.inverse(x)) != o) return "|x| != |x^-1| at " + std::to_string(x);
  }
  return std::nullopt;
}

}  // namespace powerindex
