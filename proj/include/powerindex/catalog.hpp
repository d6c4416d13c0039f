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

/// Per-order catalogs of pairwise non-isomorphic groups built from the named
/// group families. A catalog is marked complete only for orders where the family
/// list is known to reach every isomorphism class; docs/catalog-completeness.md
/// gives the argument order by order, and the unit tests check that the
/// catalog size equals the number of isomorphism classes for each of them.

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "powerindex/group_spec.hpp"
#include "powerindex/isomorphism.hpp"

namespace powerindex {

struct Catalog {
  std::size_t order = 0;
  std::vector<Group> groups;
  bool complete = false;
};

/// Orders at which the family catalog provably contains every group.
inline constexpr std::array kCompleteOrders = {
    1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21, 22, 23,
    25, 26, 28, 29, 30, 31, 33, 34, 35, 37, 38, 39, 41, 42, 43, 44, 45, 46, 47, 49, 50, 51,
    52, 53, 55, 57, 58, 59, 60, 61, 62, 63};

/// Whitelisted orders up to 64; above that only p and p^2, where every group
/// is abelian and the abelian families are exhaustive.
inline bool catalog_is_complete(std::size_t m) {
  if (m > 64) {
    const auto f = factorize(m);
    return f.factors.size() == 1 && f.factors[0].exponent <= 2;
  }
  return std::find(kCompleteOrders.begin(), kCompleteOrders.end(), static_cast<int>(m)) !=
         kCompleteOrders.end();
}

/// Number of isomorphism classes of groups of order m (OEIS A000001), m <= 64.
inline std::size_t known_group_count(std::size_t m) {
  static constexpr std::array<std::size_t, 65> counts = {
      0, 1,  1, 1, 2,  1, 2,  1, 5,  2, 2,  1, 5,  1, 2,  1, 14, 1, 5,  1, 5,  2,
      2, 1,  15, 2, 2, 5, 4,  1, 4,  1, 51, 1, 2,  1, 14, 1, 2,  2, 14, 1, 6,  1,
      4, 2,  2, 1, 52, 2, 5, 1, 5,  1, 15, 2, 13, 2, 2,  1, 13, 1, 2,  4, 267};
  if (m == 0 || m >= counts.size()) throw std::out_of_range("known_group_count covers orders 1..64");
  return counts[m];
}

namespace detail {

inline std::vector<std::vector<u64>> partitions(unsigned r, unsigned max_part) {
  if (r == 0) return {{}};
  std::vector<std::vector<u64>> out;
  for (unsigned part = std::min(r, max_part); part >= 1; --part)
    for (auto rest : partitions(r - part, part)) {
      rest.insert(rest.begin(), part);
      out.push_back(std::move(rest));
    }
  return out;
}

/// Invariant factor lists d1 | d2 | ... | dk, one per abelian group of order m.
/// The cyclic group (single factor) comes first.
inline std::vector<std::vector<u64>> abelian_invariant_factors(u64 m) {
  if (m == 1) return {{1}};
  std::vector<std::vector<u64>> result{{}};
  for (auto [p, r] : factorize(m).factors) {
    std::vector<std::vector<u64>> next;
    for (const auto &partial : result)
      for (const auto &part : partitions(r, r)) {
        // Largest parts pair with the largest invariant factors.
        std::vector<u64> merged = partial;
        const std::size_t k = std::max(merged.size(), part.size());
        merged.insert(merged.begin(), k - merged.size(), 1);
        for (std::size_t i = 0; i < part.size(); ++i) {
          u64 q = 1;
          for (u64 e = 0; e < part[i]; ++e) q *= p;
          merged[k - 1 - i] *= q;
        }
        next.push_back(std::move(merged));
      }
    result = std::move(next);
  }
  std::stable_sort(result.begin(), result.end(),
                   [](const auto &a, const auto &b) { return a.size() < b.size(); });
  return result;
}

inline GroupSpec family(GroupSpec::Kind k, std::vector<u64> params) {
  GroupSpec s;
  s.kind = k;
  s.params = std::move(params);
  return s;
}

/// Family specs of order m, in catalog priority order (cyclic first).
inline std::vector<GroupSpec> candidate_specs(u64 m, const std::vector<GroupSpec> &(*specs_of)(u64)) {
  using K = GroupSpec::Kind;
  std::vector<GroupSpec> out;
  for (auto &ds : abelian_invariant_factors(m))
    out.push_back(ds.size() == 1 ? family(K::cyclic, {m}) : family(K::abelian, ds));
  if (m % 2 == 0 && m >= 2) {
    out.push_back(family(K::dihedral, {m}));
    if (m % 4 == 0 && m >= 8) {
      const bool two_power = (m & (m - 1)) == 0;
      out.push_back(two_power ? family(K::quaternion, {m}) : family(K::dicyclic, {m / 4}));
    }
    for (auto &ds : abelian_invariant_factors(m / 2))
      if (ds.size() > 1) out.push_back(family(K::generalized_dihedral, ds));
  }
  static constexpr std::array<u64, 8> sym = {1, 2, 6, 24, 120, 720, 5040, 0};
  for (u64 k = 3; k <= 7; ++k) {
    if (sym[k - 1] == m) out.push_back(family(K::symmetric, {k}));
    if (k >= 4 && sym[k - 1] / 2 == m) out.push_back(family(K::alternating, {k}));
  }
  for (u64 k = 2; k < m; ++k) {
    if (m % k != 0) continue;
    const u64 base = m / k;
    if (base < 3) continue;
    for (u64 r = 2; r < base; ++r) {
      if (gcd(r, base) != 1) continue;
      u64 rk = 1;
      for (u64 i = 0; i < k; ++i) rk = rk * r % base;
      if (rk == 1) out.push_back(family(K::metacyclic, {base, k, r}));
    }
  }
  for (u64 a = 2; a * a <= m; ++a) {
    if (m % a != 0) continue;
    for (const auto &left : specs_of(a))
      for (const auto &right : specs_of(m / a)) {
        GroupSpec p;
        p.kind = K::product;
        p.children = {left, right};
        out.push_back(std::move(p));
      }
  }
  return out;
}

class CatalogCache {
 public:
  static CatalogCache &instance() {
    static CatalogCache cache;
    return cache;
  }

  const Catalog &get(std::size_t m) {
    std::lock_guard lock(mutex_);
    return build_locked(m);
  }

  static const std::vector<GroupSpec> &specs_of(u64 m) {
    // Only reached from inside build_locked, which already holds the mutex.
    auto &self = instance();
    self.build_locked(m);
    return self.specs_.at(m);
  }

 private:
  const Catalog &build_locked(std::size_t m) {
    if (auto it = catalogs_.find(m); it != catalogs_.end()) return *it->second;
    auto cat = std::make_unique<Catalog>();
    cat->order = m;
    cat->complete = catalog_is_complete(m);
    std::vector<GroupSpec> kept_specs;
    std::vector<GroupFingerprint> prints;
    for (const auto &spec : candidate_specs(m, &CatalogCache::specs_of)) {
      if (detail::checked_order(spec) != m) continue;
      Group g = construct_group(spec);
      GroupFingerprint f = fingerprint(g);
      bool duplicate = false;
      for (std::size_t i = 0; i < cat->groups.size() && !duplicate; ++i)
        duplicate = prints[i] == f && find_isomorphism(g, cat->groups[i]).has_value();
      if (duplicate) continue;
      cat->groups.push_back(std::move(g));
      prints.push_back(std::move(f));
      kept_specs.push_back(spec);
    }
    specs_[m] = std::move(kept_specs);
    return *(catalogs_[m] = std::move(cat));
  }

  std::mutex mutex_;
  std::map<std::size_t, std::unique_ptr<Catalog>> catalogs_;
  std::map<std::size_t, std::vector<GroupSpec>> specs_;
};

}  // namespace detail

/// All family-expressible groups of order m up to isomorphism, cyclic first.
/// The result is cached for the lifetime of the process.
inline const Catalog &catalog_for_order(std::size_t m) {
  if (m == 0) throw std::invalid_argument("catalog order must be >= 1");
  return detail::CatalogCache::instance().get(m);
}

}  // namespace powerindex
