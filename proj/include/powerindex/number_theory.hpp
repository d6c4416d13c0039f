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

/// Integer arithmetic behind the clique-number formula for cyclic power
/// graphs: factorization, Euler's totient, the totient chain sum chi(n),
/// and the smallest prime power rho(n).

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace powerindex {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime;
  unsigned exponent;

  bool operator==(const PrimePower &) const = default;
};

/// Prime factorization with strictly increasing primes.
struct Factorization {
  std::vector<PrimePower> factors;

  u64 value() const {
    u64 n = 1;
    for (auto [p, r] : factors)
      for (unsigned i = 0; i < r; ++i) n *= p;
    return n;
  }
  std::size_t distinct_primes() const { return factors.size(); }
  bool operator==(const Factorization &) const = default;
};

namespace detail {
inline void require_positive(u64 n, const char *what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": argument must be >= 1");
}
}  // namespace detail

/// Trial division; fine for the ~1e7 inputs this library works with.
inline Factorization factorize(u64 n) {
  detail::require_positive(n, "factorize");
  Factorization f;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned r = 0;
    while (n % p == 0) {
      n /= p;
      ++r;
    }
    f.factors.push_back({p, r});
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// 1 is not a prime power.
inline bool is_prime_power(u64 n) { return n > 1 && factorize(n).factors.size() == 1; }

inline bool is_twice_odd_prime(u64 n) { return n % 2 == 0 && n / 2 > 2 && is_prime(n / 2); }

inline u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

inline u64 lcm(u64 a, u64 b) { return a / gcd(a, b) * b; }

inline u64 totient(const Factorization &f) {
  u64 phi = 1;
  for (auto [p, r] : f.factors) {
    phi *= p - 1;
    for (unsigned i = 1; i < r; ++i) phi *= p;
  }
  return phi;
}

inline u64 totient(u64 n) {
  detail::require_positive(n, "totient");
  return totient(factorize(n));
}

/// chi(n) as the totient sum over the divisor chain that strips the primes of
/// n one at a time, smallest prime first: n, n/p1, ..., n/p1^r1, n/(p1^r1 p2),
/// ..., 1.
inline u64 chi_chain_sum(u64 n) {
  detail::require_positive(n, "chi");
  const Factorization f = factorize(n);
  u64 sum = totient(n);
  u64 d = n;
  for (auto [p, r] : f.factors) {
    for (unsigned i = 0; i < r; ++i) {
      d /= p;
      sum += totient(d);
    }
  }
  return sum;
}

/// chi(n) = phi(n) + chi(n / p), p the least prime factor of n; chi(1) = 1.
inline u64 chi_recursive(u64 n) {
  detail::require_positive(n, "chi");
  u64 sum = 0;
  while (n > 1) {
    sum += totient(n);
    n /= factorize(n).factors.front().prime;
  }
  return sum + 1;
}

/// Evaluates both forms and insists they agree.
inline u64 chi(u64 n) {
  const u64 a = chi_chain_sum(n);
  const u64 b = chi_recursive(n);
  if (a != b)
    throw std::logic_error("chi(" + std::to_string(n) + "): chain sum " + std::to_string(a) +
                           " disagrees with recursion " + std::to_string(b));
  return a;
}

/// Smallest prime power q >= n.
inline u64 rho(u64 n) {
  u64 q = n < 2 ? 2 : n;
  while (!is_prime_power(q)) ++q;
  return q;
}

struct OrderClass {
  Factorization factorization;
  bool is_prime_power = false;
  bool is_twice_odd_prime = false;
};

inline OrderClass classify_order(u64 n) {
  OrderClass c;
  c.factorization = factorize(n);
  const auto &fs = c.factorization.factors;
  c.is_prime_power = fs.size() == 1;
  c.is_twice_odd_prime = fs.size() == 2 && fs[0].prime == 2 && fs[0].exponent == 1 &&
                         fs[1].exponent == 1;
  return c;
}

/// Memoized chi over 1..limit, grown on demand. Used by upward scans.
class ChiTable {
 public:
  u64 operator()(u64 n) {
    detail::require_positive(n, "chi");
    if (n >= values_.size()) grow(n);
    return values_[n];
  }

 private:
  void grow(u64 n) {
    const u64 old = values_.size();
    const u64 target = std::max<u64>(n + 1, 2 * old);
    values_.resize(target);
    if (old <= 1) values_[1] = 1;
    for (u64 k = std::max<u64>(old, 2); k < target; ++k) {
      values_[k] = totient(k) + values_[k / factorize(k).factors.front().prime];
    }
  }

  std::vector<u64> values_ = {0, 1};
};

}  // namespace powerindex
