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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "powerindex.hpp"

using namespace powerindex;

namespace {

/// Thrown to report the first failing instance of a criterion.
struct Failure {
  std::string what;
};

void expect(bool ok, const std::string &what) {
  if (!ok) throw Failure{what};
}

std::string str(u64 v) { return std::to_string(v); }

bool exact_numerics() {
  expect(theta_complete(6) == 7, "theta(K6)");
  expect(theta_complete(7) == 7, "theta(K7)");
  expect(theta_complete(14) == 16 && rho(14) == 16, "theta(K14) = rho(14) = 16");
  expect(chi(36) == 27, "chi(36)");
  expect(theta_complete(34) == 37 && rho(34) == 37, "theta(K34) = 37");
  expect(chi(93) == 91, "chi(93)");
  expect(theta_complete(91) == 93 && rho(91) > 93, "theta(K91) = 93 < rho(91)");
  // Cross-check the small complete cases by search as well.
  expect(theta_search(complete_graph(6)).value == 7 && theta_search(complete_graph(7)).value == 7, "search K6/K7");
  const auto k66 = theta_search(complete_bipartite(6, 6));
  expect(k66.value == 13 && k66.exact, "theta(K6,6) = 13 exact, got " + str(k66.value));
  const auto k99 = theta_search(complete_bipartite(9, 9));
  expect(k99.value == 19 && k99.exact, "theta(K9,9) = 19 exact, got " + str(k99.value));
  return true;
}

bool clique_oracle() {
  for (u64 n = 1; n <= 200; ++n)
    expect(clique_number(power_graph(construct_group("Z" + str(n))).graph).size == chi(n), "Z" + str(n));
  for (u64 m = 1; m <= 64; ++m)
    for (const auto &g : catalog_for_order(m).groups) {
      u64 best = 0;
      for (Element x = 0; x < m; ++x) best = std::max(best, chi(g.element_order(x)));
      expect(clique_number(power_graph(g).graph).size == best, g.label());
    }
  return true;
}

bool chi_sweep() {
  for (u64 n = 1; n <= 10000; ++n) {
    const u64 c = chi(n);
    if (n > 1) expect(c == totient(n) + chi(n / factorize(n).factors.front().prime), "recursion at " + str(n));
    expect(c <= n, "upper bound at " + str(n));
    if (n > 1) expect((c == n) == is_prime_power(n), "equality case at " + str(n));
    expect((c + 1 == n) == is_twice_odd_prime(n), "n - 1 case at " + str(n));
  }
  return true;
}

bool theta_next() {
  for (u64 n = 2; n <= 500; ++n) {
    if (is_prime_power(n)) continue;
    const auto c = classify_order(n + 1);
    expect((theta_complete(n) == n + 1) == (c.is_prime_power || c.is_twice_odd_prime), "n = " + str(n));
  }
  return true;
}

bool kst_criterion() {
  for (u64 total = 4; total <= 15; ++total) {
    const Catalog &cat = catalog_for_order(total);
    expect(cat.complete, "catalog incomplete at " + str(total));
    for (u64 s = 2; 2 * s <= total; ++s) {
      const u64 t = total - s;
      bool any = false;
      for (const auto &g : cat.groups) any = any || embeds(complete_bipartite(s, t), g).has_value();
      expect(any == (totient(total) + 1 >= s), "K" + str(s) + "," + str(t));
    }
  }
  return true;
}

bool kst_optimal() {
  for (u64 k : {3, 4}) {
    const u64 n = u64{1} << k;
    const auto two = kst_optimal_groups(2, n - 2).groups;
    expect(two == std::vector<std::string>{"Z" + str(n), "Q" + str(n)}, "K2," + str(n - 2));
    const auto three = kst_optimal_groups(3, n - 3).groups;
    expect(three == std::vector<std::string>{"Z" + str(n)}, "K3," + str(n - 3));
  }
  return true;
}

bool degrees() {
  for (u64 m = 2; m <= 64; ++m)
    for (const auto &g : catalog_for_order(m).groups)
      expect(max_nonidentity_degree(g).holds == (g.is_cyclic() || is_generalized_quaternion(g)), g.label());
  return true;
}

bool matchings() {
  for (u64 m = 2; m <= 64; m += 2)
    expect(maximum_matching(power_graph(construct_group("Z" + str(m))).graph).is_perfect(m), "Z" + str(m));
  for (u64 m = 8; m <= 64; m += 4)
    expect(maximum_matching(power_graph(construct_group("Dic" + str(m / 4))).graph).is_perfect(m), "Dic" + str(m / 4));
  for (u64 n = 2; n <= 50; ++n)
    expect(!maximum_matching(power_graph(construct_group("D" + str(2 * n))).graph).is_perfect(2 * n), "D" + str(2 * n));
  for (u64 m = 1; m <= 63; m += 2)
    for (const auto &g : catalog_for_order(m).groups) {
      const auto pg = power_graph(g).graph;
      const auto mm = near_perfect_matching_odd(g);
      expect(!matching_violation(pg, mm) && mm.is_near_perfect(m), g.label() + " near-perfect");
      expect(verify_embedding(apex_one_factor(m / 2), pg, apex_one_factor_embedding(g).map), g.label() + " K1+nK2");
    }
  return true;
}

bool path_covers() {
  std::size_t with_cover = 0;
  for (u64 m = 2; m <= 64; m += 2)
    for (const auto &g : catalog_for_order(m).groups) {
      const auto r = check_path_cover_equivalence(g);
      expect(r.consistent, g.label() + ": " + r.problem);
      if (!r.perfect_matching) continue;
      ++with_cover;
      const auto pg = power_graph(g).graph;
      expect(r.cover && !path_cover_violation(g, pg, *r.cover), g.label() + " cover");
      expect(r.rebuilt && r.rebuilt->is_perfect(m) && !matching_violation(pg, *r.rebuilt), g.label() + " rebuilt");
      for (const auto &p : r.cover->paths) {
        if (p.front() == g.identity() || p.back() == g.identity()) continue;
        const InversePath inner(p.begin() + 1, p.end() - 1);
        expect(inner.size() >= 2, g.label() + " short interior");
        expect(!compressed_path_violation(g, pg, inner, compress_path(g, pg, inner)), g.label() + " compression");
      }
    }
  expect(with_cover > 0, "no group had a perfect matching");
  return true;
}

bool engines() {
  for (u64 m = 1; m <= 14; ++m)
    for (const auto &g : catalog_for_order(m).groups) {
      const auto pg = power_graph(g).graph;
      expect(maximum_matching(pg).size() == maximum_matching_brute_force(pg).size(), g.label());
    }
  std::mt19937_64 rng(20261018);
  for (int i = 0; i < 100; ++i) {
    const auto gr = random_graph(1 + rng() % 14, static_cast<std::uint32_t>(rng() % 65536), rng);
    expect(maximum_matching(gr).size() == maximum_matching_brute_force(gr).size(), "random graph " + std::to_string(i));
  }
  return true;
}

bool prime_power_critical() {
  std::mt19937_64 rng(0xc0ffee);
  for (u64 n : {8, 9, 16, 25})
    for (int i = 0; i < 50; ++i) {
      const auto gr = random_graph(n, static_cast<std::uint32_t>(rng() % 65536), rng);
      const auto r = is_power_critical(gr);
      expect(r.critical && r.witness && verify_embedding(gr, construct_group(r.witness->group_ref), *r.witness),
             "order " + str(n) + " graph " + std::to_string(i));
    }
  return true;
}

}  // namespace

int main() {
  const std::pair<const char *, std::function<bool()>> criteria[] = {
      {"exact numerics for complete and complete bipartite patterns", exact_numerics},
      {"clique numbers equal chi (cyclic to 200, catalog to 64)", clique_oracle},
      {"chi recursion, bound and extremal cases to 10000", chi_sweep},
      {"power index of K_n is n + 1 exactly when predicted, n <= 500", theta_next},
      {"K_{s,t} criticality matches phi(s + t) >= s - 1 for s + t <= 15", kst_criterion},
      {"optimal groups of K_{2,2^k-2} and K_{3,2^k-3}, k = 3, 4", kst_optimal},
      {"dominating non-identity vertex iff cyclic or generalized quaternion, orders 2..64", degrees},
      {"perfect and near-perfect matchings across families", matchings},
      {"matching, path cover and rebuilt matching agree on even orders <= 64", path_covers},
      {"blossom and exhaustive matching agree", engines},
      {"random graphs of prime-power order are power-critical", prime_power_critical},
  };
  int failures = 0;
  int index = 0;
  for (const auto &[name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = check();
    } catch (const Failure &f) {
      detail = f.what;
    } catch (const std::exception &e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  criterion " << index << ": " << name;
    if (!ok) line << " -- first failure: " << detail;
    std::cout << line.str() << std::endl;
    std::cerr << "  (" << secs << " s)\n";
    failures += ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
