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

/// Sweeps that check the closed-form results against the search oracles over
/// deterministic instance ranges.

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "powerindex/catalog.hpp"
#include "powerindex/clique.hpp"
#include "powerindex/inverse_paths.hpp"
#include "powerindex/matching.hpp"
#include "powerindex/number_theory.hpp"
#include "powerindex/patterns.hpp"
#include "powerindex/theta.hpp"

namespace powerindex {

struct ClaimRecord {
  std::string id;
  std::string statement;
  std::size_t instances = 0;
  bool pass = true;
  std::optional<std::string> counterexample;
};

struct VerificationReport {
  std::string suite;
  std::vector<ClaimRecord> claims;
  double wall_time_seconds = 0;

  bool pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimRecord &c) { return c.pass; });
  }
};

/// Stable JSON form; wall time is left out so identical runs print identical
/// bytes.
inline nlohmann::json to_json(const VerificationReport &r) {
  auto claims = nlohmann::json::array();
  for (const auto &c : r.claims) {
    claims.push_back({{"id", c.id},
                      {"statement", c.statement},
                      {"instances", c.instances},
                      {"pass", c.pass},
                      {"counterexample", c.counterexample ? nlohmann::json(*c.counterexample) : nlohmann::json()}});
  }
  return {{"suite", r.suite}, {"pass", r.pass()}, {"claims", claims}};
}

inline const std::vector<std::string> &verification_suites() {
  static const std::vector<std::string> names = {"chi", "theta-kn", "kst", "matching", "path-covers", "degrees", "all"};
  return names;
}

inline u64 default_suite_bound(const std::string &suite) {
  if (suite == "chi") return 200;
  if (suite == "theta-kn") return 500;
  if (suite == "kst") return 15;
  return 64;
}

namespace detail {

/// Collects instances for one claim; keeps the first counterexample.
class Claim {
 public:
  Claim(VerificationReport &report, std::string id, std::string statement)
      : report_(report), index_(report.claims.size()) {
    report.claims.push_back({std::move(id), std::move(statement)});
  }

  void check(bool ok, const std::function<std::string()> &describe) {
    auto &c = report_.claims[index_];
    ++c.instances;
    if (!ok && c.pass) {
      c.pass = false;
      c.counterexample = describe();
    }
  }

  /// Like check, but an exception thrown by `body` counts as a failure.
  void check_guarded(const std::function<bool()> &body, const std::function<std::string()> &describe) {
    try {
      check(body(), describe);
    } catch (const std::exception &e) {
      const std::string what = e.what();
      check(false, [&] { return describe() + " (threw: " + what + ")"; });
    }
  }

 private:
  VerificationReport &report_;
  std::size_t index_;
};

inline std::string str(u64 v) { return std::to_string(v); }

inline void progress(std::ostream *log, const std::string &line) {
  if (log) *log << line << '\n' << std::flush;
}

inline void suite_chi(VerificationReport &r, u64 max, std::ostream *log) {
  const u64 arith = std::max<u64>(max, 10000);
  progress(log, "chi: arithmetic sweep to " + str(arith));
  Claim recursion(r, "chi-recursion", "chi(n) = phi(n) + chi(n/p), p the least prime factor, and equals the divisor-chain sum");
  Claim bound(r, "chi-upper-bound", "chi(n) <= n, with equality iff n is a prime power (or n = 1)");
  Claim twice(r, "chi-twice-odd-prime", "chi(n) = n - 1 iff n is twice an odd prime");
  for (u64 n = 1; n <= arith; ++n) {
    const u64 c = chi_chain_sum(n);
    const u64 step = n == 1 ? 1 : totient(n) + chi_chain_sum(n / factorize(n).factors.front().prime);
    recursion.check(c == step && c == chi_recursive(n), [&] { return "n=" + str(n); });
    bound.check(c <= n && ((c == n) == (n == 1 || is_prime_power(n))), [&] { return "n=" + str(n) + " chi=" + str(c); });
    twice.check((c + 1 == n) == is_twice_odd_prime(n), [&] { return "n=" + str(n) + " chi=" + str(c); });
  }

  progress(log, "chi: clique numbers of cyclic power graphs to " + str(max));
  Claim cyclic(r, "clique-cyclic", "the clique number of the power graph of Z_n is chi(n)");
  for (u64 n = 1; n <= std::min<u64>(max, kMaxGroupOrder); ++n) {
    const auto w = clique_number(power_graph(construct_group("Z" + str(n))).graph).size;
    cyclic.check(w == chi(n), [&] { return "Z" + str(n) + " clique=" + str(w) + " chi=" + str(chi(n)); });
  }

  const u64 groups = std::min<u64>(max, 64);
  progress(log, "chi: clique numbers of catalog groups to order " + str(groups));
  Claim general(r, "clique-catalog", "the clique number of a power graph is the largest chi(|x|) over elements x");
  for (u64 m = 1; m <= groups; ++m)
    for (const auto &g : catalog_for_order(m).groups) {
      u64 best = 0;
      for (Element x = 0; x < g.order(); ++x) best = std::max(best, chi(g.element_order(x)));
      const auto w = clique_number(power_graph(g).graph).size;
      general.check(w == best, [&] { return g.label() + " clique=" + str(w) + " expected=" + str(best); });
    }
}

inline void suite_theta_kn(VerificationReport &r, u64 max, std::ostream *log) {
  progress(log, "theta-kn: closed form to " + str(max));
  Claim next(r, "theta-kn-next",
             "for n not a prime power, the power index of K_n is n + 1 iff n + 1 is a prime power or twice an odd prime");
  Claim bounds(r, "theta-kn-bounds", "n <= power index of K_n <= rho(n), with equality at n iff n is a prime power or n = 1");
  ChiTable chi_of;
  for (u64 n = 1; n <= max; ++n) {
    const u64 th = theta_complete(n);
    bounds.check(n <= th && th <= rho(n) && ((th == n) == (n == 1 || is_prime_power(n))),
                 [&] { return "n=" + str(n) + " theta=" + str(th); });
    if (n < 2 || is_prime_power(n)) continue;
    u64 scan = n;
    while (chi_of(scan) < n) ++scan;
    const auto c = classify_order(n + 1);
    next.check((scan == n + 1) == (c.is_prime_power || c.is_twice_odd_prime),
               [&] { return "n=" + str(n) + " theta=" + str(scan); });
  }

  const u64 oracle = std::min<u64>(max, 40);
  progress(log, "theta-kn: embedding oracle to " + str(oracle));
  Claim search(r, "theta-kn-oracle", "the least cyclic group whose power graph contains K_n has order theta_complete(n)");
  for (u64 n = 1; n <= oracle; ++n) {
    const auto kn = complete_graph(n);
    u64 found = 0;
    for (u64 m = n; m <= rho(n) && found == 0; ++m)
      if (find_embedding(kn, power_graph(construct_group("Z" + str(m))).graph)) found = m;
    search.check(found == theta_complete(n), [&] { return "n=" + str(n) + " search=" + str(found); });
  }
}

inline bool is_power_of_two(u64 n) { return n != 0 && (n & (n - 1)) == 0; }

inline void suite_kst(VerificationReport &r, u64 max, std::ostream *log) {
  progress(log, "kst: complete bipartite patterns with s + t <= " + str(max));
  Claim crit(r, "kst-criterion",
             "K_{s,t} (2 <= s <= t) embeds in a group of order s + t iff phi(s + t) >= s - 1");
  Claim construct(r, "kst-cyclic-construction",
                  "identity and generators of Z_{s+t} host side s whenever phi(s + t) >= s - 1");
  Claim optimal(r, "kst-optimal-groups",
                "the order-(s+t) groups containing a critical K_{s,t} are Z_{s+t}, plus Q_{s+t} when s = 2 and s + t = 2^k, k >= 3");
  for (u64 total = 4; total <= max; ++total) {
    const Catalog &cat = catalog_for_order(total);
    for (u64 s = 2; 2 * s <= total; ++s) {
      const u64 t = total - s;
      const bool formula = is_kst_power_critical(s, t);
      const auto pattern = complete_bipartite(s, t);
      std::vector<std::string> hosts;
      for (const auto &g : cat.groups)
        if (embeds(pattern, g)) hosts.push_back(g.label());
      const std::string where = "K" + str(s) + "," + str(t);
      // Without a complete catalog only a found embedding is conclusive.
      crit.check(formula == !hosts.empty() || (!cat.complete && formula == false),
                 [&] { return where + " formula=" + (formula ? "true" : "false") + " hosts=" + str(hosts.size()); });
      if (!formula) continue;
      construct.check_guarded([&] { return verify_embedding(pattern, construct_group("Z" + str(total)), embed_kst_cyclic(s, t)); },
                              [&] { return where; });
      std::vector<std::string> expected{"Z" + str(total)};
      if (s == 2 && total >= 8 && is_power_of_two(total)) expected.push_back("Q" + str(total));
      auto sorted_hosts = hosts;
      std::sort(sorted_hosts.begin(), sorted_hosts.end());
      std::sort(expected.begin(), expected.end());
      const bool covers = std::includes(sorted_hosts.begin(), sorted_hosts.end(), expected.begin(), expected.end());
      optimal.check(sorted_hosts == expected || (!cat.complete && covers),
                    [&] {
                      std::string got;
                      for (const auto &h : hosts) got += (got.empty() ? "" : " ") + h;
                      return where + " hosts={" + got + "}";
                    });
    }
  }
}

inline void suite_matching(VerificationReport &r, u64 max, std::ostream *log) {
  progress(log, "matching: family sweeps to order " + str(max));
  Claim cyclic(r, "matching-cyclic", "the power graph of Z_{2n} has a perfect matching");
  for (u64 m = 2; m <= max; m += 2) {
    const auto pg = power_graph(construct_group("Z" + str(m)));
    const auto mm = maximum_matching(pg.graph);
    cyclic.check(!matching_violation(pg.graph, mm) && mm.is_perfect(m), [&] { return "Z" + str(m); });
  }
  Claim dicyclic(r, "matching-dicyclic", "the power graph of Q_{4n} (dicyclic, order 4n) has a perfect matching");
  for (u64 m = 8; m <= max; m += 4) {
    const auto pg = power_graph(construct_group("Dic" + str(m / 4)));
    const auto mm = maximum_matching(pg.graph);
    dicyclic.check(!matching_violation(pg.graph, mm) && mm.is_perfect(m), [&] { return "Dic" + str(m / 4); });
  }
  const u64 dmax = std::max<u64>(max, 100);
  Claim dihedral(r, "matching-dihedral", "the power graph of D_{2n}, n >= 2, has no perfect matching");
  for (u64 m = 4; m <= dmax; m += 2) {
    const auto pg = power_graph(construct_group("D" + str(m)));
    const auto mm = maximum_matching(pg.graph);
    dihedral.check(!matching_violation(pg.graph, mm) && !mm.is_perfect(m),
                   [&] { return "D" + str(m) + " matching=" + str(mm.size()); });
  }
  Claim odd(r, "matching-odd-order",
            "every odd-order group pairs x with x^-1 into a near-perfect matching and a K_1 + nK_2 embedding");
  for (u64 m = 1; m <= max; m += 2)
    for (const auto &g : catalog_for_order(m).groups) {
      odd.check_guarded(
          [&] {
            const auto pg = power_graph(g);
            const auto mm = near_perfect_matching_odd(g);
            const auto w = apex_one_factor_embedding(g);
            return !matching_violation(pg.graph, mm) && mm.is_near_perfect(m) && w.map[0] == g.identity() &&
                   verify_embedding(apex_one_factor(m / 2), pg.graph, w.map) &&
                   maximum_matching(pg.graph).size() == mm.size();
          },
          [&] { return g.label(); });
    }

  progress(log, "matching: blossom against exhaustive search");
  Claim engines(r, "matching-engines", "blossom and exhaustive matching agree in size (power graphs <= 14 vertices, 100 random graphs)");
  for (u64 m = 1; m <= 14; ++m)
    for (const auto &g : catalog_for_order(m).groups) {
      const auto pg = power_graph(g);
      const auto a = maximum_matching(pg.graph), b = maximum_matching_brute_force(pg.graph);
      engines.check(a.size() == b.size() && !matching_violation(pg.graph, a) && !matching_violation(pg.graph, b),
                    [&] { return g.label() + " blossom=" + str(a.size()) + " exhaustive=" + str(b.size()); });
    }
  std::mt19937_64 rng(0x5eed2026);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng() % 17;
    const auto p = static_cast<std::uint32_t>(rng() % 65536);
    const auto gr = random_graph(n, p, rng);
    const auto a = maximum_matching(gr), b = maximum_matching_brute_force(gr);
    engines.check(a.size() == b.size() && !matching_violation(gr, a) && !matching_violation(gr, b),
                  [&] { return "random graph #" + std::to_string(i) + " n=" + str(n); });
  }
}

inline void suite_path_covers(VerificationReport &r, u64 max, std::ostream *log) {
  progress(log, "path-covers: even-order catalog groups to " + str(max));
  Claim equiv(r, "cover-equivalence",
              "for even order: a 1-factor embedding, a perfect matching and an involution-covering inverse-closed path cover coexist");
  Claim compress(r, "cover-compression",
                 "path compression keeps endpoints, stays inside the path and alternates x, x^-1");
  Claim interior(r, "cover-interior", "paths between two involutions have at least two interior vertices");
  for (u64 m = 2; m <= max; m += 2)
    for (const auto &g : catalog_for_order(m).groups) {
      std::optional<CoverEquivalenceReport> rep;
      equiv.check_guarded(
          [&] {
            rep = check_path_cover_equivalence(g);
            return rep->consistent;
          },
          [&] { return g.label() + (rep ? ": " + rep->problem : std::string()); });
      if (!rep || !rep->cover) continue;
      const auto pg = power_graph(g);
      for (const auto &p : rep->cover->paths) {
        if (p.front() == g.identity() || p.back() == g.identity()) continue;
        const InversePath inner(p.begin() + 1, p.end() - 1);
        interior.check(inner.size() >= 2, [&] { return g.label() + " path from " + str(p.front()) + " to " + str(p.back()); });
        if (inner.empty()) continue;
        compress.check_guarded(
            [&] { return !compressed_path_violation(g, pg.graph, inner, compress_path(g, pg.graph, inner)); },
            [&] { return g.label() + " path from " + str(p.front()) + " to " + str(p.back()); });
      }
    }
}

inline void suite_degrees(VerificationReport &r, u64 max, std::ostream *log) {
  progress(log, "degrees: catalog groups of order 2.." + str(max));
  Claim deg(r, "degree-dominating",
            "some non-identity element is adjacent to all others iff the group is cyclic or generalized quaternion");
  for (u64 m = 2; m <= max; ++m)
    for (const auto &g : catalog_for_order(m).groups) {
      const bool holds = max_nonidentity_degree(g).holds;
      const bool expected = g.is_cyclic() || is_generalized_quaternion(g);
      deg.check(holds == expected, [&] { return g.label(); });
    }
}

}  // namespace detail

/// Runs one named suite (or "all") with the given bound; nullopt uses the
/// suite's default. Progress lines go to `log` when non-null.
inline VerificationReport verify_suite(const std::string &name, std::optional<u64> max = std::nullopt,
                                       std::ostream *log = nullptr) {
  const auto &names = verification_suites();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown suite '" + name + "'");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.suite = name;
  auto run = [&](const std::string &s, void (*body)(VerificationReport &, u64, std::ostream *)) {
    if (name == s || name == "all") body(r, max.value_or(default_suite_bound(s)), log);
  };
  run("chi", detail::suite_chi);
  run("theta-kn", detail::suite_theta_kn);
  run("kst", detail::suite_kst);
  run("matching", detail::suite_matching);
  run("path-covers", detail::suite_path_covers);
  run("degrees", detail::suite_degrees);
  r.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace powerindex
