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

/// Inverse-closed paths in power graphs and the correspondence between perfect
/// matchings of a power graph and covers of U-bar (involutions plus identity)
/// by endpoints of vertex-disjoint inverse-closed paths.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "powerindex/graph.hpp"
#include "powerindex/group.hpp"
#include "powerindex/matching.hpp"
#include "powerindex/power_graph.hpp"

namespace powerindex {

/// Ordered vertex list of a path in a power graph.
using InversePath = std::vector<Element>;

struct PathCover {
  std::vector<InversePath> paths;

  /// Union of path endpoints, ascending.
  std::vector<Element> endpoint_union() const {
    std::vector<Element> out;
    for (const auto &p : paths) {
      if (p.empty()) continue;
      out.push_back(p.front());
      if (p.size() > 1) out.push_back(p.back());
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Empty when `p` is a simple path of `pg`; else the first problem.
inline std::optional<std::string> path_violation(const SimpleGraph &pg, const InversePath &p) {
  if (p.empty()) return "path is empty";
  std::set<Element> seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= pg.vertex_count()) return "vertex " + std::to_string(p[i]) + " out of range";
    if (!seen.insert(p[i]).second) return "vertex " + std::to_string(p[i]) + " repeats";
    if (i > 0 && !pg.adjacent(p[i - 1], p[i]))
      return "consecutive vertices " + std::to_string(p[i - 1]) + " and " + std::to_string(p[i]) + " are not adjacent";
  }
  return std::nullopt;
}

inline bool is_inverse_closed(const Group &g, const InversePath &p) {
  const std::set<Element> vs(p.begin(), p.end());
  for (Element x : p)
    if (!vs.contains(g.inverse(x))) return false;
  return true;
}

/// Shortens an inverse-closed path whose vertices all have order >= 3 to the
/// shape (x1, x1^-1, x2, x2^-1, ..., xm, xm^-1) on a subset of its vertices,
/// keeping both endpoints.
///
/// Scan: x1 = u1. While the current x is neither u_r nor u_r^-1, jump to the
/// position just past whichever of x, x^-1 occurs later on the path and take
/// the vertex there as the next x. If the scan stops on u_r itself, replace it
/// by u_r^-1 so the output ends at u_r. The jump keeps x_j^-1 adjacent to
/// x_(j+1) because x and x^-1 have the same neighbours in a power graph.
inline InversePath compress_path(const Group &g, const SimpleGraph &pg, const InversePath &p) {
  if (auto v = path_violation(pg, p)) throw std::invalid_argument("compress_path: " + *v);
  for (Element x : p)
    if (g.element_order(x) < 3)
      throw std::invalid_argument("compress_path: vertex " + std::to_string(x) + " has order " +
                                  std::to_string(g.element_order(x)) + " < 3");
  if (!is_inverse_closed(g, p)) throw std::invalid_argument("compress_path: path is not inverse-closed");

  const std::size_t r = p.size();
  std::vector<std::size_t> position(g.order(), 0);
  for (std::size_t k = 0; k < r; ++k) position[p[k]] = k;

  const Element last = p[r - 1], last_inv = g.inverse(last);
  std::vector<Element> xs{p[0]};
  std::size_t i = 0;
  while (xs.back() != last && xs.back() != last_inv) {
    const std::size_t li = position[g.inverse(p[i])];
    i = std::max(i, li) + 1;
    if (i >= r) throw std::logic_error("compress_path: scan ran past the end of the path");
    xs.push_back(p[i]);
  }
  if (xs.back() == last) xs.back() = last_inv;

  InversePath out;
  out.reserve(2 * xs.size());
  for (Element x : xs) {
    out.push_back(x);
    out.push_back(g.inverse(x));
  }
  return out;
}

inline InversePath compress_path(const Group &g, const InversePath &p) {
  return compress_path(g, power_graph(g).graph, p);
}

/// Checks everything compress_path promises about `out` relative to `in`.
inline std::optional<std::string> compressed_path_violation(const Group &g, const SimpleGraph &pg,
                                                            const InversePath &in, const InversePath &out) {
  if (auto v = path_violation(pg, out)) return "output is not a path: " + *v;
  if (out.size() % 2 != 0) return "output has odd length";
  for (std::size_t j = 0; j + 1 < out.size(); j += 2)
    if (out[j + 1] != g.inverse(out[j])) return "output does not alternate x, x^-1";
  if (!is_inverse_closed(g, out)) return "output is not inverse-closed";
  const std::set<Element> vin(in.begin(), in.end());
  for (Element x : out)
    if (!vin.contains(x)) return "output vertex " + std::to_string(x) + " is not on the input path";
  const std::set<Element> ends_in{in.front(), in.back()}, ends_out{out.front(), out.back()};
  if (ends_in != ends_out) return "endpoints changed";
  return std::nullopt;
}

/// Empty when `c` is a family of vertex-disjoint inverse-closed paths, each
/// with at least two vertices, whose endpoints are exactly U-bar and whose
/// count is (|involutions| + 1) / 2.
inline std::optional<std::string> path_cover_violation(const Group &g, const SimpleGraph &pg, const PathCover &c) {
  const auto ubar = involutions_and_identity(g);
  if (g.order() % 2 != 0) return "group order is odd";
  if (c.paths.size() != ubar.size() / 2)
    return "expected " + std::to_string(ubar.size() / 2) + " paths, got " + std::to_string(c.paths.size());
  std::set<Element> used;
  for (std::size_t i = 0; i < c.paths.size(); ++i) {
    const auto &p = c.paths[i];
    const std::string which = "path " + std::to_string(i) + ": ";
    if (p.size() < 2) return which + "fewer than two vertices";
    if (auto v = path_violation(pg, p)) return which + *v;
    if (!is_inverse_closed(g, p)) return which + "not inverse-closed";
    for (Element x : p)
      if (!used.insert(x).second) return which + "shares vertex " + std::to_string(x) + " with another path";
  }
  if (c.endpoint_union() != ubar) return "endpoint union is not the set of involutions and the identity";
  return std::nullopt;
}

/// Walks a perfect matching into a U-bar path cover. Start from the smallest
/// unused element u of U-bar, follow its matched edge to x, and while x is
/// not in U-bar hop to x^-1 and follow its matched edge; the walk ends on
/// another element of U-bar.
inline PathCover path_cover_from_matching(const Group &g, const Matching &m) {
  const std::size_t n = g.order();
  if (n % 2 != 0) throw std::invalid_argument("path_cover_from_matching: group " + g.label() + " has odd order");
  if (!m.is_perfect(n)) throw std::invalid_argument("path_cover_from_matching: matching is not perfect");
  const auto pg = power_graph(g);
  if (auto v = matching_violation(pg.graph, m))
    throw std::invalid_argument("path_cover_from_matching: " + *v);

  const auto mate = m.mates(n);
  const auto ubar = involutions_and_identity(g);
  std::set<Element> available(ubar.begin(), ubar.end());
  std::vector<char> on_path(n, 0);
  PathCover cover;
  const std::size_t k = ubar.size() / 2;
  for (std::size_t i = 0; i < k; ++i) {
    const Element u = *available.begin();
    auto x = static_cast<Element>(mate[u]);
    InversePath path{u, x};
    on_path[u] = on_path[x] = 1;
    while (!available.contains(x)) {
      const Element xi = g.inverse(x);
      const auto y = static_cast<Element>(mate[xi]);
      if (xi == x || on_path[xi] || on_path[y])
        throw std::logic_error("path_cover_from_matching: walk revisited a vertex at " + std::to_string(xi));
      path.push_back(xi);
      path.push_back(y);
      on_path[xi] = on_path[y] = 1;
      x = y;
    }
    available.erase(u);
    available.erase(x);
    cover.paths.push_back(std::move(path));
  }
  return cover;
}

struct CoverMatching {
  Matching matching;
  /// Smallest number of interior vertices over the paths not containing the
  /// identity (the construction needs at least 2); 0 if there are none.
  std::size_t min_interior = 0;
};

/// Rebuilds a perfect matching from a U-bar path cover: the path through e
/// collapses to the edge {e, z}; every other path (u, x_1..x_t, v) has its
/// interior compressed to (y1, y1^-1, ..., ym, ym^-1) and contributes
/// {u, y1}, {y1^-1, y2}, ..., {ym^-1, v}; leftover elements pair with their
/// inverses.
inline CoverMatching matching_from_path_cover_detailed(const Group &g, const PathCover &c) {
  const auto pg = power_graph(g);
  if (auto v = path_cover_violation(g, pg.graph, c))
    throw std::invalid_argument("matching_from_path_cover: " + *v);

  std::vector<Edge> edges;
  std::vector<char> covered(g.order(), 0);
  auto take = [&](Element a, Element b) {
    edges.emplace_back(a, b);
    covered[a] = covered[b] = 1;
  };
  CoverMatching result;
  bool first_interior = true;
  for (const auto &p : c.paths) {
    if (p.front() == g.identity() || p.back() == g.identity()) {
      take(p.front(), p.back());
      continue;
    }
    const InversePath interior(p.begin() + 1, p.end() - 1);
    if (first_interior || interior.size() < result.min_interior) result.min_interior = interior.size();
    first_interior = false;
    if (interior.size() < 2)
      throw std::logic_error("matching_from_path_cover: path between involutions " + std::to_string(p.front()) +
                             " and " + std::to_string(p.back()) + " has fewer than two interior vertices");
    const InversePath y = compress_path(g, pg.graph, interior);
    take(p.front(), y.front());
    for (std::size_t j = 1; j + 1 < y.size(); j += 2) take(y[j], y[j + 1]);
    take(y.back(), p.back());
  }
  for (Element x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    const Element xi = g.inverse(x);
    if (xi == x || covered[xi])
      throw std::logic_error("matching_from_path_cover: leftover element " + std::to_string(x) +
                             " cannot be paired with its inverse");
    take(x, xi);
  }
  result.matching = Matching(std::move(edges));
  return result;
}

inline Matching matching_from_path_cover(const Group &g, const PathCover &c) {
  return matching_from_path_cover_detailed(g, c).matching;
}

/// Outcome of checking the three equivalent conditions for an even-order
/// group of order 2n: (i) nK_2 embeds, (ii) a perfect matching exists,
/// (iii) a U-bar path cover exists.
struct CoverEquivalenceReport {
  std::string group;
  std::size_t order = 0;
  std::size_t involution_count = 0;
  bool optimal = false;           // (i), certified by an explicit nK_2 embedding
  bool perfect_matching = false;  // (ii), from the exact maximum matching
  bool cover_found = false;       // (iii), via the matching walk
  bool consistent = false;        // (i), (ii), (iii) agree and all certificates check
  std::optional<Matching> matching;
  std::optional<PathCover> cover;
  std::optional<Matching> rebuilt;
  std::size_t min_interior = 0;
  std::string problem;  // first failed check when !consistent
};

inline CoverEquivalenceReport check_path_cover_equivalence(const Group &g) {
  if (g.order() % 2 != 0) throw std::invalid_argument("check_path_cover_equivalence: group " + g.label() + " has odd order");
  CoverEquivalenceReport r;
  r.group = g.label();
  r.order = g.order();
  r.involution_count = g.involutions().size();
  const auto pg = power_graph(g);
  Matching m = maximum_matching(pg.graph);
  if (auto v = matching_violation(pg.graph, m)) {
    r.problem = "maximum matching invalid: " + *v;
    return r;
  }
  r.perfect_matching = m.is_perfect(g.order());
  if (r.perfect_matching) {
    const auto w = one_factor_embedding(m, g.label());
    r.optimal = verify_embedding(one_factor(g.order() / 2), pg.graph, w.map);
    PathCover cover = path_cover_from_matching(g, m);
    if (auto v = path_cover_violation(g, pg.graph, cover)) {
      r.problem = "walk produced an invalid cover: " + *v;
      r.matching = std::move(m);
      return r;
    }
    r.cover_found = true;
    auto rebuilt = matching_from_path_cover_detailed(g, cover);
    r.min_interior = rebuilt.min_interior;
    if (auto v = matching_violation(pg.graph, rebuilt.matching); v || !rebuilt.matching.is_perfect(g.order())) {
      r.problem = "rebuilt matching is not a perfect matching" + (v ? ": " + *v : std::string());
    }
    r.matching = std::move(m);
    r.cover = std::move(cover);
    r.rebuilt = std::move(rebuilt.matching);
  }
  r.consistent = r.problem.empty() && r.optimal == r.perfect_matching && r.cover_found == r.perfect_matching;
  if (!r.consistent && r.problem.empty()) r.problem = "conditions disagree";
  return r;
}

}  // namespace powerindex
