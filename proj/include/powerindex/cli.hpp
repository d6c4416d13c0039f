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

/// The `powerindex` command-line front end. Exit codes: 0 success or a true
/// answer, 1 a false or negative answer, 2 bad usage or bad input, 3 an
/// internal consistency failure.

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "powerindex/graph_io.hpp"
#include "powerindex/group_spec.hpp"
#include "powerindex/inverse_paths.hpp"
#include "powerindex/matching.hpp"
#include "powerindex/serialize.hpp"
#include "powerindex/theta.hpp"
#include "powerindex/verify.hpp"

namespace powerindex {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

namespace detail {

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string join_map(const std::vector<Element> &map) {
  std::string s;
  for (std::size_t v = 0; v < map.size(); ++v) s += (v ? " " : "") + std::to_string(v) + ":" + std::to_string(map[v]);
  return s;
}

inline std::string join_edges(const Matching &m) {
  std::string s;
  for (auto [u, v] : m.edges()) s += (s.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
  return s;
}

inline std::string join_path(const InversePath &p) {
  std::string s;
  for (Element x : p) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

struct CliState {
  bool json = false;
  u64 n = 0, s = 0, t = 0;
  std::string file, spec, suite;
  std::string format = "edgelist";
  std::optional<u64> max_order, max;
};

}  // namespace detail

/// argv[0] is the program name, as for main().
inline int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  using nlohmann::json;
  detail::CliState st;
  CLI::App app{"Power indices of graphs over finite groups", "powerindex"};
  app.require_subcommand(1);
  app.add_flag("--json", st.json, "Emit JSON instead of text");

  auto sub = [&](const char *name, const char *about) {
    auto *c = app.add_subcommand(name, about);
    c->fallthrough();
    return c;
  };
  auto *chi_cmd = sub("chi", "Clique number of the power graph of Z_N");
  chi_cmd->add_option("N", st.n)->required();
  auto *rho_cmd = sub("rho", "Smallest prime power >= N");
  rho_cmd->add_option("N", st.n)->required();
  auto *thc_cmd = sub("theta-complete", "Power index of K_N");
  thc_cmd->add_option("N", st.n)->required();
  auto *theta_cmd = sub("theta", "Power index of a graph by catalog search");
  theta_cmd->add_option("GRAPHFILE", st.file)->required();
  theta_cmd->add_option("--max-order", st.max_order, "Largest group order to try (default rho(|V|))");
  auto *crit_cmd = sub("critical", "Whether a graph embeds in a group of order |V|");
  crit_cmd->add_option("GRAPHFILE", st.file)->required();
  auto *kst_cmd = sub("critical-kst", "Whether K_{S,T} is power-critical (2 <= S <= T)");
  kst_cmd->add_option("S", st.s)->required();
  kst_cmd->add_option("T", st.t)->required();
  auto *pg_cmd = sub("power-graph", "Print the power graph of a group");
  pg_cmd->add_option("SPEC", st.spec)->required();
  pg_cmd->add_option("--format", st.format, "edgelist, dot or json")->check(CLI::IsMember({"edgelist", "dot", "json"}));
  auto *embed_cmd = sub("embed", "Embed a graph into the power graph of a group");
  embed_cmd->add_option("GRAPHFILE", st.file)->required();
  embed_cmd->add_option("SPEC", st.spec)->required();
  auto *match_cmd = sub("matching", "Maximum matching of a power graph");
  match_cmd->add_option("SPEC", st.spec)->required();
  auto *cover_cmd = sub("path-cover", "Involution-covering inverse-closed paths from a perfect matching");
  cover_cmd->add_option("SPEC", st.spec)->required();
  auto *agree_cmd = sub("check-path-cover", "Check 1-factor embedding, perfect matching and path cover agree");
  agree_cmd->add_option("SPEC", st.spec)->required();
  auto *kopt_cmd = sub("kst-optimal", "Groups of order S+T whose power graph contains K_{S,T}");
  kopt_cmd->add_option("S", st.s)->required();
  kopt_cmd->add_option("T", st.t)->required();
  auto *verify_cmd = sub("verify", "Run a verification suite");
  verify_cmd->add_option("SUITE", st.suite)->required()->check(CLI::IsMember(verification_suites()));
  verify_cmd->add_option("--max", st.max, "Suite bound");
  auto *scan_cmd = sub("scan-theta-rho", "Tabulate power index of K_n against rho(n) for n <= NMAX");
  scan_cmd->add_option("NMAX", st.n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  auto emit = [&](const json &j, const std::string &text) {
    if (st.json)
      out << j.dump() << '\n';
    else
      out << text;
  };

  try {
    if (chi_cmd->parsed()) {
      const u64 v = chi(st.n);
      emit({{"n", st.n}, {"chi", v}}, std::to_string(v) + "\n");
      return kExitTrue;
    }
    if (rho_cmd->parsed()) {
      const u64 v = rho(st.n);
      emit({{"n", st.n}, {"rho", v}}, std::to_string(v) + "\n");
      return kExitTrue;
    }
    if (thc_cmd->parsed()) {
      const u64 v = theta_complete(st.n);
      emit({{"n", st.n}, {"theta", v}, {"rho", rho(st.n)}}, std::to_string(v) + "\n");
      return kExitTrue;
    }
    if (theta_cmd->parsed()) {
      const auto g = read_graph_file(st.file);
      const auto r = theta_search(g, st.max_order);
      json j{{"vertices", g.vertex_count()},
             {"found", r.value != 0},
             {"theta", r.value},
             {"exact", r.exact},
             {"searched_orders", r.searched_orders},
             {"witness", r.witness ? to_json(*r.witness) : json()}};
      std::ostringstream text;
      if (r.value == 0) {
        text << "none up to order " << r.searched_orders.back() << "\n";
      } else {
        text << r.value << (r.exact ? "" : " (upper bound; catalog incomplete below)") << "\n";
        text << "group " << r.witness->group_ref << "\n";
        text << "map " << detail::join_map(r.witness->map) << "\n";
      }
      emit(j, text.str());
      return r.value != 0 ? kExitTrue : kExitFalse;
    }
    if (crit_cmd->parsed()) {
      const auto g = read_graph_file(st.file);
      const auto r = is_power_critical(g);
      json j{{"vertices", g.vertex_count()},
             {"critical", r.critical},
             {"exact", r.exact},
             {"witness", r.witness && r.critical ? to_json(*r.witness) : json()}};
      emit(j, detail::yes_no(r.critical) + (r.exact ? "" : " (catalog-relative)") + "\n");
      return r.critical ? kExitTrue : kExitFalse;
    }
    if (kst_cmd->parsed()) {
      const bool v = is_kst_power_critical(st.s, st.t);
      emit({{"s", st.s}, {"t", st.t}, {"critical", v}, {"phi", totient(st.s + st.t)}}, detail::yes_no(v) + "\n");
      return v ? kExitTrue : kExitFalse;
    }
    if (pg_cmd->parsed()) {
      const Group grp = construct_group(st.spec);
      const auto pg = power_graph(grp);
      const auto format = st.json ? GraphFormat::json : parse_graph_format(st.format);
      out << serialize_graph(pg.graph, format, format == GraphFormat::dot ? element_order_labels(grp) : std::vector<std::string>{});
      return kExitTrue;
    }
    if (embed_cmd->parsed()) {
      const auto pattern = read_graph_file(st.file);
      const Group grp = construct_group(st.spec);
      const auto w = embeds(pattern, grp, st.file);
      emit({{"embeds", w.has_value()}, {"witness", w ? to_json(*w) : json()}},
           w ? "map " + detail::join_map(w->map) + "\n" : std::string("none\n"));
      return w ? kExitTrue : kExitFalse;
    }
    if (match_cmd->parsed()) {
      const Group grp = construct_group(st.spec);
      const auto m = maximum_matching(power_graph(grp).graph);
      const bool perfect = m.is_perfect(grp.order()), near = m.is_near_perfect(grp.order());
      json j{{"group", grp.label()}, {"order", grp.order()}, {"size", m.size()},
             {"perfect", perfect}, {"near_perfect", near}, {"edges", to_json(m)}};
      emit(j, "size " + std::to_string(m.size()) + "\nperfect " + detail::yes_no(perfect) + "\nnear-perfect " +
                  detail::yes_no(near) + "\nedges " + detail::join_edges(m) + "\n");
      return perfect || near ? kExitTrue : kExitFalse;
    }
    if (cover_cmd->parsed()) {
      const Group grp = construct_group(st.spec);
      if (grp.order() % 2 != 0) throw std::invalid_argument("path-cover needs a group of even order");
      const auto m = maximum_matching(power_graph(grp).graph);
      if (!m.is_perfect(grp.order())) {
        emit({{"group", grp.label()}, {"perfect_matching", false}, {"paths", json()}}, "no perfect matching\n");
        return kExitFalse;
      }
      const auto cover = path_cover_from_matching(grp, m);
      std::string text;
      for (const auto &p : cover.paths) text += detail::join_path(p) + "\n";
      emit({{"group", grp.label()}, {"perfect_matching", true}, {"paths", to_json(cover)}}, text);
      return kExitTrue;
    }
    if (agree_cmd->parsed()) {
      const auto r = check_path_cover_equivalence(construct_group(st.spec));
      json j{{"group", r.group},
             {"order", r.order},
             {"involutions", r.involution_count},
             {"optimal", r.optimal},
             {"perfect_matching", r.perfect_matching},
             {"path_cover", r.cover_found},
             {"consistent", r.consistent},
             {"min_interior", r.min_interior},
             {"matching", r.matching ? to_json(*r.matching) : json()},
             {"cover", r.cover ? to_json(*r.cover) : json()},
             {"rebuilt", r.rebuilt ? to_json(*r.rebuilt) : json()},
             {"problem", r.problem.empty() ? json() : json(r.problem)}};
      std::ostringstream text;
      text << "optimal " << detail::yes_no(r.optimal) << "\nperfect-matching " << detail::yes_no(r.perfect_matching)
           << "\npath-cover " << detail::yes_no(r.cover_found) << "\nconsistent " << detail::yes_no(r.consistent) << "\n";
      if (!r.problem.empty()) text << "problem " << r.problem << "\n";
      emit(j, text.str());
      if (!r.consistent) return kExitInternal;
      return r.optimal ? kExitTrue : kExitFalse;
    }
    if (kopt_cmd->parsed()) {
      const auto r = kst_optimal_groups(st.s, st.t);
      std::string text;
      for (const auto &g : r.groups) text += g + "\n";
      if (!r.complete) {
        text += "(catalog incomplete at order " + std::to_string(st.s + st.t) + "; list is catalog-relative)\n";
        err << "warning: catalog incomplete at order " << st.s + st.t << "\n";
      }
      emit({{"s", st.s}, {"t", st.t}, {"groups", r.groups}, {"complete", r.complete}}, text);
      return kExitTrue;
    }
    if (verify_cmd->parsed()) {
      const auto r = verify_suite(st.suite, st.max, &err);
      err << "wall time " << std::fixed << std::setprecision(2) << r.wall_time_seconds << " s\n";
      std::ostringstream text;
      for (const auto &c : r.claims) {
        text << (c.pass ? "PASS " : "FAIL ") << c.id << " (" << c.instances << " instances)";
        if (c.counterexample) text << ": " << *c.counterexample;
        text << "\n";
      }
      text << (r.pass() ? "all claims pass" : "some claims fail") << "\n";
      emit(to_json(r), text.str());
      return r.pass() ? kExitTrue : kExitFalse;
    }
    if (scan_cmd->parsed()) {
      json rows = json::array();
      std::ostringstream text;
      text << "n theta rho equal\n";
      for (u64 n = 1; n <= st.n; ++n) {
        const u64 th = theta_complete(n), r = rho(n);
        rows.push_back({{"n", n}, {"theta", th}, {"rho", r}, {"equal", th == r}});
        text << n << ' ' << th << ' ' << r << ' ' << (th == r ? "yes" : "no") << "\n";
      }
      emit(rows, text.str());
      return kExitTrue;
    }
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GroupAxiomError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

inline int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  std::vector<const char *> argv{"powerindex"};
  for (const auto &a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace powerindex
