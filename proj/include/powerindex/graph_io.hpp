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

/// Text formats for SimpleGraph.
///
/// edgelist: first line "n m", then m lines "u v" with 0-based vertices.
///   '#' starts a comment that runs to end of line; blank lines are ignored.
///   Self-loops, duplicate edges, out-of-range vertices and a wrong edge count
///   are rejected.
/// json: {"n": int, "edges": [[u, v], ...]}
/// dot: undirected "graph G { ... }", export only.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "powerindex/graph.hpp"

namespace powerindex {

class GraphParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GraphFormat { edgelist, dot, json };

inline GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "dot") return GraphFormat::dot;
  if (name == "json") return GraphFormat::json;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

/// Dense rows cost n^2 bits, so parsed graphs are capped.
inline constexpr std::size_t kMaxGraphVertices = 20000;

namespace detail {

inline std::string strip_comment(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  return line;
}

inline bool blank(const std::string &s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

/// Reads exactly `count` non-negative integers from a line and nothing else.
inline std::optional<std::vector<long long>> read_ints(const std::string &line, std::size_t count) {
  std::istringstream in(line);
  std::vector<long long> out(count);
  for (auto &v : out)
    if (!(in >> v) || v < 0) return std::nullopt;
  std::string rest;
  if (in >> rest) return std::nullopt;
  return out;
}

inline void add_checked_edge(SimpleGraph &g, long long u, long long v, const std::string &where) {
  const auto n = static_cast<long long>(g.vertex_count());
  if (u >= n || v >= n)
    throw GraphParseError(where + ": vertex out of range (n = " + std::to_string(n) + ")");
  if (u == v) throw GraphParseError(where + ": self-loop on vertex " + std::to_string(u));
  if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
    throw GraphParseError(where + ": duplicate edge " + std::to_string(u) + " " + std::to_string(v));
}

}  // namespace detail

inline SimpleGraph parse_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<SimpleGraph> g;
  std::size_t expected = 0, seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::strip_comment(line);
    if (detail::blank(line)) continue;
    const std::string where = "line " + std::to_string(lineno);
    if (!g) {
      auto header = detail::read_ints(line, 2);
      if (!header) throw GraphParseError(where + ": expected header 'n m'");
      if (static_cast<std::size_t>((*header)[0]) > kMaxGraphVertices)
        throw GraphParseError(where + ": more than " + std::to_string(kMaxGraphVertices) + " vertices");
      g.emplace(static_cast<std::size_t>((*header)[0]));
      expected = static_cast<std::size_t>((*header)[1]);
      continue;
    }
    auto e = detail::read_ints(line, 2);
    if (!e) throw GraphParseError(where + ": expected edge 'u v'");
    if (seen == expected) throw GraphParseError(where + ": more edges than the header declares");
    detail::add_checked_edge(*g, (*e)[0], (*e)[1], where);
    ++seen;
  }
  if (!g) throw GraphParseError("empty graph file: missing header 'n m'");
  if (seen != expected)
    throw GraphParseError("header declares " + std::to_string(expected) + " edges, found " + std::to_string(seen));
  return *g;
}

inline SimpleGraph graph_from_json(const nlohmann::json &doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw GraphParseError("graph JSON must be an object with keys \"n\" and \"edges\"");
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0)
    throw GraphParseError("graph JSON \"n\" must be a non-negative integer");
  if (doc["n"].get<std::size_t>() > kMaxGraphVertices)
    throw GraphParseError("graph JSON \"n\" exceeds " + std::to_string(kMaxGraphVertices));
  SimpleGraph g(doc["n"].get<std::size_t>());
  const auto &edges = doc["edges"];
  if (!edges.is_array()) throw GraphParseError("graph JSON \"edges\" must be an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto &e = edges[i];
    const std::string where = "edge " + std::to_string(i);
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        e[0].get<long long>() < 0 || e[1].get<long long>() < 0)
      throw GraphParseError(where + ": expected a pair of non-negative integers");
    detail::add_checked_edge(g, e[0].get<long long>(), e[1].get<long long>(), where);
  }
  return g;
}

/// Parses edgelist or JSON text; JSON is recognised by a leading '{'.
inline SimpleGraph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
      throw GraphParseError(std::string("malformed graph JSON: ") + e.what());
    }
    return graph_from_json(doc);
  }
  return parse_edgelist(text);
}

inline SimpleGraph read_graph_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw GraphParseError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

inline nlohmann::json graph_to_json(const SimpleGraph &g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

/// `labels`, when given, must have one entry per vertex (DOT only).
inline std::string serialize_graph(const SimpleGraph &g, GraphFormat format,
                                   const std::vector<std::string> &labels = {}) {
  std::ostringstream out;
  switch (format) {
    case GraphFormat::edgelist:
      out << g.vertex_count() << ' ' << g.edge_count() << '\n';
      for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
      break;
    case GraphFormat::json:
      out << graph_to_json(g).dump() << '\n';
      break;
    case GraphFormat::dot:
      out << "graph G {\n";
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (v < labels.size()) out << " [label=\"" << labels[v] << "\"]";
        out << ";\n";
      }
      for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
      out << "}\n";
      break;
  }
  return out.str();
}

}  // namespace powerindex
