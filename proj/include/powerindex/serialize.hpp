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

// JSON forms of matchings, path covers and embedding witnesses.

#include <string>

#include <json.hpp>

#include "powerindex/embedding.hpp"
#include "powerindex/inverse_paths.hpp"
#include "powerindex/matching.hpp"

namespace powerindex {

/// [[u, v], ...] with u < v, sorted.
inline nlohmann::json to_json(const Matching &m) {
  auto out = nlohmann::json::array();
  for (auto [u, v] : m.edges()) out.push_back({u, v});
  return out;
}

inline Matching matching_from_json(const nlohmann::json &j) {
  if (!j.is_array()) throw std::invalid_argument("matching JSON must be an array of pairs");
  std::vector<Edge> edges;
  for (const auto &e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw std::invalid_argument("matching JSON entries must be pairs of non-negative integers");
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return Matching(std::move(edges));
}

/// [[v, ...], ...], one list per path in walk order.
inline nlohmann::json to_json(const PathCover &c) {
  auto out = nlohmann::json::array();
  for (const auto &p : c.paths) out.push_back(p);
  return out;
}

inline PathCover path_cover_from_json(const nlohmann::json &j) {
  if (!j.is_array()) throw std::invalid_argument("path cover JSON must be an array of paths");
  PathCover c;
  for (const auto &p : j) {
    if (!p.is_array()) throw std::invalid_argument("each path must be an array of element ids");
    InversePath path;
    for (const auto &x : p) {
      if (!x.is_number_unsigned()) throw std::invalid_argument("element ids must be non-negative integers");
      path.push_back(x.get<Element>());
    }
    c.paths.push_back(std::move(path));
  }
  return c;
}

/// {"pattern": ..., "group": ..., "map": {"0": x0, "1": x1, ...}}.
inline nlohmann::json to_json(const EmbeddingWitness &w) {
  nlohmann::json map = nlohmann::json::object();
  for (std::size_t v = 0; v < w.map.size(); ++v) map[std::to_string(v)] = w.map[v];
  return {{"pattern", w.pattern_ref}, {"group", w.group_ref}, {"map", map}};
}

inline EmbeddingWitness witness_from_json(const nlohmann::json &j) {
  EmbeddingWitness w;
  w.pattern_ref = j.at("pattern").get<std::string>();
  w.group_ref = j.at("group").get<std::string>();
  const auto &map = j.at("map");
  w.map.assign(map.size(), 0);
  for (auto it = map.begin(); it != map.end(); ++it) {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(it.key(), &pos);
    if (pos != it.key().size() || v >= w.map.size())
      throw std::invalid_argument("witness key '" + it.key() + "' is not a pattern vertex");
    w.map[v] = it.value().get<Element>();
  }
  return w;
}

}  // namespace powerindex
