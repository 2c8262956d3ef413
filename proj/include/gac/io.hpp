// Copyright 2026 The gac Authors
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

#ifndef GAC_IO_HPP_
#define GAC_IO_HPP_

#include <cctype>
#include <cstdint>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gac/bounds_harness.hpp"
#include "gac/building_sets.hpp"
#include "gac/error.hpp"
#include "gac/families.hpp"
#include "gac/graphs.hpp"

namespace gac {

namespace detail {

/// Exact integers emitted as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise (CLI-scale inputs always fit).
inline nlohmann::json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

template <class V>
nlohmann::json entries_to_json(const V& vec) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Int& v : vec.entries) arr.push_back(int_to_json(v));
  return arr;
}

}  // namespace detail

/// {"n": m, "edges": [[i, j], ...]} with 1-indexed nodes.
inline nlohmann::json graph_to_json(const SimpleGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  return nlohmann::json{{"n", g.node_count()}, {"edges", edges}};
}

inline SimpleGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    fail(errc::parse_error, "graph JSON needs an integer field \"n\"");
  }
  int m = j["n"].get<int>();
  if (m < 1) fail(errc::m_too_small, "graph needs at least one node");
  if (m > NodeSet::kMaxGround) fail(errc::ground_too_large, "graphs support at most 20 nodes");
  SimpleGraph g(m);
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) fail(errc::parse_error, "\"edges\" must be an array of pairs");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        fail(errc::parse_error, "each edge must be a pair of integers");
      }
      int a = e[0].get<int>(), b = e[1].get<int>();
      if (a < 1 || a > m || b < 1 || b > m || a == b) {
        fail(errc::parse_error, "edge [" + std::to_string(a) + "," + std::to_string(b) + "] is not valid on [" + std::to_string(m) + "]");
      }
      if (!g.has_edge(a, b)) g.add_edge(a, b);
    }
  }
  return g;
}

inline SimpleGraph graph_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse_error, "graph file is not valid JSON");
  return graph_from_json(j);
}

/// Named graph specs: "path:5", "cycle:6", "complete:4", "star:7".
inline SimpleGraph parse_graph_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) fail(errc::parse_error, "graph spec must look like name:count");
  std::string name = spec.substr(0, colon);
  int m = 0;
  try {
    std::size_t used = 0;
    m = std::stoi(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) fail(errc::parse_error, "bad node count in graph spec");
  } catch (const std::logic_error&) {
    fail(errc::parse_error, "bad node count in graph spec '" + spec + "'");
  }
  if (m > NodeSet::kMaxGround) fail(errc::ground_too_large, "graphs support at most 20 nodes");
  if (name == "path") return path_graph(m);
  if (name == "cycle") return cycle_graph(m);
  if (name == "complete") return complete_graph(m);
  if (name == "star") return star_graph(m);
  fail(errc::parse_error, "unknown graph family '" + name + "'");
}

/// Building-set text format: a header line `ground <m>`, then one element
/// per line as comma-separated 1-indexed labels; `#` starts a comment.
inline BuildingSet parse_building_set_text(std::istream& in) {
  std::string line;
  int lineno = 0;
  int m = -1;
  std::vector<NodeSet> elements;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string trimmed;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    }
    if (trimmed.empty()) continue;
    if (m < 0) {
      std::istringstream hs(line);
      std::string word;
      hs >> word;
      if (word != "ground" || !(hs >> m) || m < 1) {
        fail(errc::parse_error, "line " + std::to_string(lineno) + ": expected header 'ground <m>'");
      }
      continue;
    }
    NodeSet s;
    std::size_t pos = 0;
    while (pos < trimmed.size()) {
      auto comma = trimmed.find(',', pos);
      std::string tok = trimmed.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 1 || v > NodeSet::kMaxGround) throw std::invalid_argument(tok);
        s = s.unite(NodeSet::single(v));
      } catch (const std::logic_error&) {
        fail(errc::parse_error, "line " + std::to_string(lineno) + ": bad label '" + tok + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    elements.push_back(s);
  }
  if (m < 0) fail(errc::parse_error, "missing 'ground <m>' header");
  return BuildingSet::validate(std::move(elements), m);
}

inline BuildingSet parse_building_set_text(const std::string& text) {
  std::istringstream in(text);
  return parse_building_set_text(in);
}

inline std::string building_set_to_text(const BuildingSet& b) {
  std::string out = "ground " + std::to_string(b.ground_size()) + "\n";
  for (NodeSet e : b.elements()) {
    bool first = true;
    for (int v : e.labels()) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    out += "\n";
  }
  return out;
}

/// {suite, m, checked, failures: [{graph, gamma, bound_violated}],
///  elapsed_ms, pass}
inline nlohmann::json report_to_json(const BoundReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const BoundFailure& f : r.failures) {
    nlohmann::json item;
    item["graph"] = f.graph ? graph_to_json(*f.graph) : nlohmann::json(f.instance);
    item["gamma"] = detail::entries_to_json(f.gamma);
    item["bound_violated"] = f.bound_violated;
    failures.push_back(item);
  }
  return nlohmann::json{{"suite", r.suite}, {"m", r.m},
                        {"checked", r.checked}, {"failures", failures},
                        {"elapsed_ms", r.elapsed_ms}, {"pass", r.pass()}};
}

inline nlohmann::json identity_report_to_json(const IdentityReport& r) {
  nlohmann::json j{{"id", r.id}, {"order", r.order}, {"verified", r.verified}};
  if (!r.verified) j["first_failing_order"] = r.first_failing_order;
  return j;
}

}  // namespace gac

#endif  // GAC_IO_HPP_
