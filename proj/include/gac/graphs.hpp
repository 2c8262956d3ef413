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

#ifndef GAC_GRAPHS_HPP_
#define GAC_GRAPHS_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gac/building_sets.hpp"
#include "gac/error.hpp"
#include "gac/node_set.hpp"

namespace gac {

/// A loopless simple graph on labeled nodes. Like building sets, graphs
/// carry an explicit node set so that induced subgraphs and quotients can
/// preserve labels.
class SimpleGraph {
 public:
  explicit SimpleGraph(int m) : nodes_(NodeSet::full(m)) {
    if (m < 1) fail(errc::m_too_small, "graphs need at least one node");
  }

  SimpleGraph(int m, std::span<const std::pair<int, int>> edges) : SimpleGraph(m) {
    for (auto [i, j] : edges) add_edge(i, j);
  }

  static SimpleGraph on(NodeSet nodes) {
    if (nodes.empty()) fail(errc::m_too_small, "graphs need at least one node");
    SimpleGraph g;
    g.nodes_ = nodes;
    return g;
  }

  void add_edge(int i, int j) {
    if (i == j) fail(errc::parse_error, "loops are not allowed");
    if (!nodes_.contains(i) || !nodes_.contains(j)) {
      fail(errc::parse_error, "edge endpoint outside the node set");
    }
    adj_[i - 1] = adj_[i - 1].unite(NodeSet::single(j));
    adj_[j - 1] = adj_[j - 1].unite(NodeSet::single(i));
  }

  NodeSet nodes() const { return nodes_; }
  int node_count() const { return nodes_.size(); }
  NodeSet neighbors(int label) const { return adj_[label - 1]; }
  bool has_edge(int i, int j) const { return adj_[i - 1].contains(j); }

  int edge_count() const {
    int total = 0;
    for (int v : nodes_.labels()) total += adj_[v - 1].size();
    return total / 2;
  }

  /// Edges as sorted (i, j) pairs with i < j.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v : nodes_.labels()) {
      for (int w : adj_[v - 1].labels()) {
        if (v < w) out.emplace_back(v, w);
      }
    }
    return out;
  }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.nodes_ != b.nodes_) return false;
    for (int v : a.nodes_.labels()) {
      if (a.adj_[v - 1] != b.adj_[v - 1]) return false;
    }
    return true;
  }

 private:
  SimpleGraph() = default;

  NodeSet nodes_;
  std::array<NodeSet, NodeSet::kMaxGround> adj_{};
};

namespace detail {

/// Connectivity of `within` (a subset of the graph's nodes) by mask BFS.
inline bool connected_within(const SimpleGraph& g, NodeSet within) {
  std::uint32_t target = within.bits();
  if (target == 0) return false;
  std::uint32_t seen = target & (~target + 1);
  std::uint32_t frontier = seen;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t b = frontier; b != 0; b &= b - 1) {
      next |= g.neighbors(std::countr_zero(b) + 1).bits();
    }
    frontier = next & target & ~seen;
    seen |= frontier;
  }
  return seen == target;
}

}  // namespace detail

inline bool is_connected(const SimpleGraph& g) { return detail::connected_within(g, g.nodes()); }

inline bool is_tree(const SimpleGraph& g) {
  return is_connected(g) && g.edge_count() == g.node_count() - 1;
}

/// Hamiltonian-cycle test by dynamic programming over (visited set, last
/// node) states; exact, O(2^m m^2). Loopless graphs on fewer than three
/// nodes have no cycles at all.
inline bool is_hamiltonian(const SimpleGraph& g) {
  int m = g.node_count();
  if (m > 12) fail(errc::too_large_for_hamiltonicity, "hamiltonicity test supports at most 12 nodes");
  if (m < 3) return false;
  std::vector<int> labels = g.nodes().labels();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    std::uint32_t mask = 0;
    for (int b = 0; b < m; ++b) {
      if (b != a && g.has_edge(labels[a], labels[b])) mask |= 1u << b;
    }
    adj[a] = mask;
  }
  // Paths start at node 0; dp[s] = set of possible endpoints over visited set s.
  std::uint32_t full = (1u << m) - 1u;
  std::vector<std::uint32_t> ends(1u << m, 0);
  ends[1] = 1u;
  for (std::uint32_t s = 1; s <= full; s += 2) {
    std::uint32_t reach = ends[s];
    if (reach == 0) continue;
    for (std::uint32_t r = reach; r != 0; r &= r - 1) {
      int v = std::countr_zero(r);
      std::uint32_t ext = adj[v] & ~s;
      for (std::uint32_t e = ext; e != 0; e &= e - 1) {
        int w = std::countr_zero(e);
        ends[s | (1u << w)] |= 1u << w;
      }
    }
  }
  return (ends[full] & adj[0]) != 0;
}

inline SimpleGraph path_graph(int m) {
  SimpleGraph g(m);
  for (int i = 1; i < m; ++i) g.add_edge(i, i + 1);
  return g;
}

inline SimpleGraph cycle_graph(int m) {
  if (m < 3) fail(errc::m_too_small, "cycles need at least 3 nodes");
  SimpleGraph g = path_graph(m);
  g.add_edge(m, 1);
  return g;
}

inline SimpleGraph complete_graph(int m) {
  SimpleGraph g(m);
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) g.add_edge(i, j);
  }
  return g;
}

/// K_{1,m-1} with the center at node 1.
inline SimpleGraph star_graph(int m) {
  SimpleGraph g(m);
  for (int i = 2; i <= m; ++i) g.add_edge(1, i);
  return g;
}

inline SimpleGraph induced_subgraph(const SimpleGraph& g, NodeSet s) {
  if (!s.is_subset_of(g.nodes()) || s.empty()) {
    fail(errc::element_out_of_ground, "induced subgraph needs a nonempty subset of the nodes");
  }
  SimpleGraph out = SimpleGraph::on(s);
  for (int v : s.labels()) {
    for (int w : g.neighbors(v).intersect(s).labels()) {
      if (v < w) out.add_edge(v, w);
    }
  }
  return out;
}

/// Contracts the connected node set S to the single node min(S): every edge
/// is mapped through the contraction, loops are dropped and parallel images
/// are merged.
inline SimpleGraph quotient(const SimpleGraph& g, NodeSet s) {
  if (!s.is_subset_of(g.nodes()) || !detail::connected_within(g, s)) {
    fail(errc::s_not_connected, s.to_string() + " does not induce a connected subgraph");
  }
  int c = s.min_label();
  NodeSet nodes = g.nodes().minus(s).unite(NodeSet::single(c));
  SimpleGraph out = SimpleGraph::on(nodes);
  for (auto [i, j] : g.edges()) {
    int a = s.contains(i) ? c : i;
    int b = s.contains(j) ? c : j;
    if (a != b && !out.has_edge(a, b)) out.add_edge(a, b);
  }
  return out;
}

/// All node sets inducing connected subgraphs: the graphical building set.
/// Filters every nonempty subset of the nodes with a mask BFS.
inline BuildingSet graphical_building_set(const SimpleGraph& g) {
  int m = g.nodes().size();
  if (m > NodeSet::kMaxGround) fail(errc::ground_too_large, "graph too large for subset enumeration");
  std::vector<int> labels = g.nodes().labels();
  std::vector<NodeSet> out;
  for (std::uint32_t local = 1; local < (1u << m); ++local) {
    NodeSet s;
    for (std::uint32_t b = local; b != 0; b &= b - 1) s = s.unite(NodeSet::single(labels[std::countr_zero(b)]));
    if (detail::connected_within(g, s)) out.push_back(s);
  }
  return BuildingSet::unchecked(g.nodes(), std::move(out));
}

// ---------------------------------------------------------------------------
// Exhaustive enumerators. All of them are deterministic restartable streams:
// graphs are produced in ascending edge-mask order (edge bits in
// lexicographic (i, j) order), trees in lexicographic Pruefer-sequence
// order. Random access by index is provided so verification can be sharded.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::pair<int, int>> edge_slots(int m) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) slots.emplace_back(i, j);
  }
  return slots;
}

}  // namespace detail

inline SimpleGraph graph_from_edge_mask(int m, std::uint32_t mask) {
  SimpleGraph g(m);
  auto slots = detail::edge_slots(m);
  for (std::uint32_t b = mask; b != 0; b &= b - 1) {
    auto [i, j] = slots[static_cast<std::size_t>(std::countr_zero(b))];
    g.add_edge(i, j);
  }
  return g;
}

/// Edge masks of all labeled connected graphs on [m], ascending.
inline std::vector<std::uint32_t> connected_graph_masks(int m) {
  if (m > 7) fail(errc::m_too_large, "connected-graph enumeration supports at most 7 nodes");
  if (m < 1) fail(errc::m_too_small, "need at least one node");
  int slots = m * (m - 1) / 2;
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
    if (is_connected(graph_from_edge_mask(m, mask))) out.push_back(mask);
  }
  return out;
}

inline std::vector<std::uint32_t> hamiltonian_graph_masks(int m) {
  if (m > 7) fail(errc::m_too_large, "hamiltonian-graph enumeration supports at most 7 nodes");
  if (m < 1) fail(errc::m_too_small, "need at least one node");
  int slots = m * (m - 1) / 2;
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
    if (is_hamiltonian(graph_from_edge_mask(m, mask))) out.push_back(mask);
  }
  return out;
}

inline std::uint64_t tree_count(int m) {
  // Cayley: m^(m-2) labeled trees.
  std::uint64_t n = 1;
  for (int i = 0; i < m - 2; ++i) n *= static_cast<std::uint64_t>(m);
  return n;
}

/// Decodes the index-th Pruefer sequence (base-m digits, most significant
/// first) into a labeled tree.
inline SimpleGraph tree_from_index(int m, std::uint64_t index) {
  if (m < 1 || m > 10) fail(errc::m_too_large, "tree enumeration supports 1..10 nodes");
  SimpleGraph g(m);
  if (m == 1) return g;
  std::vector<int> seq(static_cast<std::size_t>(m - 2));
  for (int k = m - 3; k >= 0; --k) {
    seq[static_cast<std::size_t>(k)] = static_cast<int>(index % static_cast<std::uint64_t>(m)) + 1;
    index /= static_cast<std::uint64_t>(m);
  }
  std::vector<int> degree(static_cast<std::size_t>(m + 1), 1);
  for (int v : seq) ++degree[static_cast<std::size_t>(v)];
  for (int v : seq) {
    for (int leaf = 1; leaf <= m; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        g.add_edge(leaf, v);
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(v)];
        break;
      }
    }
  }
  int u = 0, w = 0;
  for (int v = 1; v <= m; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) (u == 0 ? u : w) = v;
  }
  g.add_edge(u, w);
  return g;
}

template <class F>
void for_each_connected_graph(int m, F&& f) {
  for (std::uint32_t mask : connected_graph_masks(m)) f(graph_from_edge_mask(m, mask));
}

template <class F>
void for_each_tree(int m, F&& f) {
  std::uint64_t n = tree_count(m);
  for (std::uint64_t i = 0; i < n; ++i) f(tree_from_index(m, i));
}

template <class F>
void for_each_hamiltonian_graph(int m, F&& f) {
  for (std::uint32_t mask : hamiltonian_graph_masks(m)) f(graph_from_edge_mask(m, mask));
}

inline std::vector<SimpleGraph> enumerate_connected_graphs(int m) {
  std::vector<SimpleGraph> out;
  for_each_connected_graph(m, [&](const SimpleGraph& g) { out.push_back(g); });
  return out;
}

inline std::vector<SimpleGraph> enumerate_trees(int m) {
  std::vector<SimpleGraph> out;
  for_each_tree(m, [&](const SimpleGraph& g) { out.push_back(g); });
  return out;
}

inline std::vector<SimpleGraph> enumerate_hamiltonian_graphs(int m) {
  std::vector<SimpleGraph> out;
  for_each_hamiltonian_graph(m, [&](const SimpleGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace gac

#endif  // GAC_GRAPHS_HPP_
