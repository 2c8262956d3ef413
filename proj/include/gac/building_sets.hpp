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

#ifndef GAC_BUILDING_SETS_HPP_
#define GAC_BUILDING_SETS_HPP_

#include <algorithm>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "gac/error.hpp"
#include "gac/node_set.hpp"

namespace gac {

/// A building set: a collection of nonempty node sets containing every
/// singleton of its ground set and closed under union of intersecting
/// members. Ground labels are preserved by restriction and contraction, so
/// the ground set is carried explicitly and need not be {1, ..., m}.
/// Elements are kept sorted (cardinality, then lexicographic), which makes
/// every listing and every enumeration order deterministic. Immutable after
/// construction.
class BuildingSet {
 public:
  /// Validates the two defining conditions on ground {1, ..., ground_size}.
  /// Throws Error with code missing_singleton, union_violation,
  /// empty_element, element_out_of_ground or ground_too_large.
  static BuildingSet validate(std::vector<NodeSet> elements, int ground_size) {
    if (ground_size < 1) fail(errc::empty_ground, "ground size must be positive");
    NodeSet ground = NodeSet::full(ground_size);
    for (NodeSet s : elements) {
      if (s.empty()) fail(errc::empty_element, "building sets contain nonempty sets only");
      if (!s.is_subset_of(ground)) fail(errc::element_out_of_ground, s.to_string() + " is not inside " + ground.to_string());
    }
    sort_unique(elements);
    std::unordered_set<std::uint32_t> present;
    present.reserve(elements.size() * 2);
    for (NodeSet s : elements) present.insert(s.bits());
    for (int i = 1; i <= ground_size; ++i) {
      if (!present.count(NodeSet::single(i).bits())) fail(errc::missing_singleton, "singleton {" + std::to_string(i) + "} is missing");
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = i + 1; j < elements.size(); ++j) {
        NodeSet a = elements[i], b = elements[j];
        if (a.intersects(b) && !present.count(a.unite(b).bits())) {
          fail(errc::union_violation, a.to_string() + " and " + b.to_string() + " intersect but their union is absent");
        }
      }
    }
    return BuildingSet(ground, std::move(elements));
  }

  /// Trusted constructor for operations whose output is a building set by
  /// construction (graphical building sets, restriction, contraction, ...).
  /// Sorts and deduplicates; does not re-check the closure conditions.
  static BuildingSet unchecked(NodeSet ground, std::vector<NodeSet> elements) {
    sort_unique(elements);
    return BuildingSet(ground, std::move(elements));
  }

  NodeSet ground() const { return ground_; }
  int ground_size() const { return ground_.size(); }
  bool connected() const { return connected_; }
  std::span<const NodeSet> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  bool contains(NodeSet s) const {
    return std::binary_search(elements_.begin(), elements_.end(), s);
  }

  std::string to_string() const {
    std::string out = "ground " + ground_.to_string() + ": ";
    bool first = true;
    for (NodeSet s : elements_) {
      if (!first) out += " ";
      out += s.to_string();
      first = false;
    }
    return out;
  }

  friend bool operator==(const BuildingSet& a, const BuildingSet& b) {
    return a.ground_ == b.ground_ && a.elements_ == b.elements_;
  }

 private:
  BuildingSet(NodeSet ground, std::vector<NodeSet> sorted_elements)
      : ground_(ground), elements_(std::move(sorted_elements)) {
    connected_ = std::binary_search(elements_.begin(), elements_.end(), ground_);
  }

  static void sort_unique(std::vector<NodeSet>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  NodeSet ground_;
  std::vector<NodeSet> elements_;
  bool connected_ = false;
};

/// { S' in B : S' subset of S }, a connected building set on ground S.
/// Labels are preserved, not renumbered.
inline BuildingSet restriction(const BuildingSet& b, NodeSet s) {
  if (!b.contains(s)) fail(errc::s_not_in_b, s.to_string() + " is not an element of the building set");
  std::vector<NodeSet> out;
  for (NodeSet e : b.elements()) {
    if (e.is_subset_of(s)) out.push_back(e);
  }
  return BuildingSet::unchecked(s, std::move(out));
}

/// { S' \ S : S' in B, S' \ S nonempty }, deduplicated, on ground
/// ground(B) \ S. Contraction along the full ground set is rejected: no
/// consumer is defined on an empty ground.
inline BuildingSet contraction(const BuildingSet& b, NodeSet s) {
  if (!b.contains(s)) fail(errc::s_not_in_b, s.to_string() + " is not an element of the building set");
  if (s == b.ground()) fail(errc::empty_ground, "contraction along the full ground set");
  std::vector<NodeSet> out;
  for (NodeSet e : b.elements()) {
    NodeSet img = e.minus(s);
    if (!img.empty()) out.push_back(img);
  }
  return BuildingSet::unchecked(b.ground().minus(s), std::move(out));
}

/// The substitution construction: the parts (one connected building set per
/// ground node of `outer`, matched in ascending label order) are relabeled
/// into consecutive blocks; the result consists of every relabeled part
/// element together with, for each S in `outer`, the union of the blocks
/// indexed by S. The nestohedron of the result is the product of the
/// nestohedra of `outer` and of all parts.
inline BuildingSet substitution(const BuildingSet& outer, std::span<const BuildingSet> parts) {
  if (!outer.connected()) fail(errc::not_connected, "substitution requires a connected outer building set");
  if (static_cast<int>(parts.size()) != outer.ground_size()) {
    fail(errc::degree_mismatch, "need exactly one part per ground node of the outer building set");
  }
  int total = 0;
  for (const BuildingSet& p : parts) {
    if (!p.connected()) fail(errc::not_connected, "substitution parts must be connected");
    total += p.ground_size();
  }
  NodeSet ground = NodeSet::full(total);

  // Block masks, indexed like the sorted ground labels of `outer`.
  std::vector<NodeSet> block(parts.size());
  std::vector<int> offset(parts.size());
  int at = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    offset[i] = at;
    NodeSet blk;
    for (int v = 1; v <= parts[i].ground_size(); ++v) blk = blk.unite(NodeSet::single(at + v));
    block[i] = blk;
    at += parts[i].ground_size();
  }

  std::vector<NodeSet> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    // Parts keep only their combinatorics; relabel through their sorted labels.
    std::vector<int> labels = parts[i].ground().labels();
    for (NodeSet e : parts[i].elements()) {
      NodeSet shifted;
      for (std::size_t k = 0; k < labels.size(); ++k) {
        if (e.contains(labels[k])) shifted = shifted.unite(NodeSet::single(offset[i] + static_cast<int>(k) + 1));
      }
      out.push_back(shifted);
    }
  }
  std::vector<int> outer_labels = outer.ground().labels();
  for (NodeSet s : outer.elements()) {
    NodeSet u;
    for (std::size_t i = 0; i < outer_labels.size(); ++i) {
      if (s.contains(outer_labels[i])) u = u.unite(block[i]);
    }
    out.push_back(u);
  }
  return BuildingSet::unchecked(ground, std::move(out));
}

/// The decomposition of S by elements of B: the unique partition of S into
/// the minimal number of elements, ordered by minimum label.
struct Decomposition {
  std::vector<NodeSet> parts;
};

/// The parts are the maximal elements of B contained in S. Two of them
/// cannot intersect (their union would be a larger element inside S), and
/// every element of B inside S lies inside exactly one of them, so no
/// disjoint representation can use fewer parts.
inline Decomposition decompose(const BuildingSet& b, NodeSet s) {
  if (!s.is_subset_of(b.ground()) || s.empty()) {
    fail(errc::element_out_of_ground, "decompose needs a nonempty subset of the ground set");
  }
  std::vector<NodeSet> inside;
  for (NodeSet e : b.elements()) {
    if (e.is_subset_of(s)) inside.push_back(e);
  }
  // Descending cardinality; an element is maximal iff no already-taken
  // (necessarily larger or equal) element contains it.
  std::sort(inside.begin(), inside.end(), [](NodeSet a, NodeSet c) { return c < a; });
  std::vector<NodeSet> parts;
  NodeSet covered;
  for (NodeSet e : inside) {
    if (!e.is_subset_of(covered)) {
      parts.push_back(e);
      covered = covered.unite(e);
    }
  }
  std::sort(parts.begin(), parts.end(), [](NodeSet a, NodeSet c) { return a.min_label() < c.min_label(); });
  return Decomposition{std::move(parts)};
}

/// The building set {{1},{2},{1,2}} of the interval.
inline BuildingSet interval_building_set() {
  return BuildingSet::unchecked(NodeSet::full(2), {NodeSet::of({1}), NodeSet::of({2}), NodeSet::of({1, 2})});
}

/// Singletons plus the full ground set: the building set of the simplex.
inline BuildingSet simplex_building_set(int m) {
  std::vector<NodeSet> elems;
  for (int i = 1; i <= m; ++i) elems.push_back(NodeSet::single(i));
  elems.push_back(NodeSet::full(m));
  return BuildingSet::unchecked(NodeSet::full(m), std::move(elems));
}

/// Renumbers a (possibly label-preserving) ground set onto {1, ..., k} in
/// ascending label order; use when byte-stable output is required.
inline BuildingSet canonicalize(const BuildingSet& b) {
  std::vector<int> labels = b.ground().labels();
  std::vector<NodeSet> out;
  out.reserve(b.size());
  for (NodeSet e : b.elements()) {
    NodeSet img;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (e.contains(labels[k])) img = img.unite(NodeSet::single(static_cast<int>(k) + 1));
    }
    out.push_back(img);
  }
  return BuildingSet::unchecked(NodeSet::full(static_cast<int>(labels.size())), std::move(out));
}

}  // namespace gac

#endif  // GAC_BUILDING_SETS_HPP_
