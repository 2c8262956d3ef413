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

#ifndef GAC_NODE_SET_HPP_
#define GAC_NODE_SET_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gac/error.hpp"

namespace gac {

/// A subset of a ground set of 1-indexed node labels, stored as a bitmask.
/// Label i occupies bit i-1. Ground sets never exceed kMaxGround labels, so
/// every set operation is a single word operation.
class NodeSet {
 public:
  static constexpr int kMaxGround = 20;

  constexpr NodeSet() = default;
  explicit constexpr NodeSet(std::uint32_t bits) : bits_(bits) {}

  static NodeSet single(int label) { return NodeSet(bit(label)); }

  /// The full ground set {1, ..., m}.
  static NodeSet full(int m) {
    if (m < 0 || m > kMaxGround) fail(errc::ground_too_large, "ground size " + std::to_string(m) + " exceeds " + std::to_string(kMaxGround));
    return NodeSet(m == 0 ? 0u : (m == 32 ? ~0u : ((1u << m) - 1u)));
  }

  static NodeSet of(std::initializer_list<int> labels) {
    NodeSet s;
    for (int v : labels) s.bits_ |= bit(v);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  bool contains(int label) const { return (bits_ & bit(label)) != 0; }
  constexpr bool intersects(NodeSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool is_subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr NodeSet unite(NodeSet o) const { return NodeSet(bits_ | o.bits_); }
  constexpr NodeSet intersect(NodeSet o) const { return NodeSet(bits_ & o.bits_); }
  constexpr NodeSet minus(NodeSet o) const { return NodeSet(bits_ & ~o.bits_); }

  /// Smallest label, or 0 when empty.
  int min_label() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : labels()) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

  friend constexpr bool operator==(NodeSet a, NodeSet b) = default;

  /// Canonical element order: by cardinality, then lexicographic on the
  /// sorted member lists. For equal cardinality the lexicographically
  /// smaller set is the one owning the smallest label where they differ.
  friend bool operator<(NodeSet a, NodeSet b) {
    int ca = a.size(), cb = b.size();
    if (ca != cb) return ca < cb;
    std::uint32_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    std::uint32_t low = diff & (~diff + 1);
    return (a.bits_ & low) != 0;
  }

 private:
  static constexpr std::uint32_t bit(int label) { return 1u << (label - 1); }

  std::uint32_t bits_ = 0;
};

}  // namespace gac

#endif  // GAC_NODE_SET_HPP_
