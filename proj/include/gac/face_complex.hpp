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

#ifndef GAC_FACE_COMPLEX_HPP_
#define GAC_FACE_COMPLEX_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "gac/building_sets.hpp"
#include "gac/error.hpp"
#include "gac/face_polynomials.hpp"
#include "gac/node_set.hpp"

namespace gac {

/// A face of the nestohedron: a collection of facets (elements of
/// B minus the ground set) in which every pair is nested or disjoint and no
/// two-or-more pairwise disjoint members have their disjoint union in B.
struct NestedCollection {
  std::vector<NodeSet> facets;
};

namespace detail {

/// Shared state for nested-collection enumeration over one building set.
/// Everything is compressed to local bit positions 0..m-1 of the ground
/// set, so membership tests are table lookups and compatibility tests are
/// word operations.
class FaceContext {
 public:
  explicit FaceContext(const BuildingSet& b) {
    if (!b.connected()) fail(errc::not_connected, "face enumeration needs a connected building set");
    if (b.ground_size() > 10) {
      fail(errc::ground_too_large, "face enumeration supports ground sets of at most 10 nodes");
    }
    labels_ = b.ground().labels();
    m_ = static_cast<int>(labels_.size());
    int pos[NodeSet::kMaxGround + 1] = {};
    for (int i = 0; i < m_; ++i) pos[labels_[static_cast<std::size_t>(i)]] = i;

    in_b_.assign(std::size_t{1} << m_, 0);
    std::uint32_t ground_local = (m_ == 0) ? 0u : ((1u << m_) - 1u);
    for (NodeSet e : b.elements()) {
      std::uint32_t local = 0;
      for (int v : e.labels()) local |= 1u << pos[v];
      in_b_[local] = 1;
      if (local != ground_local) cand_.push_back(local);
    }
    // Enumeration order: descending cardinality, ties by the stored
    // (cardinality, lexicographic) order.
    std::size_t n = cand_.size();
    std::vector<std::uint32_t> desc(cand_.rbegin(), cand_.rend());
    cand_ = std::move(desc);

    words_ = (n + 63) / 64;
    compat_.assign(n, std::vector<std::uint64_t>(words_, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        std::uint32_t a = cand_[i], c = cand_[j];
        std::uint32_t inter = a & c;
        bool ok = inter == 0 || inter == a || inter == c;
        if (ok) compat_[i][j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  }

  int ground_size() const { return m_; }
  std::size_t candidates() const { return cand_.size(); }
  std::uint32_t cand(std::size_t i) const { return cand_[i]; }
  std::size_t words() const { return words_; }
  const std::vector<std::uint64_t>& compat(std::size_t i) const { return compat_[i]; }
  bool in_b(std::uint32_t mask) const { return in_b_[mask] != 0; }

  std::uint32_t to_local(NodeSet s) const {
    std::uint32_t local = 0;
    for (int v : s.labels()) {
      int p = -1;
      for (int i = 0; i < m_; ++i) {
        if (labels_[static_cast<std::size_t>(i)] == v) p = i;
      }
      if (p < 0) fail(errc::element_out_of_ground, s.to_string() + " is not inside the ground set");
      local |= 1u << p;
    }
    return local;
  }

  NodeSet to_global(std::uint32_t local) const {
    NodeSet s;
    for (std::uint32_t b = local; b != 0; b &= b - 1) {
      s = s.unite(NodeSet::single(labels_[static_cast<std::size_t>(std::countr_zero(b))]));
    }
    return s;
  }

  std::size_t index_of(std::uint32_t local) const {
    for (std::size_t i = 0; i < cand_.size(); ++i) {
      if (cand_[i] == local) return i;
    }
    fail(errc::element_not_facet, "set does not name a facet");
  }

 private:
  int m_ = 0;
  std::vector<int> labels_;
  std::vector<std::uint32_t> cand_;
  std::vector<char> in_b_;
  std::vector<std::vector<std::uint64_t>> compat_;
  std::size_t words_ = 0;
};

/// Does adding `s` to the pairwise-compatible collection `chosen` create a
/// two-or-more pairwise disjoint subcollection whose disjoint union lies in
/// B? Only subfamilies involving the newest element need rechecking.
inline bool disjoint_union_hits(const FaceContext& ctx, const std::vector<std::uint32_t>& chosen, std::uint32_t s) {
  std::uint32_t disj[16];
  int nd = 0;
  for (std::uint32_t c : chosen) {
    if ((c & s) == 0) disj[nd++] = c;
  }
  if (nd == 0) return false;
  // DFS over unions of s with disjoint subfamilies, in index order.
  struct Frame {
    std::uint32_t acc;
    int next;
  };
  Frame stack[17];
  int top = 0;
  stack[top++] = {s, 0};
  while (top > 0) {
    Frame f = stack[--top];
    for (int i = f.next; i < nd; ++i) {
      if ((disj[i] & f.acc) != 0) continue;
      std::uint32_t u = f.acc | disj[i];
      if (ctx.in_b(u)) return true;
      stack[top++] = {u, i + 1};
    }
  }
  return false;
}

/// Recursive census of nested collections. `allowed` holds the candidates
/// compatible with everything chosen so far; indices below `start` are
/// skipped so each collection is produced exactly once.
class FaceEnumerator {
 public:
  explicit FaceEnumerator(const FaceContext& ctx) : ctx_(ctx), allowed_(ctx.words(), ~std::uint64_t{0}) {
    std::size_t n = ctx.candidates();
    if (n % 64 != 0 && !allowed_.empty()) allowed_.back() = (std::uint64_t{1} << (n % 64)) - 1;
    if (n == 0) allowed_.assign(ctx.words(), 0);
  }

  /// Seeds the collection with one forced facet (for facet subcomplexes).
  void force(std::uint32_t local) {
    std::size_t idx = ctx_.index_of(local);
    const auto& row = ctx_.compat(idx);
    for (std::size_t w = 0; w < allowed_.size(); ++w) allowed_[w] &= row[w];
    chosen_.push_back(local);
  }

  /// Visitor signature: f(const std::vector<std::uint32_t>& chosen,
  ///                      bool maximal) -- `maximal` is only computed when
  /// `need_maximal` is set.
  template <class F>
  void run(bool need_maximal, F&& f) {
    dfs(0, need_maximal, f);
  }

  const FaceContext& context() const { return ctx_; }

 private:
  template <class F>
  void dfs(std::size_t start, bool need_maximal, F& f) {
    bool maximal = false;
    if (need_maximal) {
      maximal = true;
      for (std::size_t w = 0; w < allowed_.size() && maximal; ++w) {
        for (std::uint64_t bits = allowed_[w]; bits != 0; bits &= bits - 1) {
          std::size_t idx = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          if (!disjoint_union_hits(ctx_, chosen_, ctx_.cand(idx))) {
            maximal = false;
            break;
          }
        }
      }
    }
    f(const_cast<const std::vector<std::uint32_t>&>(chosen_), maximal);
    for (std::size_t w = start / 64; w < allowed_.size(); ++w) {
      std::uint64_t bits = allowed_[w];
      if (w == start / 64 && start % 64 != 0) bits &= ~std::uint64_t{0} << (start % 64);
      for (; bits != 0; bits &= bits - 1) {
        std::size_t idx = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        std::uint32_t s = ctx_.cand(idx);
        if (disjoint_union_hits(ctx_, chosen_, s)) continue;
        std::vector<std::uint64_t> saved = allowed_;
        const auto& row = ctx_.compat(idx);
        for (std::size_t k = 0; k < allowed_.size(); ++k) allowed_[k] &= row[k];
        chosen_.push_back(s);
        dfs(idx + 1, need_maximal, f);
        chosen_.pop_back();
        allowed_ = std::move(saved);
      }
    }
  }

  const FaceContext& ctx_;
  std::vector<std::uint64_t> allowed_;
  std::vector<std::uint32_t> chosen_;
};

}  // namespace detail

/// Number of nested collections of each cardinality; index 0 counts the
/// empty collection (the polytope itself).
inline std::vector<std::uint64_t> face_census(const BuildingSet& b) {
  detail::FaceContext ctx(b);
  std::vector<std::uint64_t> counts;
  detail::FaceEnumerator en(ctx);
  en.run(false, [&](const std::vector<std::uint32_t>& chosen, bool) {
    if (chosen.size() >= counts.size()) counts.resize(chosen.size() + 1, 0);
    ++counts[chosen.size()];
  });
  return counts;
}

/// Census of the collections containing `s`; index k counts collections of
/// total cardinality k (so index 1 is the facet itself). The facet of P_B
/// named by s is combinatorially P_{B|s} x P_{B/s}, which tests verify
/// through this census.
inline std::vector<std::uint64_t> face_census_containing(const BuildingSet& b, NodeSet s) {
  detail::FaceContext ctx(b);
  detail::FaceEnumerator en(ctx);
  en.force(ctx.to_local(s));
  std::vector<std::uint64_t> counts;
  en.run(false, [&](const std::vector<std::uint32_t>& chosen, bool) {
    if (chosen.size() >= counts.size()) counts.resize(chosen.size() + 1, 0);
    ++counts[chosen.size()];
  });
  return counts;
}

/// f-vector by exhaustive nested-collection enumeration: a collection of
/// cardinality k is a face of dimension n-k, n = ground size - 1.
inline FVector f_vector(const BuildingSet& b) {
  std::vector<std::uint64_t> counts = face_census(b);
  int n = b.ground_size() - 1;
  FVector f;
  f.entries.assign(static_cast<std::size_t>(n) + 1, Int(0));
  for (std::size_t k = 0; k < counts.size(); ++k) {
    f.entries[static_cast<std::size_t>(n) - k] = counts[k];
  }
  return f;
}

/// h- and gamma-vectors straight from face enumeration; the geometric route
/// used to cross-check every recurrence and closed form.
inline HVector h_of(const BuildingSet& b) { return h_from_f(f_vector(b)); }
inline GammaVector gamma_of(const BuildingSet& b) { return gamma_from_h(h_of(b)); }

/// Both facet-intersection conditions on an explicit candidate collection
/// (treated as a set). Throws element_not_facet when a candidate is the
/// whole ground set or not an element of B.
inline bool is_face(const BuildingSet& b, std::span<const NodeSet> facets) {
  std::vector<NodeSet> fs(facets.begin(), facets.end());
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  for (NodeSet s : fs) {
    if (s == b.ground() || !b.contains(s)) {
      fail(errc::element_not_facet, s.to_string() + " does not name a facet");
    }
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      NodeSet inter = fs[i].intersect(fs[j]);
      if (!inter.empty() && inter != fs[i] && inter != fs[j]) return false;
    }
  }
  // Condition (2): no >= 2 pairwise disjoint members with union in B.
  detail::FaceContext ctx(b);
  std::vector<std::uint32_t> local;
  local.reserve(fs.size());
  for (NodeSet s : fs) local.push_back(ctx.to_local(s));
  for (std::size_t i = 0; i < local.size(); ++i) {
    std::vector<std::uint32_t> prefix(local.begin(), local.begin() + static_cast<std::ptrdiff_t>(i));
    if (detail::disjoint_union_hits(ctx, prefix, local[i])) return false;
  }
  return true;
}

/// All maximal nested collections, in enumeration order. For a connected
/// building set these are the vertices, each of cardinality exactly n.
inline std::vector<NestedCollection> vertex_collections(const BuildingSet& b) {
  detail::FaceContext ctx(b);
  std::vector<NestedCollection> out;
  detail::FaceEnumerator en(ctx);
  en.run(true, [&](const std::vector<std::uint32_t>& chosen, bool maximal) {
    if (!maximal) return;
    NestedCollection c;
    c.facets.reserve(chosen.size());
    for (std::uint32_t s : chosen) c.facets.push_back(ctx.to_global(s));
    out.push_back(std::move(c));
  });
  return out;
}

namespace detail {

/// Searches for a pairwise disjoint family of size >= 3 with every pairwise
/// union outside B and total union in B: the witness of a minimal non-face
/// of size >= 3.
struct FlagSearch {
  const FaceContext& ctx;
  std::vector<std::uint32_t> family;

  bool dfs(std::size_t start, std::uint32_t acc) {
    for (std::size_t i = start; i < ctx.candidates(); ++i) {
      std::uint32_t s = ctx.cand(i);
      if ((s & acc) != 0) continue;
      bool pairs_are_faces = true;
      for (std::uint32_t m : family) {
        if (ctx.in_b(m | s)) {
          pairs_are_faces = false;
          break;
        }
      }
      if (!pairs_are_faces) continue;
      if (family.size() + 1 >= 3 && ctx.in_b(acc | s)) return true;
      family.push_back(s);
      if (dfs(i + 1, acc | s)) return true;
      family.pop_back();
    }
    return false;
  }
};

}  // namespace detail

/// Flagness of the nested-set complex. Pairs already satisfy the
/// nested-or-disjoint condition when all pairs are faces, so a minimal
/// non-face of size >= 3 must be a pairwise disjoint family with every
/// pairwise union outside B whose total union lies in B.
inline bool is_flag(const BuildingSet& b) {
  detail::FaceContext ctx(b);
  detail::FlagSearch search{ctx, {}};
  return !search.dfs(0, 0);
}

}  // namespace gac

#endif  // GAC_FACE_COMPLEX_HPP_
