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

#ifndef GAC_BOUNDS_HARNESS_HPP_
#define GAC_BOUNDS_HARNESS_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gac/building_sets.hpp"
#include "gac/face_complex.hpp"
#include "gac/face_polynomials.hpp"
#include "gac/families.hpp"
#include "gac/graphs.hpp"

namespace gac {

struct BoundFailure {
  std::optional<SimpleGraph> graph;
  GammaVector gamma;
  std::string bound_violated;
  std::string instance;  // description for non-graph instances (product cases)
};

/// Outcome of one exhaustive verification run. Reports with empty failure
/// lists are reproducible bit-identically across runs and job counts,
/// elapsed_ms excepted.
struct BoundReport {
  std::string suite;
  int m = 0;
  std::uint64_t checked = 0;
  std::vector<BoundFailure> failures;
  std::int64_t elapsed_ms = 0;
  GammaVector lower, upper;  // bound vectors used, when the suite has them
  bool lower_attained = false;
  bool upper_attained = false;

  bool pass() const { return failures.empty(); }
};

/// Everything except elapsed_ms, which is the only nondeterministic field.
inline bool equivalent(const BoundReport& a, const BoundReport& b) {
  if (a.suite != b.suite || a.m != b.m || a.checked != b.checked || a.failures.size() != b.failures.size() ||
      a.lower != b.lower || a.upper != b.upper || a.lower_attained != b.lower_attained ||
      a.upper_attained != b.upper_attained) {
    return false;
  }
  for (std::size_t i = 0; i < a.failures.size(); ++i) {
    const BoundFailure& x = a.failures[i];
    const BoundFailure& y = b.failures[i];
    if (x.graph.has_value() != y.graph.has_value() || x.gamma != y.gamma ||
        x.bound_violated != y.bound_violated || x.instance != y.instance) {
      return false;
    }
    if (x.graph && !(*x.graph == *y.graph)) return false;
  }
  return true;
}

namespace detail {

/// The bound vectors entering any report must agree across the three
/// independent routes: recurrence, closed form, and face enumeration of the
/// defining graph. A disagreement is an implementation bug, not a data
/// failure.
inline GammaVector family_bound(FamilyName f, int m) {
  int n = m - 1;
  GammaVector rec = gamma_family(f, n);
  GammaVector closed = closed_gamma(f, n);
  SimpleGraph g = [&] {
    switch (f) {
      case FamilyName::as: return path_graph(m);
      case FamilyName::cy: return cycle_graph(m);
      case FamilyName::pe: return complete_graph(m);
      case FamilyName::st: return star_graph(m);
    }
    fail(errc::unknown_family, "unreachable");
  }();
  GammaVector enumd = gamma_of(graphical_building_set(g));
  if (!(rec == closed) || !(rec == enumd)) {
    throw std::logic_error("family bound vectors disagree across routes for " + std::string(family_name(f)));
  }
  return rec;
}

struct Shard {
  std::uint64_t checked = 0;
  std::vector<BoundFailure> failures;
  bool lower_attained = false;
  bool upper_attained = false;
};

/// Contiguous index ranges per worker, merged in worker order: parallel runs
/// produce byte-identical reports.
template <class Work>
inline void run_sharded(std::uint64_t count, int jobs, BoundReport& report, Work work) {
  if (jobs < 1) jobs = 1;
  if (static_cast<std::uint64_t>(jobs) > count) jobs = count == 0 ? 1 : static_cast<int>(count);
  std::vector<Shard> shards(static_cast<std::size_t>(jobs));
  if (jobs == 1) {
    for (std::uint64_t i = 0; i < count; ++i) work(i, shards[0]);
  } else {
    std::vector<std::thread> threads;
    std::uint64_t chunk = count / static_cast<std::uint64_t>(jobs);
    std::uint64_t extra = count % static_cast<std::uint64_t>(jobs);
    std::uint64_t begin = 0;
    for (int w = 0; w < jobs; ++w) {
      std::uint64_t end = begin + chunk + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
      threads.emplace_back([&, w, begin, end] {
        for (std::uint64_t i = begin; i < end; ++i) work(i, shards[static_cast<std::size_t>(w)]);
      });
      begin = end;
    }
    for (std::thread& t : threads) t.join();
  }
  for (Shard& s : shards) {
    report.checked += s.checked;
    for (BoundFailure& f : s.failures) report.failures.push_back(std::move(f));
    report.lower_attained = report.lower_attained || s.lower_attained;
    report.upper_attained = report.upper_attained || s.upper_attained;
  }
}

/// Checks one graph against gamma bounds and the implied g/h/f chains.
struct ChainBounds {
  GammaVector lo_gamma, hi_gamma;
  GVector lo_g, hi_g;
  HVector lo_h, hi_h;
  FVector lo_f, hi_f;

  ChainBounds() = default;
  ChainBounds(const GammaVector& lo, const GammaVector& hi)
      : lo_gamma(lo),
        hi_gamma(hi),
        lo_g(g_from_gamma(lo)),
        hi_g(g_from_gamma(hi)),
        lo_h(h_from_gamma(lo)),
        hi_h(h_from_gamma(hi)),
        lo_f(f_from_h(lo_h)),
        hi_f(f_from_h(hi_h)) {}
};

inline void check_graph_bounds(const SimpleGraph& g, const ChainBounds& b, Shard& shard) {
  FVector f = f_vector(graphical_building_set(g));
  HVector h = h_from_f(f);
  GammaVector gamma = gamma_from_h(h);
  GVector gv = g_from_h(h);
  ++shard.checked;
  std::string bad;
  if (!leq_componentwise(b.lo_gamma, gamma)) bad = "gamma below " + b.lo_gamma.to_string();
  if (bad.empty() && !leq_componentwise(gamma, b.hi_gamma)) bad = "gamma above " + b.hi_gamma.to_string();
  if (bad.empty() && !leq_componentwise(b.lo_g, gv)) bad = "g below bound";
  if (bad.empty() && !leq_componentwise(gv, b.hi_g)) bad = "g above bound";
  if (bad.empty() && !leq_componentwise(b.lo_h, h)) bad = "h below bound";
  if (bad.empty() && !leq_componentwise(h, b.hi_h)) bad = "h above bound";
  if (bad.empty() && !leq_componentwise(b.lo_f, f)) bad = "f below bound";
  if (bad.empty() && !leq_componentwise(f, b.hi_f)) bad = "f above bound";
  if (!bad.empty()) shard.failures.push_back(BoundFailure{g, gamma, bad, ""});
  if (gamma == b.lo_gamma) shard.lower_attained = true;
  if (gamma == b.hi_gamma) shard.upper_attained = true;
}

inline std::int64_t ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

/// gamma(As^{m-1}) <= gamma(P_Gamma) <= gamma(Pe^{m-1}) for every labeled
/// connected graph on [m], plus the implied g/h/f inequalities.
inline BoundReport verify_connected_bounds(int m, int jobs = 1) {
  auto t0 = std::chrono::steady_clock::now();
  BoundReport report;
  report.suite = "connected";
  report.m = m;
  report.lower = detail::family_bound(FamilyName::as, m);
  report.upper = detail::family_bound(FamilyName::pe, m);
  detail::ChainBounds chain(report.lower, report.upper);
  std::vector<std::uint32_t> masks = connected_graph_masks(m);
  detail::run_sharded(masks.size(), jobs, report, [&](std::uint64_t i, detail::Shard& shard) {
    detail::check_graph_bounds(graph_from_edge_mask(m, masks[static_cast<std::size_t>(i)]), chain, shard);
  });
  report.elapsed_ms = detail::ms_since(t0);
  return report;
}

/// gamma(Cy^{m-1}) <= gamma(P_Gamma) <= gamma(Pe^{m-1}) over the labeled
/// graphs on [m] containing a Hamiltonian cycle.
inline BoundReport verify_hamiltonian_bounds(int m, int jobs = 1) {
  if (m < 3) fail(errc::m_too_small, "hamiltonian graphs need at least 3 nodes");
  auto t0 = std::chrono::steady_clock::now();
  BoundReport report;
  report.suite = "hamiltonian";
  report.m = m;
  report.lower = detail::family_bound(FamilyName::cy, m);
  report.upper = detail::family_bound(FamilyName::pe, m);
  detail::ChainBounds chain(report.lower, report.upper);
  std::vector<std::uint32_t> masks = hamiltonian_graph_masks(m);
  detail::run_sharded(masks.size(), jobs, report, [&](std::uint64_t i, detail::Shard& shard) {
    detail::check_graph_bounds(graph_from_edge_mask(m, masks[static_cast<std::size_t>(i)]), chain, shard);
  });
  report.elapsed_ms = detail::ms_since(t0);
  return report;
}

/// gamma(As^{m-1}) <= gamma(P_Gamma) <= gamma(St^{m-1}) over all m^(m-2)
/// labeled trees.
inline BoundReport verify_tree_bounds(int m, int jobs = 1) {
  auto t0 = std::chrono::steady_clock::now();
  BoundReport report;
  report.suite = "tree";
  report.m = m;
  report.lower = detail::family_bound(FamilyName::as, m);
  report.upper = detail::family_bound(FamilyName::st, m);
  detail::ChainBounds chain(report.lower, report.upper);
  detail::run_sharded(tree_count(m), jobs, report, [&](std::uint64_t i, detail::Shard& shard) {
    detail::check_graph_bounds(tree_from_index(m, i), chain, shard);
  });
  report.elapsed_ms = detail::ms_since(t0);
  return report;
}

/// gamma monotonicity over edge-addition covers (Gamma, Gamma + e) of
/// connected graphs on [m]. Componentwise <= is transitive, so covers carry
/// the full subgraph order. samples = 0 checks every cover; otherwise an
/// evenly strided deterministic subsample of about `samples` covers.
inline BoundReport verify_monotonicity(int m, std::uint64_t samples = 0, int jobs = 1) {
  auto t0 = std::chrono::steady_clock::now();
  BoundReport report;
  report.suite = "monotonicity";
  report.m = m;
  std::vector<std::uint32_t> masks = connected_graph_masks(m);
  int slots = m * (m - 1) / 2;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> covers;  // (mask, mask | new edge)
  for (std::uint32_t mask : masks) {
    for (int bit = 0; bit < slots; ++bit) {
      if ((mask & (1u << bit)) == 0) covers.emplace_back(mask, mask | (1u << bit));
    }
  }
  std::uint64_t stride = 1;
  if (samples > 0 && covers.size() > samples) stride = covers.size() / samples;
  std::uint64_t count = (covers.size() + stride - 1) / stride;
  detail::run_sharded(count, jobs, report, [&](std::uint64_t i, detail::Shard& shard) {
    auto [sub, super] = covers[static_cast<std::size_t>(i * stride)];
    GammaVector lo = gamma_of(graphical_building_set(graph_from_edge_mask(m, sub)));
    SimpleGraph big = graph_from_edge_mask(m, super);
    GammaVector hi = gamma_of(graphical_building_set(big));
    ++shard.checked;
    if (!leq_componentwise(lo, hi)) {
      shard.failures.push_back(BoundFailure{big, hi, "gamma decreased after removing one edge: " + lo.to_string(), ""});
    }
  });
  report.elapsed_ms = detail::ms_since(t0);
  return report;
}

struct ProductCase {
  std::string label;
  BuildingSet outer;
  std::vector<BuildingSet> parts;
};

inline std::vector<ProductCase> default_product_cases() {
  BuildingSet j = interval_building_set();
  BuildingSet point = simplex_building_set(1);
  BuildingSet path3 = graphical_building_set(path_graph(3));
  BuildingSet k3 = graphical_building_set(complete_graph(3));
  std::vector<ProductCase> cases;
  cases.push_back({"J(J,J)", j, {j, j}});
  cases.push_back({"K3(point,point,point)", k3, {point, point, point}});
  cases.push_back({"J(B(path3),point)", j, {path3, point}});
  cases.push_back({"path3(J,point,point)", path3, {j, point, point}});
  cases.push_back({"J(B(K3),J)", j, {k3, j}});
  return cases;
}

/// h(substitution(B, parts)) must equal the convolution of the component
/// h-vectors: the nestohedron of the substitution is the product polytope.
inline BoundReport verify_product_rule(std::span<const ProductCase> cases) {
  auto t0 = std::chrono::steady_clock::now();
  BoundReport report;
  report.suite = "product";
  for (const ProductCase& c : cases) {
    BuildingSet combined = substitution(c.outer, c.parts);
    report.m = std::max(report.m, combined.ground_size());
    HVector direct = h_of(combined);
    HVector expected = h_of(c.outer);
    for (const BuildingSet& p : c.parts) expected = convolve(expected, h_of(p));
    ++report.checked;
    if (!(direct == expected)) {
      report.failures.push_back(BoundFailure{std::nullopt, gamma_from_h(direct),
                                             "h " + direct.to_string() + " != product " + expected.to_string(),
                                             c.label});
    }
  }
  report.elapsed_ms = detail::ms_since(t0);
  return report;
}

inline BoundReport verify_product_rule() {
  std::vector<ProductCase> cases = default_product_cases();
  return verify_product_rule(std::span<const ProductCase>(cases));
}

/// Flagness plus Gal nonnegativity, restated as gamma(I^n) <= gamma <=
/// gamma(Pe^n), for the graphical subclass of flag nestohedra (checked
/// exhaustively; general flag nestohedra are out of enumeration reach).
inline BoundReport verify_gal_flag(int m, int jobs = 1) {
  auto t0 = std::chrono::steady_clock::now();
  BoundReport report;
  report.suite = "gal-flag";
  report.m = m;
  report.lower = cube_gamma(m - 1);
  report.upper = detail::family_bound(FamilyName::pe, m);
  detail::ChainBounds chain(report.lower, report.upper);
  std::vector<std::uint32_t> masks = connected_graph_masks(m);
  detail::run_sharded(masks.size(), jobs, report, [&](std::uint64_t i, detail::Shard& shard) {
    SimpleGraph g = graph_from_edge_mask(m, masks[static_cast<std::size_t>(i)]);
    BuildingSet b = graphical_building_set(g);
    ++shard.checked;
    if (!is_flag(b)) {
      shard.failures.push_back(BoundFailure{g, GammaVector{{Int(1)}, 0}, "building set is not flag", ""});
      return;
    }
    GammaVector gamma = gamma_of(b);
    std::string bad;
    for (const Int& v : gamma.entries) {
      if (v < 0) bad = "gamma has a negative entry";
    }
    if (bad.empty() && !leq_componentwise(report.lower, gamma)) bad = "gamma below cube bound";
    if (bad.empty() && !leq_componentwise(gamma, report.upper)) bad = "gamma above permutohedron bound";
    if (!bad.empty()) shard.failures.push_back(BoundFailure{g, gamma, bad, ""});
    if (gamma == report.lower) shard.lower_attained = true;
    if (gamma == report.upper) shard.upper_attained = true;
  });
  report.elapsed_ms = detail::ms_since(t0);
  return report;
}

}  // namespace gac

#endif  // GAC_BOUNDS_HARNESS_HPP_
