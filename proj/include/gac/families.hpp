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

#ifndef GAC_FAMILIES_HPP_
#define GAC_FAMILIES_HPP_

#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "gac/arith.hpp"
#include "gac/error.hpp"
#include "gac/face_complex.hpp"
#include "gac/face_polynomials.hpp"
#include "gac/graphs.hpp"

namespace gac {

/// The four named series of graph-associahedra: associahedra (paths),
/// cyclohedra (cycles), permutohedra (complete graphs) and stellohedra
/// (stars).
enum class FamilyName { as, cy, pe, st };

inline const char* family_name(FamilyName f) {
  switch (f) {
    case FamilyName::as: return "as";
    case FamilyName::cy: return "cy";
    case FamilyName::pe: return "pe";
    case FamilyName::st: return "st";
  }
  return "?";
}

/// Eulerian number A(n, k): permutations of n letters with exactly k
/// descents, by the standard two-term recurrence.
inline Int eulerian(int n, int k) {
  if (n < 1 || k < 0 || k >= n) {
    fail(errc::out_of_range, "eulerian(" + std::to_string(n) + "," + std::to_string(k) + ") needs 0 <= k < n");
  }
  std::vector<Int> row{1};
  for (int m = 2; m <= n; ++m) {
    std::vector<Int> next(static_cast<std::size_t>(m), Int(0));
    for (int j = 0; j < m; ++j) {
      Int a = j < m - 1 ? row[static_cast<std::size_t>(j)] : Int(0);
      Int b = j > 0 ? row[static_cast<std::size_t>(j - 1)] : Int(0);
      next[static_cast<std::size_t>(j)] = (j + 1) * a + (m - j) * b;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

namespace detail {

/// Memoized inductive tables for the four series. The cache behaves as a
/// write-once map: tables only grow, values are immutable once stored, and
/// all access goes through one mutex, so concurrent fills of the same index
/// produce identical values and readers never observe partial rows.
///
/// H recurrences (base H = 1 at n = 0):
///   H(As^n) = (a+t) H(As^{n-1}) + at sum_{i=1}^{n-1} H(As^{i-1}) H(As^{n-i-1})
///   H(Cy^n) = (a+t) H(Cy^{n-1}) + 2 at sum   H(As^{i-1}) H(Cy^{n-i-1})
///   H(Pe^n) = (a+t) H(Pe^{n-1}) + at sum C(n,i)     H(Pe^{i-1}) H(Pe^{n-i-1})
///   H(St^n) = (a+t) H(St^{n-1}) + at sum C(n-1,i-1) H(St^{i-1}) H(Pe^{n-i-1})
/// and the gamma versions with tau in place of at (factor 2tau for Cy).
class FamilyTable {
 public:
  static FamilyTable& instance() {
    static FamilyTable table;
    return table;
  }

  Coeffs h(FamilyName f, int n) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure(n);
    return h_[idx(f)][static_cast<std::size_t>(n)];
  }

  Coeffs gamma(FamilyName f, int n) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure(n);
    return g_[idx(f)][static_cast<std::size_t>(n)];
  }

 private:
  FamilyTable() {
    for (int f = 0; f < 4; ++f) {
      h_[f].push_back({Int(1)});
      g_[f].push_back({Int(1)});
    }
  }

  static std::size_t idx(FamilyName f) { return static_cast<std::size_t>(f); }

  void ensure(int n) {
    if (n < 0) fail(errc::out_of_range, "family index must be nonnegative");
    const std::size_t as = idx(FamilyName::as), cy = idx(FamilyName::cy);
    const std::size_t pe = idx(FamilyName::pe), st = idx(FamilyName::st);
    const Coeffs at{Int(0), Int(1), Int(0)};
    const Coeffs a_plus_t{Int(1), Int(1)};
    for (int k = static_cast<int>(h_[0].size()); k <= n; ++k) {
      auto sum_h = [&](std::size_t fa, std::size_t fb, bool binom, bool shifted) {
        Coeffs total;
        for (int i = 1; i <= k - 1; ++i) {
          Coeffs term = conv(h_[fa][static_cast<std::size_t>(i - 1)], h_[fb][static_cast<std::size_t>(k - i - 1)]);
          if (binom) term = scale(term, binomial(k, i));
          if (shifted) term = scale(term, binomial(k - 1, i - 1));
          total = add(total, term);
        }
        return total;
      };
      auto sum_g = [&](std::size_t fa, std::size_t fb, bool binom, bool shifted) {
        Coeffs total;
        for (int i = 1; i <= k - 1; ++i) {
          Coeffs term = conv(g_[fa][static_cast<std::size_t>(i - 1)], g_[fb][static_cast<std::size_t>(k - i - 1)]);
          if (binom) term = scale(term, binomial(k, i));
          if (shifted) term = scale(term, binomial(k - 1, i - 1));
          total = add(total, term);
        }
        return total;
      };
      auto tau_shift = [](Coeffs c) {
        c.insert(c.begin(), Int(0));
        return c;
      };

      h_[as].push_back(add(conv(a_plus_t, h_[as][static_cast<std::size_t>(k - 1)]), conv(at, sum_h(as, as, false, false))));
      h_[cy].push_back(add(conv(a_plus_t, h_[cy][static_cast<std::size_t>(k - 1)]), scale(conv(at, sum_h(as, cy, false, false)), 2)));
      h_[pe].push_back(add(conv(a_plus_t, h_[pe][static_cast<std::size_t>(k - 1)]), conv(at, sum_h(pe, pe, true, false))));
      h_[st].push_back(add(conv(a_plus_t, h_[st][static_cast<std::size_t>(k - 1)]), conv(at, sum_h(st, pe, false, true))));

      g_[as].push_back(add(g_[as][static_cast<std::size_t>(k - 1)], tau_shift(sum_g(as, as, false, false))));
      g_[cy].push_back(add(g_[cy][static_cast<std::size_t>(k - 1)], scale(tau_shift(sum_g(as, cy, false, false)), 2)));
      g_[pe].push_back(add(g_[pe][static_cast<std::size_t>(k - 1)], tau_shift(sum_g(pe, pe, true, false))));
      g_[st].push_back(add(g_[st][static_cast<std::size_t>(k - 1)], tau_shift(sum_g(st, pe, false, true))));
    }
  }

  std::mutex mu_;
  std::vector<Coeffs> h_[4];
  std::vector<Coeffs> g_[4];
};

inline Coeffs pad_to(Coeffs c, std::size_t len) {
  if (c.size() < len) c.resize(len, Int(0));
  return c;
}

}  // namespace detail

/// h-vector of the n-dimensional member of a series, by the inductive
/// shaving recurrence.
inline HVector h_family(FamilyName f, int n) {
  return HVector{detail::pad_to(detail::FamilyTable::instance().h(f, n), static_cast<std::size_t>(n) + 1)};
}

/// gamma-vector by the inductive recurrence.
inline GammaVector gamma_family(FamilyName f, int n) {
  return GammaVector{detail::pad_to(detail::FamilyTable::instance().gamma(f, n), static_cast<std::size_t>(n / 2) + 1), n};
}

/// Closed-form h-vectors: Narayana numbers for As, squared binomials for
/// Cy, Eulerian numbers for Pe, binomially weighted Eulerian sums for St.
inline HVector closed_h(FamilyName f, int n) {
  HVector h;
  h.entries.assign(static_cast<std::size_t>(n) + 1, Int(0));
  for (int i = 0; i <= n; ++i) {
    Int v;
    switch (f) {
      case FamilyName::as:
        v = binomial(n + 1, i) * binomial(n + 1, i + 1) / (n + 1);
        break;
      case FamilyName::cy:
        v = binomial(n, i) * binomial(n, i);
        break;
      case FamilyName::pe:
        v = eulerian(n + 1, i);
        break;
      case FamilyName::st: {
        if (i == 0) {
          v = 1;
        } else {
          v = 0;
          for (int k = i; k <= n; ++k) v += binomial(n, k) * eulerian(k, i - 1);
        }
        break;
      }
    }
    h.entries[static_cast<std::size_t>(i)] = v;
  }
  return h;
}

/// Closed-form gamma-vectors. As and Cy have direct formulas; Pe and St are
/// obtained from the closed-form h-vectors through the basis change, which
/// keeps this route independent of the recurrences.
inline GammaVector closed_gamma(FamilyName f, int n) {
  switch (f) {
    case FamilyName::as: {
      GammaVector g;
      g.n = n;
      g.entries.assign(static_cast<std::size_t>(n / 2) + 1, Int(0));
      for (int i = 0; 2 * i <= n; ++i) {
        g.entries[static_cast<std::size_t>(i)] = binomial(2 * i, i) * binomial(n, 2 * i) / (i + 1);
      }
      return g;
    }
    case FamilyName::cy: {
      GammaVector g;
      g.n = n;
      g.entries.assign(static_cast<std::size_t>(n / 2) + 1, Int(0));
      for (int i = 0; 2 * i <= n; ++i) {
        g.entries[static_cast<std::size_t>(i)] = binomial(n, i) * binomial(n - i, i);
      }
      return g;
    }
    case FamilyName::pe:
    case FamilyName::st:
      return gamma_from_h(closed_h(f, n));
  }
  fail(errc::unknown_family, "unreachable");
}

/// h and gamma of the n-cube (h_i = C(n, i), gamma = (1, 0, ..., 0)); the
/// lower bound for flag nestohedra.
inline HVector cube_h(int n) {
  HVector h;
  h.entries.assign(static_cast<std::size_t>(n) + 1, Int(0));
  for (int i = 0; i <= n; ++i) h.entries[static_cast<std::size_t>(i)] = binomial(n, i);
  return h;
}

inline GammaVector cube_gamma(int n) {
  GammaVector g;
  g.n = n;
  g.entries.assign(static_cast<std::size_t>(n / 2) + 1, Int(0));
  g.entries[0] = 1;
  return g;
}

/// One step of the inductive construction: extend a connected graph by a
/// new node adjacent exactly to a clique V, and compute the gamma- and
/// h-vectors of the extended graph-associahedron by the codimension-2
/// shaving formulas
///   gamma' = gamma + tau * sum_{S} gamma(B|_S) gamma(B/S)
///   H'     = (a+t) H + at  * sum_{S} H(B|_S) H(B/S)
/// over the proper elements S of B(Gamma) meeting V.
struct ConstructionResult {
  SimpleGraph graph;
  GammaVector gamma;
  HVector h;
};

inline ConstructionResult construction_ind(const SimpleGraph& g, NodeSet v) {
  if (!is_connected(g)) fail(errc::not_connected, "the construction starts from a connected graph");
  if (v.empty() || !v.is_subset_of(g.nodes())) {
    fail(errc::v_not_clique, "V must be a nonempty subset of the nodes");
  }
  for (int a : v.labels()) {
    for (int b : v.labels()) {
      if (a < b && !g.has_edge(a, b)) {
        fail(errc::v_not_clique, v.to_string() + " does not induce a complete subgraph");
      }
    }
  }
  std::vector<int> labels = g.nodes().labels();
  int fresh = labels.back() + 1;
  if (fresh > NodeSet::kMaxGround) fail(errc::ground_too_large, "no label left for the new node");

  SimpleGraph extended = SimpleGraph::on(g.nodes().unite(NodeSet::single(fresh)));
  for (auto [i, j] : g.edges()) extended.add_edge(i, j);
  for (int w : v.labels()) extended.add_edge(w, fresh);

  BuildingSet b = graphical_building_set(g);
  detail::Coeffs gamma_sum, h_sum;
  for (NodeSet s : b.elements()) {
    if (s == b.ground() || !s.intersects(v)) continue;
    BuildingSet bs = restriction(b, s);
    BuildingSet cs = contraction(b, s);
    gamma_sum = detail::add(gamma_sum, detail::conv(gamma_of(bs).entries, gamma_of(cs).entries));
    h_sum = detail::add(h_sum, detail::conv(h_of(bs).entries, h_of(cs).entries));
  }
  int m = g.node_count();
  detail::Coeffs gamma_new = detail::add(gamma_of(b).entries, [&] {
    detail::Coeffs t = gamma_sum;
    t.insert(t.begin(), Int(0));
    return t;
  }());
  detail::Coeffs h_new = detail::add(detail::conv({Int(1), Int(1)}, h_of(b).entries),
                                     detail::conv({Int(0), Int(1), Int(0)}, h_sum));
  return ConstructionResult{std::move(extended),
                            GammaVector{detail::pad_to(std::move(gamma_new), static_cast<std::size_t>(m / 2) + 1), m},
                            HVector{detail::pad_to(std::move(h_new), static_cast<std::size_t>(m) + 1)}};
}

// ---------------------------------------------------------------------------
// Truncated graded series and the generating-function identity checks.
// ---------------------------------------------------------------------------

enum class SeriesName { as, cy, pe, st, u, v, gamma_as, gamma_cy, gamma_pe, gamma_st };
enum class Normalization { ordinary, exponential };
enum class CoefficientKind { bivariate, tau };

/// A truncated formal power series whose x^n coefficient (exponential
/// normalization: coefficient of x^n/n!) is a homogeneous bivariate
/// polynomial in (alpha, t) of degree n + offset, stored as its coefficient
/// array, or a tau-polynomial for the gamma series. Exponential series
/// multiply by binomial convolution, ordinary series by plain convolution.
struct GradedSeries {
  Normalization norm = Normalization::ordinary;
  CoefficientKind kind = CoefficientKind::bivariate;
  int offset = 0;
  std::vector<detail::Coeffs> coeff;

  int order() const { return static_cast<int>(coeff.size()) - 1; }
};

namespace detail {

inline void check_graded(const GradedSeries& s) {
  if (s.kind != CoefficientKind::bivariate) return;
  for (int n = 0; n <= s.order(); ++n) {
    const Coeffs& c = s.coeff[static_cast<std::size_t>(n)];
    if (all_zero(c)) continue;
    if (static_cast<int>(c.size()) != n + s.offset + 1) {
      fail(errc::degree_mismatch, "coefficient of x^" + std::to_string(n) + " is not homogeneous of degree " +
                                      std::to_string(n + s.offset));
    }
  }
}

inline void require_compatible(const GradedSeries& a, const GradedSeries& b) {
  if (a.norm != b.norm || a.kind != b.kind) fail(errc::degree_mismatch, "mixed series normalizations");
}

inline GradedSeries series_truncate(GradedSeries s, int order) {
  if (s.order() > order) s.coeff.resize(static_cast<std::size_t>(order) + 1);
  return s;
}

inline GradedSeries series_add(const GradedSeries& a, const GradedSeries& b) {
  require_compatible(a, b);
  if (a.offset != b.offset) fail(errc::degree_mismatch, "adding series of different offsets");
  GradedSeries out = a;
  int n = std::min(a.order(), b.order());
  out.coeff.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out.coeff[static_cast<std::size_t>(i)] = add(a.coeff[static_cast<std::size_t>(i)], b.coeff[static_cast<std::size_t>(i)]);
  return out;
}

inline GradedSeries series_negate(GradedSeries s) {
  for (Coeffs& c : s.coeff) c = scale(c, Int(-1));
  return s;
}

inline GradedSeries series_sub(const GradedSeries& a, const GradedSeries& b) { return series_add(a, series_negate(b)); }

inline GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b) {
  require_compatible(a, b);
  GradedSeries out;
  out.norm = a.norm;
  out.kind = a.kind;
  out.offset = a.offset + b.offset;
  int n = std::min(a.order(), b.order());
  out.coeff.assign(static_cast<std::size_t>(n) + 1, {});
  for (int i = 0; i <= n; ++i) {
    Coeffs acc;
    for (int k = 0; k <= i; ++k) {
      Coeffs term = conv(a.coeff[static_cast<std::size_t>(k)], b.coeff[static_cast<std::size_t>(i - k)]);
      if (a.norm == Normalization::exponential) term = scale(term, binomial(i, k));
      acc = add(acc, term);
    }
    out.coeff[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return out;
}

/// Multiplies every coefficient by a fixed homogeneous polynomial.
inline GradedSeries series_scale(const GradedSeries& s, const Coeffs& p) {
  GradedSeries out = s;
  out.offset = s.offset + static_cast<int>(p.size()) - 1;
  for (Coeffs& c : out.coeff) c = conv(c, p);
  return out;
}

/// Multiplication by x. Ordinary: index shift. Exponential: c_n -> n c_{n-1}.
inline GradedSeries series_shift_x(const GradedSeries& s) {
  GradedSeries out = s;
  out.offset = s.offset - 1;
  out.coeff.assign(s.coeff.size(), {});
  for (int n = 1; n <= s.order(); ++n) {
    Coeffs c = s.coeff[static_cast<std::size_t>(n - 1)];
    if (s.norm == Normalization::exponential) c = scale(c, Int(n));
    out.coeff[static_cast<std::size_t>(n)] = std::move(c);
  }
  return out;
}

/// d/dx of an exponential series: a plain index shift down.
inline GradedSeries series_derivative(const GradedSeries& s) {
  if (s.norm != Normalization::exponential) fail(errc::degree_mismatch, "derivative is defined for exponential series");
  GradedSeries out = s;
  out.offset = s.offset + 1;
  out.coeff.assign(s.coeff.size() - 1, {});
  for (int n = 0; n < s.order(); ++n) out.coeff[static_cast<std::size_t>(n)] = s.coeff[static_cast<std::size_t>(n + 1)];
  return out;
}

inline GradedSeries series_one(Normalization norm, int order) {
  GradedSeries out;
  out.norm = norm;
  out.coeff.assign(static_cast<std::size_t>(order) + 1, {});
  out.coeff[0] = {Int(1)};
  return out;
}

/// First order whose coefficient is nonzero, or -1 when all vanish.
inline int first_nonzero_order(const GradedSeries& s) {
  for (int n = 0; n <= s.order(); ++n) {
    if (!all_zero(s.coeff[static_cast<std::size_t>(n)])) return n;
  }
  return -1;
}

inline GradedSeries series_impl(SeriesName name, int order) {
  GradedSeries s;
  auto& table = FamilyTable::instance();
  auto fill = [&](Normalization norm, CoefficientKind kind, int offset, FamilyName fam, bool shifted, bool gamma) {
    s.norm = norm;
    s.kind = kind;
    s.offset = offset;
    s.coeff.assign(static_cast<std::size_t>(order) + 1, {});
    for (int n = 0; n <= order; ++n) {
      int idx = shifted ? n - 1 : n;
      if (idx < 0) continue;
      s.coeff[static_cast<std::size_t>(n)] = gamma ? table.gamma(fam, idx) : table.h(fam, idx);
    }
  };
  switch (name) {
    case SeriesName::as: fill(Normalization::ordinary, CoefficientKind::bivariate, 0, FamilyName::as, false, false); break;
    case SeriesName::cy: fill(Normalization::ordinary, CoefficientKind::bivariate, 0, FamilyName::cy, false, false); break;
    case SeriesName::u: fill(Normalization::ordinary, CoefficientKind::bivariate, -1, FamilyName::as, true, false); break;
    case SeriesName::v: fill(Normalization::ordinary, CoefficientKind::bivariate, -1, FamilyName::cy, true, false); break;
    case SeriesName::pe: fill(Normalization::exponential, CoefficientKind::bivariate, -1, FamilyName::pe, true, false); break;
    case SeriesName::st: fill(Normalization::exponential, CoefficientKind::bivariate, 0, FamilyName::st, false, false); break;
    case SeriesName::gamma_as: fill(Normalization::ordinary, CoefficientKind::tau, 0, FamilyName::as, false, true); break;
    case SeriesName::gamma_cy: fill(Normalization::ordinary, CoefficientKind::tau, 0, FamilyName::cy, false, true); break;
    case SeriesName::gamma_pe: fill(Normalization::exponential, CoefficientKind::tau, -1, FamilyName::pe, true, true); break;
    case SeriesName::gamma_st: fill(Normalization::exponential, CoefficientKind::tau, 0, FamilyName::st, false, true); break;
  }
  check_graded(s);
  return s;
}

}  // namespace detail

/// Truncated series with exact coefficients, built from the recurrences.
inline GradedSeries series(SeriesName name, int order) {
  if (order < 0 || order > 30) fail(errc::order_too_large, "series order must be between 0 and 30");
  return detail::series_impl(name, order);
}

enum class IdentityId { as_functional, cy_relation, pe_ode, st_ode, as_closed_form, pe_closed_form };

inline const char* identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::as_functional: return "as_functional";
    case IdentityId::cy_relation: return "cy_relation";
    case IdentityId::pe_ode: return "pe_ode";
    case IdentityId::st_ode: return "st_ode";
    case IdentityId::as_closed_form: return "as_closed_form";
    case IdentityId::pe_closed_form: return "pe_closed_form";
  }
  return "?";
}

/// Outcome of a coefficientwise identity check; failure is a report, not an
/// exception.
struct IdentityReport {
  std::string id;
  int order = 0;
  bool verified = false;
  int first_failing_order = -1;
};

namespace detail {

inline IdentityReport report_from_residual(const char* id, int order, const GradedSeries& residual) {
  int bad = first_nonzero_order(series_truncate(residual, order));
  return IdentityReport{id, order, bad < 0, bad};
}

}  // namespace detail

/// U = x (1 + alpha U)(1 + t U), coefficientwise; the functional equation of
/// U = x H_As in cleared polynomial form.
inline IdentityReport check_as_functional(const GradedSeries& u, int order) {
  using namespace detail;
  const Coeffs alpha{Int(1), Int(0)}, t{Int(0), Int(1)};
  GradedSeries one = series_one(u.norm, u.order());
  GradedSeries rhs = series_shift_x(series_mul(series_add(one, series_scale(u, alpha)), series_add(one, series_scale(u, t))));
  return report_from_residual("as_functional", order, series_sub(series_truncate(u, rhs.order()), rhs));
}

/// V (1 - alpha t U^2) = U in cleared form.
inline IdentityReport check_cy_relation(const GradedSeries& u, const GradedSeries& v, int order) {
  using namespace detail;
  const Coeffs at{Int(0), Int(1), Int(0)};
  GradedSeries one = series_one(u.norm, u.order());
  GradedSeries lhs = series_mul(v, series_sub(one, series_scale(series_mul(u, u), at)));
  return report_from_residual("cy_relation", order, series_sub(lhs, series_truncate(u, lhs.order())));
}

/// dH_Pe/dx = (1 + alpha H_Pe)(1 + t H_Pe); pass the series to order
/// `order` + 1 so the derivative is usable to `order`.
inline IdentityReport check_pe_ode(const GradedSeries& pe_ext, int order) {
  using namespace detail;
  const Coeffs alpha{Int(1), Int(0)}, t{Int(0), Int(1)};
  GradedSeries d = series_derivative(pe_ext);
  GradedSeries one = series_one(pe_ext.norm, pe_ext.order());
  GradedSeries rhs = series_mul(series_add(one, series_scale(pe_ext, alpha)), series_add(one, series_scale(pe_ext, t)));
  return report_from_residual("pe_ode", order, series_sub(d, series_truncate(rhs, d.order())));
}

/// dH_St/dx = H_St (alpha + t + alpha t H_Pe). The H recurrences for the
/// stellohedra are exactly equivalent to this equation with H_Pe in its
/// exponential normalization sum H(Pe^n) x^(n+1)/(n+1)!.
inline IdentityReport check_st_ode(const GradedSeries& st_ext, const GradedSeries& pe_ext, int order) {
  using namespace detail;
  const Coeffs at{Int(0), Int(1), Int(0)};
  GradedSeries d = series_derivative(st_ext);
  GradedSeries lin;
  lin.norm = Normalization::exponential;
  lin.offset = 1;
  lin.coeff.assign(pe_ext.coeff.size(), {});
  lin.coeff[0] = {Int(1), Int(1)};  // alpha + t
  GradedSeries factor = series_add(lin, series_scale(pe_ext, at));
  GradedSeries rhs = series_mul(series_truncate(st_ext, factor.order()), factor);
  return report_from_residual("st_ode", order, series_sub(d, series_truncate(rhs, d.order())));
}

/// H(As^n) against the Narayana closed form, order by order.
inline IdentityReport check_as_closed_form(const GradedSeries& as, int order) {
  int bad = -1;
  for (int n = 0; n <= order && n <= as.order(); ++n) {
    if (!detail::eq(as.coeff[static_cast<std::size_t>(n)], closed_h(FamilyName::as, n).entries)) {
      bad = n;
      break;
    }
  }
  return IdentityReport{"as_closed_form", order, bad < 0, bad};
}

/// H_Pe (alpha e^{tx} - t e^{alpha x}) = e^{alpha x} - e^{tx} as exponential
/// series: the closed-form solution of the permutohedron equation in cleared
/// form.
inline IdentityReport check_pe_closed_form(const GradedSeries& pe, int order) {
  using namespace detail;
  int n = pe.order();
  GradedSeries lhs_factor;  // alpha e^{tx} - t e^{alpha x}
  lhs_factor.norm = Normalization::exponential;
  lhs_factor.offset = 1;
  lhs_factor.coeff.assign(static_cast<std::size_t>(n) + 1, {});
  GradedSeries rhs;  // e^{alpha x} - e^{tx}
  rhs.norm = Normalization::exponential;
  rhs.offset = 0;
  rhs.coeff.assign(static_cast<std::size_t>(n) + 1, {});
  for (int k = 0; k <= n; ++k) {
    Coeffs f(static_cast<std::size_t>(k) + 2, Int(0));
    f[static_cast<std::size_t>(k)] += 1;  // alpha t^k
    f[1] -= 1;                            // t alpha^k
    if (!all_zero(f)) lhs_factor.coeff[static_cast<std::size_t>(k)] = std::move(f);
    Coeffs r(static_cast<std::size_t>(k) + 1, Int(0));
    r[0] += 1;                              // alpha^k
    r[static_cast<std::size_t>(k)] -= 1;    // t^k
    if (!all_zero(r)) rhs.coeff[static_cast<std::size_t>(k)] = std::move(r);
  }
  GradedSeries residual = series_sub(series_mul(pe, lhs_factor), rhs);
  return report_from_residual("pe_closed_form", order, residual);
}

/// Builds the canonical series and verifies the named identity to the given
/// order in cleared polynomial form.
inline IdentityReport check_identity(IdentityId id, int order) {
  if (order < 0 || order > 30) fail(errc::order_too_large, "identity order must be between 0 and 30");
  using detail::series_impl;
  switch (id) {
    case IdentityId::as_functional: return check_as_functional(series_impl(SeriesName::u, order), order);
    case IdentityId::cy_relation:
      return check_cy_relation(series_impl(SeriesName::u, order), series_impl(SeriesName::v, order), order);
    case IdentityId::pe_ode: return check_pe_ode(series_impl(SeriesName::pe, order + 1), order);
    case IdentityId::st_ode:
      return check_st_ode(series_impl(SeriesName::st, order + 1), series_impl(SeriesName::pe, order + 1), order);
    case IdentityId::as_closed_form: return check_as_closed_form(series_impl(SeriesName::as, order), order);
    case IdentityId::pe_closed_form: return check_pe_closed_form(series_impl(SeriesName::pe, order), order);
  }
  fail(errc::unknown_family, "unreachable");
}

}  // namespace gac

#endif  // GAC_FAMILIES_HPP_
