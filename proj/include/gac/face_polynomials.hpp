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

#ifndef GAC_FACE_POLYNOMIALS_HPP_
#define GAC_FACE_POLYNOMIALS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "gac/arith.hpp"
#include "gac/error.hpp"

namespace gac {

namespace detail {

/// Dense integer coefficient arrays. The same representation serves two
/// purposes: tau-polynomials (index = tau exponent) and homogeneous
/// bivariate polynomials in (alpha, t) of degree d, stored as the d+1
/// coefficients of alpha^(d-i) t^i. In both cases multiplication is plain
/// convolution.
using Coeffs = std::vector<Int>;

inline Coeffs conv(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs out = a.size() >= b.size() ? a : b;
  const Coeffs& small = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < small.size(); ++i) out[i] += small[i];
  return out;
}

inline Coeffs scale(const Coeffs& a, const Int& c) {
  Coeffs out = a;
  for (Int& v : out) v *= c;
  return out;
}

inline bool all_zero(const Coeffs& a) {
  for (const Int& v : a) {
    if (v != 0) return false;
  }
  return true;
}

/// Value equality: missing trailing entries count as zero.
inline bool eq(const Coeffs& a, const Coeffs& b) {
  std::size_t n = a.size() > b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < n; ++i) {
    Int va = i < a.size() ? a[i] : Int(0);
    Int vb = i < b.size() ? b[i] : Int(0);
    if (va != vb) return false;
  }
  return true;
}

inline std::string coeffs_to_string(const Coeffs& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].str();
  }
  return s + ")";
}

}  // namespace detail

/// f-vector of an n-polytope: entries[i] = number of i-dimensional faces,
/// with entries[n] = 1 for the polytope itself. Equivalently the
/// coefficients of the F-polynomial F = alpha^n + f_{n-1} alpha^(n-1) t +
/// ... + f_0 t^n read off from the t-degree-(n-i) terms.
struct FVector {
  std::vector<Int> entries;  // f_0 .. f_n

  int degree() const { return static_cast<int>(entries.size()) - 1; }
  friend bool operator==(const FVector&, const FVector&) = default;
  std::string to_string() const { return detail::coeffs_to_string(entries); }
};

/// h-vector: coefficients of H = F(alpha - t, t) in the basis
/// alpha^(n-i) t^i.
struct HVector {
  std::vector<Int> entries;  // h_0 .. h_n

  int degree() const { return static_cast<int>(entries.size()) - 1; }
  friend bool operator==(const HVector&, const HVector&) = default;
  std::string to_string() const { return detail::coeffs_to_string(entries); }
};

/// g-vector: g_0 = 1, g_i = h_i - h_{i-1} for i up to floor(n/2).
struct GVector {
  std::vector<Int> entries;  // g_0 .. g_{floor(n/2)}
  int n = 0;                 // degree of the underlying h-vector

  friend bool operator==(const GVector&, const GVector&) = default;
  std::string to_string() const { return detail::coeffs_to_string(entries); }
};

/// gamma-vector: the coordinates of a symmetric H in the basis
/// (alpha t)^i (alpha + t)^(n-2i).
struct GammaVector {
  std::vector<Int> entries;  // gamma_0 .. gamma_{floor(n/2)}
  int n = 0;

  friend bool operator==(const GammaVector&, const GammaVector&) = default;
  std::string to_string() const { return detail::coeffs_to_string(entries); }
};

inline bool is_symmetric(const HVector& h) {
  int n = h.degree();
  for (int i = 0; 2 * i <= n; ++i) {
    if (h.entries[static_cast<std::size_t>(i)] != h.entries[static_cast<std::size_t>(n - i)]) return false;
  }
  return true;
}

/// H = F(alpha - t, t): h_j = sum_k (-1)^(j-k) C(n-k, j-k) f_{n-k}.
inline HVector h_from_f(const FVector& f) {
  int n = f.degree();
  HVector h;
  h.entries.assign(static_cast<std::size_t>(n) + 1, Int(0));
  for (int j = 0; j <= n; ++j) {
    Int acc = 0;
    for (int k = 0; k <= j; ++k) {
      Int term = binomial(n - k, j - k) * f.entries[static_cast<std::size_t>(n - k)];
      if ((j - k) % 2 != 0) term = -term;
      acc += term;
    }
    h.entries[static_cast<std::size_t>(j)] = acc;
  }
  return h;
}

/// f_i = sum_{j=i..n} C(j, i) h_{n-j}; the inverse of h_from_f.
inline FVector f_from_h(const HVector& h) {
  int n = h.degree();
  FVector f;
  f.entries.assign(static_cast<std::size_t>(n) + 1, Int(0));
  for (int i = 0; i <= n; ++i) {
    Int acc = 0;
    for (int j = i; j <= n; ++j) acc += binomial(j, i) * h.entries[static_cast<std::size_t>(n - j)];
    f.entries[static_cast<std::size_t>(i)] = acc;
  }
  return f;
}

/// Triangular elimination from the outer coefficients inward: subtract
/// gamma_i (alpha t)^i (alpha + t)^(n-2i) once gamma_i is read off at
/// index i. Requires Dehn-Sommerville symmetry; an asymmetric input always
/// indicates a bug upstream and is rejected.
inline GammaVector gamma_from_h(const HVector& h) {
  if (!is_symmetric(h)) fail(errc::not_symmetric, "h-vector " + h.to_string() + " is not symmetric");
  int n = h.degree();
  std::vector<Int> rem = h.entries;
  GammaVector g;
  g.n = n;
  g.entries.assign(static_cast<std::size_t>(n / 2) + 1, Int(0));
  for (int i = 0; 2 * i <= n; ++i) {
    Int gi = rem[static_cast<std::size_t>(i)];
    g.entries[static_cast<std::size_t>(i)] = gi;
    if (gi == 0) continue;
    for (int k = i; k <= n - i; ++k) rem[static_cast<std::size_t>(k)] -= gi * binomial(n - 2 * i, k - i);
  }
  for (const Int& v : rem) {
    if (v != 0) fail(errc::not_symmetric, "gamma elimination left a nonzero remainder");
  }
  return g;
}

inline HVector h_from_gamma(const GammaVector& g) {
  int n = g.n;
  HVector h;
  h.entries.assign(static_cast<std::size_t>(n) + 1, Int(0));
  for (int i = 0; i < static_cast<int>(g.entries.size()); ++i) {
    const Int& gi = g.entries[static_cast<std::size_t>(i)];
    if (gi == 0) continue;
    for (int k = i; k <= n - i; ++k) h.entries[static_cast<std::size_t>(k)] += gi * binomial(n - 2 * i, k - i);
  }
  return h;
}

/// g_i = (n - 2i + 1) sum_j gamma_j C(n-2j, i-j) / (n - i - j + 1).
/// The rationals must cancel; a noninteger result signals an input or
/// implementation error.
inline GVector g_from_gamma(const GammaVector& gamma) {
  int n = gamma.n;
  GVector g;
  g.n = n;
  g.entries.assign(static_cast<std::size_t>(n / 2) + 1, Int(0));
  for (int i = 0; 2 * i <= n; ++i) {
    Rational acc = 0;
    for (int j = 0; j <= i && j < static_cast<int>(gamma.entries.size()); ++j) {
      acc += Rational(binomial(n - 2 * j, i - j) * gamma.entries[static_cast<std::size_t>(j)], Int(n - i - j + 1));
    }
    acc *= n - 2 * i + 1;
    if (boost::multiprecision::denominator(acc) != 1) {
      fail(errc::non_integer_result, "g-vector formula did not cancel at index " + std::to_string(i));
    }
    g.entries[static_cast<std::size_t>(i)] = boost::multiprecision::numerator(acc);
  }
  return g;
}

/// Prefix sums reflected to the full symmetric h-vector.
inline HVector h_from_g(const GVector& g) {
  int n = g.n;
  HVector h;
  h.entries.assign(static_cast<std::size_t>(n) + 1, Int(0));
  Int acc = 0;
  for (int i = 0; 2 * i <= n; ++i) {
    acc += g.entries[static_cast<std::size_t>(i)];
    h.entries[static_cast<std::size_t>(i)] = acc;
    h.entries[static_cast<std::size_t>(n - i)] = acc;
  }
  return h;
}

/// Successive differences of a symmetric h-vector; the independent route to
/// the g-vector.
inline GVector g_from_h(const HVector& h) {
  int n = h.degree();
  GVector g;
  g.n = n;
  g.entries.assign(static_cast<std::size_t>(n / 2) + 1, Int(0));
  for (int i = 0; 2 * i <= n; ++i) {
    g.entries[static_cast<std::size_t>(i)] =
        h.entries[static_cast<std::size_t>(i)] - (i > 0 ? h.entries[static_cast<std::size_t>(i - 1)] : Int(0));
  }
  return g;
}

/// H-polynomials multiply over products of polytopes.
inline HVector convolve(const HVector& a, const HVector& b) {
  return HVector{detail::conv(a.entries, b.entries)};
}

namespace detail {

template <class V>
void require_same_degree(const V& a, const V& b) {
  if (a.entries.size() != b.entries.size()) {
    fail(errc::degree_mismatch, "componentwise comparison of vectors of different degree");
  }
}

template <class V>
bool leq_entries(const V& a, const V& b) {
  require_same_degree(a, b);
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i] > b.entries[i]) return false;
  }
  return true;
}

}  // namespace detail

inline bool leq_componentwise(const FVector& a, const FVector& b) { return detail::leq_entries(a, b); }
inline bool leq_componentwise(const HVector& a, const HVector& b) { return detail::leq_entries(a, b); }
inline bool leq_componentwise(const GVector& a, const GVector& b) {
  if (a.n != b.n) fail(errc::degree_mismatch, "g-vectors of different degree");
  return detail::leq_entries(a, b);
}
inline bool leq_componentwise(const GammaVector& a, const GammaVector& b) {
  if (a.n != b.n) fail(errc::degree_mismatch, "gamma-vectors of different degree");
  return detail::leq_entries(a, b);
}

}  // namespace gac

#endif  // GAC_FACE_POLYNOMIALS_HPP_
