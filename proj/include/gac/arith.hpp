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

#ifndef GAC_ARITH_HPP_
#define GAC_ARITH_HPP_

#include <boost/multiprecision/cpp_int.hpp>

namespace gac {

/// All coefficients in this library are exact integers. Face counts fit in
/// machine words, but the series engines (orders up to 30) do not, so the
/// arbitrary-precision type is used throughout the vector algebra.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// C(n, k); zero outside the Pascal triangle.
inline Int binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step: r is C(n-k+i, i)
  }
  return r;
}

}  // namespace gac

#endif  // GAC_ARITH_HPP_
