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

#ifndef GAC_ERROR_HPP_
#define GAC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace gac {

/// Structured failure codes. Every throwing operation names the violated
/// condition through one of these, so callers (and the CLI) can map
/// failures to exit codes without parsing messages.
enum class errc {
  // building-set validation
  empty_element,
  missing_singleton,
  union_violation,
  element_out_of_ground,
  ground_too_large,
  // building-set operations
  s_not_in_b,
  empty_ground,
  not_connected,
  // graphs
  m_too_small,
  m_too_large,
  too_large_for_hamiltonicity,
  s_not_connected,
  // face complex
  element_not_facet,
  // vector algebra
  not_symmetric,
  degree_mismatch,
  non_integer_result,
  out_of_range,
  // families
  v_not_clique,
  order_too_large,
  unknown_family,
  // input formats
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_element: return "EmptyElement";
    case errc::missing_singleton: return "MissingSingleton";
    case errc::union_violation: return "UnionViolation";
    case errc::element_out_of_ground: return "ElementOutOfGround";
    case errc::ground_too_large: return "GroundTooLarge";
    case errc::s_not_in_b: return "SNotInB";
    case errc::empty_ground: return "EmptyGround";
    case errc::not_connected: return "NotConnected";
    case errc::m_too_small: return "MTooSmall";
    case errc::m_too_large: return "MTooLarge";
    case errc::too_large_for_hamiltonicity: return "TooLargeForHamiltonicity";
    case errc::s_not_connected: return "SNotConnected";
    case errc::element_not_facet: return "ElementNotFacet";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::non_integer_result: return "NonIntegerResult";
    case errc::out_of_range: return "OutOfRange";
    case errc::v_not_clique: return "VNotClique";
    case errc::order_too_large: return "OrderTooLarge";
    case errc::unknown_family: return "UnknownFamily";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace gac

#endif  // GAC_ERROR_HPP_
