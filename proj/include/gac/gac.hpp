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

#ifndef GAC_GAC_HPP_
#define GAC_GAC_HPP_

#include "gac/arith.hpp"
#include "gac/bounds_harness.hpp"
#include "gac/building_sets.hpp"
#include "gac/error.hpp"
#include "gac/face_complex.hpp"
#include "gac/face_polynomials.hpp"
#include "gac/families.hpp"
#include "gac/graphs.hpp"
#include "gac/io.hpp"
#include "gac/node_set.hpp"

#endif  // GAC_GAC_HPP_
