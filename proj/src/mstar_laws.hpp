// Copyright 2026 The gcl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Ids and descriptions of the laws reported by the exhaustive sweep.

#ifndef GCL_SRC_MSTAR_LAWS_HPP_
#define GCL_SRC_MSTAR_LAWS_HPP_

#include "gcl/oracle.hpp"

namespace gcl::detail {

inline constexpr LawInfo kMstarCount{
    "mstar-count",
    "the sweep sees 2^(2^|M|) distinct truth tables, class sizes sum to that "
    "total, and there are 2^|M| atoms paired with their negated coatoms"};
inline constexpr LawInfo kMstarExtents{
    "mstar-extents", "the realised extents are exactly the unions of blocks"};
inline constexpr LawInfo kMstarBounds{
    "mstar-bounds",
    "each class contains its Boolean-order minimum and maximum, and they equal "
    "the lattice's gfcp and grsp"};
inline constexpr LawInfo kMstarPartition{
    "mstar-partition",
    "every truth table lies in exactly one extent class (re-evaluated through "
    "the canonical-form evaluator)"};

}  // namespace gcl::detail

#endif  // GCL_SRC_MSTAR_LAWS_HPP_
