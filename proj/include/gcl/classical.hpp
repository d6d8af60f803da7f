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

// Formal concept lattice (extents are column intersections) and the
// object-oriented rough set lattice (extents are column unions), built
// directly from the context or read back out of a general concept lattice.

#ifndef GCL_CLASSICAL_HPP_
#define GCL_CLASSICAL_HPP_

#include <cstddef>
#include <vector>

#include "gcl/attr_expr.hpp"
#include "gcl/caps.hpp"
#include "gcl/context.hpp"
#include "gcl/gcl_lattice.hpp"

namespace gcl {

enum class LatticeKind { kFcl, kRsl };

const char* to_string(LatticeKind kind);

/// FCL: intent = X^I, property = ∏ intent.
/// RSL: intent = X^□, property = ∑ intent.
struct ClassicalConcept {
  ObjectSet extent;
  AttributeSet intent;
  AttrExpr property;
};

struct ClassicalLattice {
  LatticeKind kind = LatticeKind::kFcl;
  /// Sorted by extent (cardinality, then bit pattern).
  std::vector<ClassicalConcept> concepts;
  /// Cover pairs of extent inclusion, as concept indices.
  std::vector<HasseEdge> hasse_edges;
  std::size_t sup = 0;
  std::size_t inf = 0;
};

/// Subset sweep over M0 ⊆ M when |M| <= caps.max_attributes, otherwise an
/// intersection closure. Both yield the same concepts.
ClassicalLattice build_fcl(const FormalContext& ctx, const Caps& caps = {});
ClassicalLattice build_rsl(const FormalContext& ctx, const Caps& caps = {});

/// Rebuilds the FCL or RSL using only the nodes of `gcl`: a node is kept
/// when it is the meet (FCL) or join (RSL) of the columns read out of its
/// gfcp (FCL) or grsp (RSL).
ClassicalLattice recover_classical(const GclLattice& gcl, LatticeKind kind);

/// Same kind and the same (extent, intent) pairs in the same order.
bool same_concepts(const ClassicalLattice& a, const ClassicalLattice& b);

/// Sorts concepts, computes the cover relation, sets sup/inf. Exposed for
/// callers assembling a lattice by hand.
void finalize(ClassicalLattice& lat);

}  // namespace gcl

#endif  // GCL_CLASSICAL_HPP_
