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

// The general concept lattice. Its extents are the unions of blocks; each
// node carries the largest (grsp) and smallest (gfcp) generalised attribute
// with that extent, identified by their minterm sets.
//
// Every non-empty minterm extent is exactly one block, so with a_k the
// minterm of block k's row:
//   gfcp(K) = {a_k : k in K}
//   grsp(K) = all minterms except {a_k : k not in K}
// and both stay O(n_F) in the sparse/co-sparse CanonicalForm encoding.

#ifndef GCL_GCL_LATTICE_HPP_
#define GCL_GCL_LATTICE_HPP_

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "gcl/attr_expr.hpp"
#include "gcl/canonical_form.hpp"
#include "gcl/caps.hpp"
#include "gcl/context.hpp"

namespace gcl {

struct GeneralConcept {
  BlockMask block_set = 0;
  ObjectSet extent;
  CanonicalForm grsp;
  CanonicalForm gfcp;

  bool operator==(const GeneralConcept&) const = default;
};

struct ContextualConstants {
  CanonicalForm zero_rho;  // grsp of the empty extent
  CanonicalForm one_eta;   // gfcp of G
};

using HasseEdge = std::pair<std::size_t, std::size_t>;  // (lower, upper)

/// Built by build_gcl; treat as immutable. Fields are public so tests can
/// construct corrupted copies for fault injection.
struct GclLattice {
  std::shared_ptr<const FormalContext> context;
  BlockPartition partition;
  std::vector<MintermId> block_atoms;  // a_k per block
  std::vector<GeneralConcept> nodes;   // index == block_set
  std::vector<HasseEdge> hasse_edges;
  ContextualConstants constants;

  std::size_t num_blocks() const { return partition.size(); }
  BlockMask full_mask() const {
    return num_blocks() == 0 ? 0 : (~BlockMask{0} >> (64 - num_blocks()));
  }
  const GeneralConcept& node(BlockMask mask) const { return nodes.at(mask); }
  /// Throws InvalidArgument if X is not in E_F.
  const GeneralConcept& node_for(const ObjectSet& x) const;
  const GeneralConcept& sup() const { return nodes.at(full_mask()); }
  const GeneralConcept& inf() const { return nodes.at(0); }
};

/// All unions of blocks, in block-set id order. Throws CapExceeded when
/// n_F > caps.max_blocks.
std::vector<ObjectSet> extent_family(const FormalContext& ctx,
                                     const Caps& caps = {});

/// Throws InvalidArgument if X is not a union of blocks, CapExceeded if |M|
/// is over the canonical cap.
GeneralConcept general_concept(const ObjectSet& x, const FormalContext& ctx,
                               const Caps& caps = {});

ContextualConstants contextual_constants(const FormalContext& ctx,
                                         const Caps& caps = {});

GclLattice build_gcl(const FormalContext& ctx, const Caps& caps = {});

/// Node at X^c: grsp = ¬gfcp(X), gfcp = ¬grsp(X).
const GeneralConcept& dagger(const GeneralConcept& c, const GclLattice& lat);
const GeneralConcept& meet(const GeneralConcept& a, const GeneralConcept& b,
                           const GclLattice& lat);
const GeneralConcept& join(const GeneralConcept& a, const GeneralConcept& b,
                           const GclLattice& lat);
/// Extent inclusion.
bool leq(const GeneralConcept& a, const GeneralConcept& b);

/// μ ∈ [X]_F, i.e. μ^R = X.
bool equivalent_class_membership(const AttrExpr& expr, const ObjectSet& x,
                                 const FormalContext& ctx);

/// canonical(m) ⊆ cf, computed on the sparse representation.
bool attribute_implies(std::size_t m, const CanonicalForm& cf);
/// cf ⊆ canonical(m).
bool implies_attribute(const CanonicalForm& cf, std::size_t m);

}  // namespace gcl

#endif  // GCL_GCL_LATTICE_HPP_
