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

#include "gcl/gcl_lattice.hpp"

#include <algorithm>

#include "gcl/error.hpp"

namespace gcl {

namespace {

void check_blocks(std::size_t n_f, const Caps& caps) {
  const std::size_t limit = std::min(caps.max_blocks, kMaxBlocksLimit);
  if (n_f > limit) throw CapExceeded("block count n_F", n_f, limit);
}

void check_attributes(std::size_t m, const Caps& caps) {
  const std::size_t limit = std::min(caps.max_attributes, kMaxAttributesLimit);
  if (m > limit) throw CapExceeded("attribute count |M|", m, limit);
}

std::vector<MintermId> atoms_of(const FormalContext& ctx,
                                const BlockPartition& part) {
  std::vector<MintermId> atoms;
  atoms.reserve(part.size());
  for (const auto& b : part.blocks) {
    const auto& w = b.intent.words();
    atoms.push_back(static_cast<MintermId>(w.empty() ? 0 : w[0]));
  }
  (void)ctx;
  return atoms;
}

GeneralConcept concept_for_mask(BlockMask mask, const BlockPartition& part,
                                const std::vector<MintermId>& atoms,
                                std::size_t num_objects, unsigned m) {
  std::vector<MintermId> inside, outside;
  for (std::size_t k = 0; k < atoms.size(); ++k)
    ((mask >> k) & 1u ? inside : outside).push_back(atoms[k]);
  return {mask, part.extent_of_mask(mask, num_objects),
          CanonicalForm::all_but(m, std::move(outside)),
          CanonicalForm::from_ids(m, std::move(inside))};
}

}  // namespace

const GeneralConcept& GclLattice::node_for(const ObjectSet& x) const {
  auto mask = partition.mask_of(x);
  if (!mask) throw InvalidArgument("extent is not a union of blocks");
  return nodes.at(*mask);
}

std::vector<ObjectSet> extent_family(const FormalContext& ctx, const Caps& caps) {
  const auto part = blocks(ctx);
  check_blocks(part.size(), caps);
  const BlockMask count = BlockMask{1} << part.size();
  std::vector<ObjectSet> family;
  family.reserve(count);
  for (BlockMask mask = 0; mask < count; ++mask)
    family.push_back(part.extent_of_mask(mask, ctx.num_objects()));
  return family;
}

GeneralConcept general_concept(const ObjectSet& x, const FormalContext& ctx,
                               const Caps& caps) {
  check_attributes(ctx.num_attributes(), caps);
  const auto part = blocks(ctx);
  check_blocks(part.size(), Caps{.max_blocks = kMaxBlocksLimit});
  auto mask = part.mask_of(x);
  if (!mask) throw InvalidArgument("extent is not a union of blocks");
  return concept_for_mask(*mask, part, atoms_of(ctx, part), ctx.num_objects(),
                          static_cast<unsigned>(ctx.num_attributes()));
}

ContextualConstants contextual_constants(const FormalContext& ctx,
                                         const Caps& caps) {
  check_attributes(ctx.num_attributes(), caps);
  const auto atoms = atoms_of(ctx, blocks(ctx));
  const auto m = static_cast<unsigned>(ctx.num_attributes());
  return {CanonicalForm::all_but(m, atoms), CanonicalForm::from_ids(m, atoms)};
}

GclLattice build_gcl(const FormalContext& ctx, const Caps& caps) {
  check_attributes(ctx.num_attributes(), caps);
  GclLattice lat;
  lat.context = std::make_shared<const FormalContext>(ctx);
  lat.partition = blocks(ctx);
  check_blocks(lat.partition.size(), caps);
  lat.block_atoms = atoms_of(ctx, lat.partition);

  const auto m = static_cast<unsigned>(ctx.num_attributes());
  const std::size_t n = lat.partition.size();
  const BlockMask count = BlockMask{1} << n;
  lat.nodes.reserve(count);
  for (BlockMask mask = 0; mask < count; ++mask)
    lat.nodes.push_back(concept_for_mask(mask, lat.partition, lat.block_atoms,
                                         ctx.num_objects(), m));

  lat.hasse_edges.reserve(n * (count / 2));
  for (BlockMask mask = 0; mask < count; ++mask)
    for (std::size_t k = 0; k < n; ++k)
      if (!((mask >> k) & 1u))
        lat.hasse_edges.emplace_back(mask, mask | (BlockMask{1} << k));

  lat.constants = {CanonicalForm::all_but(m, lat.block_atoms),
                   CanonicalForm::from_ids(m, lat.block_atoms)};
  return lat;
}

const GeneralConcept& dagger(const GeneralConcept& c, const GclLattice& lat) {
  return lat.node(lat.full_mask() & ~c.block_set);
}

const GeneralConcept& meet(const GeneralConcept& a, const GeneralConcept& b,
                           const GclLattice& lat) {
  return lat.node(a.block_set & b.block_set);
}

const GeneralConcept& join(const GeneralConcept& a, const GeneralConcept& b,
                           const GclLattice& lat) {
  return lat.node(a.block_set | b.block_set);
}

bool leq(const GeneralConcept& a, const GeneralConcept& b) {
  return a.extent.is_subset_of(b.extent);
}

bool equivalent_class_membership(const AttrExpr& expr, const ObjectSet& x,
                                 const FormalContext& ctx) {
  return eval_contextual(expr, ctx) == x;
}

bool attribute_implies(std::size_t m, const CanonicalForm& cf) {
  if (m >= cf.m_count()) throw InvalidArgument("attribute index out of range");
  const auto& ids = cf.stored_ids();
  if (cf.complemented()) {
    // Every minterm outside cf must have attribute m negative.
    return std::none_of(ids.begin(), ids.end(),
                        [m](MintermId id) { return (id >> m) & 1u; });
  }
  const auto with_m = static_cast<std::size_t>(std::count_if(
      ids.begin(), ids.end(), [m](MintermId id) { return (id >> m) & 1u; }));
  return with_m == cf.universe() / 2;
}

bool implies_attribute(const CanonicalForm& cf, std::size_t m) {
  if (m >= cf.m_count()) throw InvalidArgument("attribute index out of range");
  const auto& ids = cf.stored_ids();
  if (!cf.complemented()) {
    return std::all_of(ids.begin(), ids.end(),
                       [m](MintermId id) { return (id >> m) & 1u; });
  }
  // cf = U \ holes; every id lacking m must be a hole.
  const auto holes_without_m = static_cast<std::size_t>(std::count_if(
      ids.begin(), ids.end(), [m](MintermId id) { return !((id >> m) & 1u); }));
  return holes_without_m == cf.universe() / 2;
}

}  // namespace gcl
