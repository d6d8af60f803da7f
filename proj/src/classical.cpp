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

#include "gcl/classical.hpp"

#include <algorithm>
#include <unordered_set>

#include "gcl/error.hpp"

namespace gcl {

const char* to_string(LatticeKind kind) {
  return kind == LatticeKind::kFcl ? "fcl" : "rsl";
}

namespace {

using ExtentSet = std::unordered_set<ObjectSet>;

// Depth-first over include/exclude decisions; one set operation per node.
void sweep(const FormalContext& ctx, bool intersect, std::size_t j,
           const ObjectSet& acc, ExtentSet& out) {
  if (j == ctx.num_attributes()) {
    out.insert(acc);
    return;
  }
  sweep(ctx, intersect, j + 1, acc, out);
  sweep(ctx, intersect, j + 1,
        intersect ? (acc & ctx.column(j)) : (acc | ctx.column(j)), out);
}

ExtentSet closure(const FormalContext& ctx, bool intersect) {
  ExtentSet family{intersect ? ctx.all_objects() : ctx.empty_objects()};
  for (std::size_t j = 0; j < ctx.num_attributes(); ++j) {
    std::vector<ObjectSet> added;
    for (const auto& x : family)
      added.push_back(intersect ? (x & ctx.column(j)) : (x | ctx.column(j)));
    family.insert(added.begin(), added.end());
  }
  return family;
}

ClassicalLattice build(const FormalContext& ctx, const Caps& caps,
                       LatticeKind kind) {
  const bool fcl = kind == LatticeKind::kFcl;
  ExtentSet extents;
  if (ctx.num_attributes() <= caps.max_attributes) {
    sweep(ctx, fcl, 0, fcl ? ctx.all_objects() : ctx.empty_objects(), extents);
  } else {
    extents = closure(ctx, fcl);
  }
  ClassicalLattice lat;
  lat.kind = kind;
  for (const auto& x : extents) {
    AttributeSet y = fcl ? intent_of(x, ctx) : box_of(x, ctx);
    lat.concepts.push_back({x, y, AttrExpr()});
  }
  finalize(lat);
  return lat;
}

AttrExpr property_of(const AttributeSet& y, LatticeKind kind) {
  std::vector<AttrExpr> vars;
  y.for_each([&](std::size_t j) { vars.push_back(AttrExpr::var(j)); });
  return kind == LatticeKind::kFcl ? AttrExpr::product(std::move(vars))
                                   : AttrExpr::sum(std::move(vars));
}

}  // namespace

void finalize(ClassicalLattice& lat) {
  auto& cs = lat.concepts;
  std::sort(cs.begin(), cs.end(),
            [](const ClassicalConcept& a, const ClassicalConcept& b) {
              return a.extent < b.extent;
            });
  for (auto& c : cs) c.property = property_of(c.intent, lat.kind);

  // Ascending cardinality means any element strictly between i and j is
  // visited before j, so j covers i iff no cover found so far lies below j.
  lat.hasse_edges.clear();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::vector<std::size_t> covers;
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (!cs[i].extent.is_proper_subset_of(cs[j].extent)) continue;
      const bool blocked = std::any_of(covers.begin(), covers.end(), [&](auto c) {
        return cs[c].extent.is_subset_of(cs[j].extent);
      });
      if (!blocked) covers.push_back(j);
    }
    for (auto j : covers) lat.hasse_edges.emplace_back(i, j);
  }
  lat.inf = 0;
  lat.sup = cs.empty() ? 0 : cs.size() - 1;
}

ClassicalLattice build_fcl(const FormalContext& ctx, const Caps& caps) {
  return build(ctx, caps, LatticeKind::kFcl);
}

ClassicalLattice build_rsl(const FormalContext& ctx, const Caps& caps) {
  return build(ctx, caps, LatticeKind::kRsl);
}

ClassicalLattice recover_classical(const GclLattice& gcl, LatticeKind kind) {
  const FormalContext& ctx = *gcl.context;
  const std::size_t m = ctx.num_attributes();
  const bool fcl = kind == LatticeKind::kFcl;

  // Column node of attribute j: the blocks whose minterm has j positive.
  std::vector<BlockMask> column(m, 0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < gcl.block_atoms.size(); ++k)
      if ((gcl.block_atoms[k] >> j) & 1u) column[j] |= BlockMask{1} << k;

  ClassicalLattice lat;
  lat.kind = kind;
  for (const auto& node : gcl.nodes) {
    AttributeSet y(m);
    BlockMask combined = fcl ? gcl.full_mask() : 0;
    for (std::size_t j = 0; j < m; ++j) {
      const bool selected = fcl ? implies_attribute(node.gfcp, j)
                                : attribute_implies(j, node.grsp);
      if (!selected) continue;
      y.set(j);
      combined = fcl ? (combined & column[j]) : (combined | column[j]);
    }
    if (combined == node.block_set)
      lat.concepts.push_back({node.extent, std::move(y), AttrExpr()});
  }
  finalize(lat);
  return lat;
}

bool same_concepts(const ClassicalLattice& a, const ClassicalLattice& b) {
  if (a.kind != b.kind || a.concepts.size() != b.concepts.size()) return false;
  for (std::size_t i = 0; i < a.concepts.size(); ++i) {
    if (a.concepts[i].extent != b.concepts[i].extent ||
        a.concepts[i].intent != b.concepts[i].intent)
      return false;
  }
  return true;
}

}  // namespace gcl
