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

// The law registry. Each law is (id, description, applicability, checker);
// checkers read the lattice under test and recompute the other side of each
// identity from the raw context.

#include <algorithm>
#include <bit>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gcl/attr_expr.hpp"
#include "gcl/classical.hpp"
#include "gcl/error.hpp"
#include "gcl/irreducibles.hpp"
#include "gcl/oracle.hpp"
#include "mstar_laws.hpp"

namespace gcl {

namespace {

constexpr std::size_t kInstanceLimit = 256;
constexpr std::size_t kFullObjectSweep = 8;     // all subsets of G up to here
constexpr std::size_t kFullAttributeSweep = 8;  // all subsets of M up to here
constexpr std::size_t kRecursionBlocks = 12;
constexpr std::size_t kAtomSweepAttributes = 12;
constexpr std::size_t kOrderSweepAttributes = 3;
constexpr std::size_t kRandomExpressions = 64;

struct Env {
  const GclLattice& gcl;
  const FormalContext& ctx;
  Caps caps;
  std::vector<ObjectSet> object_sets;
  std::vector<AttributeSet> attribute_sets;
  std::vector<BlockMask> node_domain;  // for pairwise and expensive laws
  CanonicalForm z_empty;               // minterms no object row matches
  ClassicalLattice fcl, rsl;           // built directly from ctx
  std::optional<IrreducibleIndex> irr;

  std::string objs(const ObjectSet& x) const { return format_objects(x, ctx); }
  std::string attrs(const AttributeSet& y) const { return format_attributes(y, ctx); }
};

std::string show(const CanonicalForm& cf) {
  if (cf.count() > 16) return "<" + std::to_string(cf.count()) + " minterms>";
  std::string s = "{";
  for (auto id : cf.ids()) s += (s.size() > 1 ? "," : "") + std::to_string(id);
  return s + "}";
}

class Check {
 public:
  explicit Check(LawResult& r) : r_(r) {}

  /// Counts one instance. Returns false once any instance has failed.
  template <class Witness>
  bool operator()(bool ok, Witness&& witness) {
    ++r_.instances;
    if (!ok && r_.status != LawStatus::kFail) {
      r_.status = LawStatus::kFail;
      r_.detail = witness();
    }
    return r_.status != LawStatus::kFail;
  }
  bool ok() const { return r_.status != LawStatus::kFail; }

 private:
  LawResult& r_;
};

struct Law {
  std::string_view id;
  std::string_view description;
  std::string (*skip)(const Env&);  // empty string means applicable
  void (*run)(const Env&, Check&);
};

std::string always(const Env&) { return {}; }

std::string needs_irreducibles(const Env& e) {
  if (e.irr) return {};
  return "needs |M| <= " + std::to_string(e.caps.max_irreducible_attributes);
}

BlockMask block_bit(std::size_t k) { return BlockMask{1} << k; }

// ---------------------------------------------------------------- operators

void run_derivation_closure(const Env& e, Check& check) {
  const auto& c = e.ctx;
  for (const auto& x : e.object_sets) {
    const auto i = intent_of(x, c);
    if (!check(intent_of(extent_of(i, c), c) == i,
               [&] { return "X=" + e.objs(x) + ": X^III != X^I"; }))
      return;
    const auto b = box_of(x, c);
    if (!check(box_of(approx_diamond(b, c), c) == b,
               [&] { return "X=" + e.objs(x) + ": box-diamond-box != box"; }))
      return;
    const auto d = diamond_of(x, c);
    if (!check(diamond_of(approx_box(d, c), c) == d,
               [&] { return "X=" + e.objs(x) + ": diamond-box-diamond != diamond"; }))
      return;
  }
  for (const auto& y : e.attribute_sets) {
    const auto i = extent_of(y, c);
    if (!check(extent_of(intent_of(i, c), c) == i,
               [&] { return "Y=" + e.attrs(y) + ": Y^III != Y^I"; }))
      return;
    const auto d = approx_diamond(y, c);
    if (!check(approx_diamond(box_of(d, c), c) == d,
               [&] { return "Y=" + e.attrs(y) + ": diamond-box-diamond != diamond"; }))
      return;
    const auto b = approx_box(y, c);
    if (!check(approx_box(diamond_of(b, c), c) == b,
               [&] { return "Y=" + e.attrs(y) + ": box-diamond-box != box"; }))
      return;
  }
}

void run_derivation_order(const Env& e, Check& check) {
  const auto& c = e.ctx;
  for (const auto& x1 : e.object_sets) {
    for (const auto& x2 : e.object_sets) {
      if (!x1.is_subset_of(x2)) continue;
      const bool ok = intent_of(x2, c).is_subset_of(intent_of(x1, c)) &&
                      box_of(x1, c).is_subset_of(box_of(x2, c)) &&
                      diamond_of(x1, c).is_subset_of(diamond_of(x2, c));
      if (!check(ok, [&] {
            return "X1=" + e.objs(x1) + " X2=" + e.objs(x2) +
                   ": an operator breaks inclusion";
          }))
        return;
    }
  }
  for (const auto& y1 : e.attribute_sets) {
    for (const auto& y2 : e.attribute_sets) {
      if (!y1.is_subset_of(y2)) continue;
      const bool ok = extent_of(y2, c).is_subset_of(extent_of(y1, c)) &&
                      approx_box(y1, c).is_subset_of(approx_box(y2, c)) &&
                      approx_diamond(y1, c).is_subset_of(approx_diamond(y2, c));
      if (!check(ok, [&] {
            return "Y1=" + e.attrs(y1) + " Y2=" + e.attrs(y2) +
                   ": an operator breaks inclusion";
          }))
        return;
    }
  }
}

void run_modal_complement(const Env& e, Check& check) {
  const auto& c = e.ctx;
  for (const auto& x : e.object_sets)
    if (!check(box_of(x.complement(), c).complement() == diamond_of(x, c),
               [&] { return "X=" + e.objs(x) + ": (X^c box)^c != X diamond"; }))
      return;
  for (const auto& y : e.attribute_sets)
    if (!check(approx_box(y.complement(), c).complement() == approx_diamond(y, c),
               [&] { return "Y=" + e.attrs(y) + ": (Y^c box)^c != Y diamond"; }))
      return;
}

void run_rsl_duality(const Env& e, Check& check) {
  const auto& c = e.ctx;
  for (const auto& k : e.rsl.concepts) {
    const auto xc = k.extent.complement();
    const auto yc = k.intent.complement();
    if (!check(diamond_of(xc, c) == yc && approx_box(yc, c) == xc, [&] {
          return "(" + e.objs(k.extent) + "," + e.attrs(k.intent) +
                 "): complement pair is not a property-oriented concept";
        }))
      return;
  }
}

// -------------------------------------------------------- classical lattices

void run_classical_concepts(const Env& e, Check& check) {
  const auto& c = e.ctx;
  std::set<ObjectSet> fcl_ext, rsl_ext;
  for (const auto& k : e.fcl.concepts) {
    fcl_ext.insert(k.extent);
    const bool ok = intent_of(k.extent, c) == k.intent &&
                    extent_of(k.intent, c) == k.extent &&
                    eval_contextual(k.property, c) == k.extent;
    if (!check(ok, [&] { return "FCL concept " + e.objs(k.extent) + " invalid"; }))
      return;
  }
  for (const auto& k : e.rsl.concepts) {
    rsl_ext.insert(k.extent);
    const bool ok = box_of(k.extent, c) == k.intent &&
                    approx_diamond(k.intent, c) == k.extent &&
                    eval_contextual(k.property, c) == k.extent;
    if (!check(ok, [&] { return "RSL concept " + e.objs(k.extent) + " invalid"; }))
      return;
  }
  if (!check(fcl_ext.count(c.all_objects()) && rsl_ext.count(c.empty_objects()),
             [] { return std::string("G missing from FCL or empty set from RSL"); }))
    return;
  for (const auto& a : fcl_ext)
    for (const auto& b : fcl_ext)
      if (!check(fcl_ext.count(a & b),
                 [&] { return "FCL extents not closed: " + e.objs(a) + " & " + e.objs(b); }))
        return;
  for (const auto& a : rsl_ext)
    for (const auto& b : rsl_ext)
      if (!check(rsl_ext.count(a | b),
                 [&] { return "RSL extents not closed: " + e.objs(a) + " | " + e.objs(b); }))
        return;
  for (const auto* family : {&fcl_ext, &rsl_ext})
    for (const auto& x : *family)
      if (!check(e.gcl.partition.mask_of(x).has_value(),
                 [&] { return "classical extent " + e.objs(x) + " not in E_F"; }))
        return;
}

void run_common_columns(const Env& e, Check& check) {
  std::set<ObjectSet> fcl_ext, rsl_ext;
  for (const auto& k : e.fcl.concepts) fcl_ext.insert(k.extent);
  for (const auto& k : e.rsl.concepts) rsl_ext.insert(k.extent);
  for (std::size_t j = 0; j < e.ctx.num_attributes(); ++j) {
    const auto& col = e.ctx.column(j);
    if (!check(fcl_ext.count(col) && rsl_ext.count(col), [&] {
          return "column of " + e.ctx.attributes()[j] +
                 " is missing from the FCL or RSL extents";
        }))
      return;
  }
}

void run_classical_recovery(const Env& e, Check& check) {
  const auto fcl = recover_classical(e.gcl, LatticeKind::kFcl);
  if (!check(same_concepts(fcl, e.fcl), [] {
        return std::string("FCL recovered from the lattice differs from the direct build");
      }))
    return;
  const auto rsl = recover_classical(e.gcl, LatticeKind::kRsl);
  check(same_concepts(rsl, e.rsl), [] {
    return std::string("RSL recovered from the lattice differs from the direct build");
  });
}

void run_classical_intent_bounds(const Env& e, Check& check) {
  const auto& c = e.ctx;
  const std::size_t m = c.num_attributes();
  std::set<ObjectSet> extents;
  for (const auto& k : e.fcl.concepts) extents.insert(k.extent);
  for (const auto& k : e.rsl.concepts) extents.insert(k.extent);
  for (const auto& x : extents) {
    const auto& node = e.gcl.node_for(x);
    const auto box = box_of(x, c);
    const auto in = intent_of(x, c);
    bool ok = true;
    if (m <= kAtomSweepAttributes) {
      std::vector<AttrExpr> sum, prod;
      box.for_each([&](std::size_t j) { sum.push_back(AttrExpr::var(j)); });
      in.for_each([&](std::size_t j) { prod.push_back(AttrExpr::var(j)); });
      ok = to_canonical(AttrExpr::sum(sum), m, e.caps.max_attributes)
               .is_subset_of(node.grsp) &&
           node.gfcp.is_subset_of(
               to_canonical(AttrExpr::product(prod), m, e.caps.max_attributes));
    } else {
      box.for_each([&](std::size_t j) { ok = ok && attribute_implies(j, node.grsp); });
      in.for_each([&](std::size_t j) { ok = ok && implies_attribute(node.gfcp, j); });
    }
    if (!check(ok, [&] {
          return "X=" + e.objs(x) + ": classical intent is not bounded by grsp/gfcp";
        }))
      return;
  }
}

void run_classical_intent_pool(const Env& e, Check& check) {
  const auto& c = e.ctx;
  auto literal = [&](std::size_t j) { return LiteralSet::empty(c.num_attributes()).add(j, true); };
  std::size_t seen = 0;
  for (const auto& k : e.rsl.concepts) {
    if (++seen > kInstanceLimit) break;
    const auto pool = e.irr->intent_pool(k.extent, IrredMode::kConjunction);
    bool ok = true;
    k.intent.for_each([&](std::size_t j) {
      if (c.column(j) == c.all_objects()) return;
      ok = ok && std::find(pool.begin(), pool.end(), literal(j)) != pool.end();
    });
    if (!check(ok, [&] {
          return "RSL X=" + e.objs(k.extent) + ": an intent attribute is not in the grsp pool";
        }))
      return;
  }
  seen = 0;
  for (const auto& k : e.fcl.concepts) {
    if (++seen > kInstanceLimit) break;
    const auto pool = e.irr->intent_pool(k.extent, IrredMode::kDisjunction);
    bool ok = true;
    k.intent.for_each([&](std::size_t j) {
      if (c.column(j).none()) return;
      ok = ok && std::find(pool.begin(), pool.end(), literal(j)) != pool.end();
    });
    if (!check(ok, [&] {
          return "FCL X=" + e.objs(k.extent) + ": an intent attribute is not in the gfcp pool";
        }))
      return;
  }
}

// ----------------------------------------------------------------- lattice

void run_block_partition(const Env& e, Check& check) {
  const auto& c = e.ctx;
  const auto& part = e.gcl.partition;
  ObjectSet seen = c.empty_objects();
  std::set<AttributeSet> intents;
  for (std::size_t k = 0; k < part.size(); ++k) {
    const auto& b = part.blocks[k];
    bool ok = b.extent.any() && !b.extent.intersects(seen) &&
              intents.insert(b.intent).second;
    b.extent.for_each([&](std::size_t g) { ok = ok && c.row(g) == b.intent; });
    seen |= b.extent;
    if (!check(ok, [&] { return "block " + e.objs(b.extent) + " is malformed"; })) return;
  }
  const std::size_t bound =
      c.num_attributes() >= 63 ? c.num_objects()
                               : std::min<std::size_t>(c.num_objects(),
                                                       std::size_t{1} << c.num_attributes());
  check(seen == c.all_objects() && part.size() <= bound,
        [] { return std::string("blocks do not cover G or n_F is too large"); });
}

void run_atom_extents(const Env& e, Check& check) {
  const auto m = static_cast<unsigned>(e.ctx.num_attributes());
  std::set<ObjectSet> blocks;
  for (const auto& b : e.gcl.partition.blocks) blocks.insert(b.extent);
  for (std::uint64_t id = 0; id < (std::uint64_t{1} << m); ++id) {
    const auto x = eval_contextual(atom_expr(static_cast<MintermId>(id), m), e.ctx);
    if (!check(x.none() || blocks.count(x), [&] {
          return "atom " + std::to_string(id) + " has extent " + e.objs(x) +
                 ", neither empty nor a block";
        }))
      return;
  }
}

void run_extent_fixpoint(const Env& e, Check& check) {
  for (const auto& node : e.gcl.nodes) {
    const bool ok = eval_canonical(node.grsp, e.ctx) == node.extent &&
                    eval_canonical(node.gfcp, e.ctx) == node.extent &&
                    node.extent == e.gcl.partition.extent_of_mask(node.block_set,
                                                                  e.ctx.num_objects());
    if (!check(ok, [&] {
          return "X=" + e.objs(node.extent) + ": grsp " + show(node.grsp) +
                 " or gfcp " + show(node.gfcp) + " does not evaluate to X";
        }))
      return;
  }
}

void run_intent_separation(const Env& e, Check& check) {
  for (const auto& node : e.gcl.nodes) {
    const bool ok = node.grsp == node.gfcp.unite(e.z_empty) &&
                    node.gfcp.intersect(e.z_empty).is_empty();
    if (!check(ok, [&] {
          return "X=" + e.objs(node.extent) + ": grsp != gfcp + empty-extent minterms";
        }))
      return;
  }
}

void run_extent_family(const Env& e, Check& check) {
  const auto family = extent_family(e.ctx, e.caps);
  const std::set<ObjectSet> distinct(family.begin(), family.end());
  const std::size_t expected = std::size_t{1} << e.gcl.num_blocks();
  if (!check(family.size() == expected && distinct.size() == expected &&
                 e.gcl.nodes.size() == expected,
             [&] { return "|E_F| != 2^n_F = " + std::to_string(expected); }))
    return;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!check(e.gcl.nodes[i].extent == family[i],
               [&] { return "node " + std::to_string(i) + " extent differs from E_F"; }))
      return;
  for (auto a : e.node_domain) {
    const auto& xa = family[a];
    if (!check(distinct.count(xa.complement()),
               [&] { return "complement of " + e.objs(xa) + " not in E_F"; }))
      return;
    for (auto b : e.node_domain) {
      const auto& xb = family[b];
      if (!check(distinct.count(xa | xb) && distinct.count(xa & xb), [&] {
            return e.objs(xa) + " and " + e.objs(xb) + " escape E_F";
          }))
        return;
    }
  }
}

void run_dagger(const Env& e, Check& check) {
  for (const auto& node : e.gcl.nodes) {
    const auto& d = dagger(node, e.gcl);
    const bool ok = d.extent == node.extent.complement() &&
                    d.grsp == node.gfcp.complement() &&
                    d.gfcp == node.grsp.complement();
    if (!check(ok, [&] { return "X=" + e.objs(node.extent) + ": dagger node mismatch"; }))
      return;
  }
}

void run_recursion(const Env& e, Check& check) {
  const auto full = e.gcl.full_mask();
  for (BlockMask k = 0; k <= full; ++k) {
    const auto& node = e.gcl.node(k);
    if (std::popcount(k) >= 2) {
      const auto m = static_cast<unsigned>(e.ctx.num_attributes());
      auto acc = CanonicalForm::empty(m);
      for (BlockMask sub = (k - 1) & k; sub != k; sub = (sub - 1) & k) {
        acc = acc.unite(e.gcl.node(sub).grsp);
        if (sub == 0) break;
      }
      if (!check(acc == node.grsp, [&] {
            return "X=" + e.objs(node.extent) + ": grsp != union over sub-extents";
          }))
        return;
    }
    if (std::popcount(full & ~k) >= 2) {
      const auto m = static_cast<unsigned>(e.ctx.num_attributes());
      auto acc = CanonicalForm::full(m);
      const BlockMask rest = full & ~k;
      for (BlockMask add = rest; add != 0; add = (add - 1) & rest)
        acc = acc.intersect(e.gcl.node(k | add).gfcp);
      if (!check(acc == node.gfcp, [&] {
            return "X=" + e.objs(node.extent) + ": gfcp != meet over super-extents";
          }))
        return;
    }
  }
}

void run_decomposition(const Env& e, Check& check) {
  const auto full = e.gcl.full_mask();
  const auto m = static_cast<unsigned>(e.ctx.num_attributes());
  const std::size_t n = e.gcl.num_blocks();
  for (const auto& node : e.gcl.nodes) {
    const BlockMask k = node.block_set;
    if (k != 0) {
      auto acc = CanonicalForm::empty(m);
      for (std::size_t i = 0; i < n; ++i)
        if (k & block_bit(i)) acc = acc.unite(e.gcl.node(block_bit(i)).grsp);
      if (!check(acc == node.grsp, [&] {
            return "X=" + e.objs(node.extent) + ": grsp != union of block grsps";
          }))
        return;
    }
    if (k != full) {
      auto acc = CanonicalForm::full(m);
      for (std::size_t i = 0; i < n; ++i)
        if (!(k & block_bit(i)))
          acc = acc.intersect(e.gcl.node(full & ~block_bit(i)).gfcp);
      if (!check(acc == node.gfcp, [&] {
            return "X=" + e.objs(node.extent) +
                   ": gfcp != intersection of block-complement gfcps";
          }))
        return;
    }
  }
}

void run_single_minterm_blocks(const Env& e, Check& check) {
  const auto full = e.gcl.full_mask();
  const auto m = static_cast<unsigned>(e.ctx.num_attributes());
  for (std::size_t k = 0; k < e.gcl.num_blocks(); ++k) {
    const auto& node = e.gcl.node(block_bit(k));
    const auto& co = e.gcl.node(full & ~block_bit(k));
    bool ok = node.gfcp.count() == 1 && co.grsp.complement() == node.gfcp;
    if (ok) {
      const auto id = node.gfcp.ids().front();
      ok = eval_contextual(atom_expr(id, m), e.ctx) == node.extent;
    }
    if (!check(ok, [&] {
          return "block " + e.objs(node.extent) + ": gfcp " + show(node.gfcp) +
                 " is not its single minterm";
        }))
      return;
  }
}

void run_constants(const Env& e, Check& check) {
  const auto& k = e.gcl.constants;
  const auto& inf = e.gcl.inf();
  const auto& sup = e.gcl.sup();
  const auto fresh = contextual_constants(e.ctx, e.caps);
  check(k.zero_rho == e.z_empty && k.zero_rho == inf.grsp && k.one_eta == sup.gfcp &&
            k.one_eta == k.zero_rho.complement() && inf.gfcp.is_empty() &&
            sup.grsp.is_full() && fresh.zero_rho == k.zero_rho &&
            fresh.one_eta == k.one_eta,
        [&] {
          return "0_rho " + show(k.zero_rho) + " / 1_eta " + show(k.one_eta) +
                 " inconsistent with the extreme nodes";
        });
}

void run_block_constants(const Env& e, Check& check) {
  const auto& k = e.gcl.constants;
  const auto full = e.gcl.full_mask();
  const std::size_t m = e.ctx.num_attributes();
  for (std::size_t b = 0; b < e.gcl.num_blocks(); ++b) {
    const auto& node = e.gcl.node(block_bit(b));
    const auto& co = e.gcl.node(full & ~block_bit(b));
    std::vector<AttrExpr> terms;
    for (const auto& lits :
         e.irr->class_pool(node.extent, node.extent, IrredMode::kConjunction))
      terms.push_back(lits.as_conjunction());
    const auto rho0 = to_canonical(AttrExpr::sum(terms), m, e.caps.max_attributes);
    terms.clear();
    for (const auto& lits :
         e.irr->class_pool(co.extent, co.extent, IrredMode::kDisjunction))
      terms.push_back(lits.as_disjunction());
    const auto eta0 = to_canonical(AttrExpr::product(terms), m, e.caps.max_attributes);
    const bool ok = rho0.unite(k.zero_rho) == node.grsp &&
                    rho0.minus(e.z_empty) == node.grsp.minus(e.z_empty) &&
                    eta0.intersect(k.one_eta) == co.gfcp;
    if (!check(ok, [&] {
          return "block " + e.objs(node.extent) +
                 ": rho0 + 0_rho or eta0 * 1_eta does not rebuild the node intents";
        }))
      return;
  }
}

void run_order_agreement(const Env& e, Check& check) {
  for (auto a : e.node_domain) {
    for (auto b : e.node_domain) {
      const auto& na = e.gcl.node(a);
      const auto& nb = e.gcl.node(b);
      const bool by_extent = leq(na, nb);
      const bool ok = by_extent == na.grsp.is_subset_of(nb.grsp) &&
                      by_extent == na.gfcp.is_subset_of(nb.gfcp) &&
                      by_extent == ((a & ~b) == 0);
      if (!check(ok, [&] {
            return e.objs(na.extent) + " vs " + e.objs(nb.extent) +
                   ": extent, grsp and gfcp orders disagree";
          }))
        return;
    }
  }
}

void run_lattice_structure(const Env& e, Check& check) {
  const auto& g = e.gcl;
  const std::size_t n = g.num_blocks();
  const std::size_t edges = n == 0 ? 0 : n << (n - 1);
  bool ok = g.nodes.size() == (std::size_t{1} << n) && g.hasse_edges.size() == edges;
  for (const auto& [lo, hi] : g.hasse_edges)
    ok = ok && (lo & hi) == lo && std::popcount(lo ^ hi) == 1;
  if (!check(ok, [&] { return "node or Hasse edge count/shape is wrong"; })) return;

  const auto& sup = g.sup();
  const auto& inf = g.inf();
  if (!check(sup.extent == e.ctx.all_objects() && sup.grsp.is_full() &&
                 sup.gfcp == g.constants.one_eta && inf.extent.none() &&
                 inf.grsp == g.constants.zero_rho && inf.gfcp.is_empty() &&
                 &dagger(sup, g) == &inf,
             [] { return std::string("sup/inf are not (G,1,1_eta)/(empty,0_rho,0)"); }))
    return;

  for (auto a : e.node_domain) {
    const auto& na = g.node(a);
    if (!check(dagger(dagger(na, g), g) == na,
               [&] { return "X=" + e.objs(na.extent) + ": dagger is not an involution"; }))
      return;
    for (auto b : e.node_domain) {
      const auto& nb = g.node(b);
      const bool ok2 =
          leq(na, nb) == leq(dagger(nb, g), dagger(na, g)) &&
          meet(na, nb, g).extent == (na.extent & nb.extent) &&
          join(na, nb, g).extent == (na.extent | nb.extent);
      if (!check(ok2, [&] {
            return e.objs(na.extent) + ", " + e.objs(nb.extent) +
                   ": order reversal or meet/join fails";
          }))
        return;
    }
  }
}

// ----------------------------------------------------------- attribute algebra

void run_contextual_order(const Env& e, Check& check) {
  const auto m = static_cast<unsigned>(e.ctx.num_attributes());
  const std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << m);
  std::vector<ObjectSet> ext;
  ext.reserve(total);
  for (std::uint64_t f = 0; f < total; ++f)
    ext.push_back(eval_canonical(CanonicalForm::from_truth_table(m, {f}), e.ctx));
  for (std::uint64_t a = 0; a < total; ++a) {
    for (std::uint64_t b = 0; b < total; ++b) {
      const bool a_le_b = (a & ~b) == 0;
      bool ok = true;
      if (a == b) ok = ext[a] == ext[b];
      if (a_le_b) ok = ok && ext[a].is_subset_of(ext[b]);
      // A strictly smaller extent rules out a strictly greater function.
      if (ext[a].is_proper_subset_of(ext[b])) ok = ok && !((b & ~a) == 0 && a != b);
      if (!check(ok, [&] {
            return "truth tables " + std::to_string(a) + " and " + std::to_string(b) +
                   " violate the intrinsic/contextual order implications";
          }))
        return;
    }
  }
}

AttrExpr random_expr(std::uint64_t& state, std::size_t m, int depth) {
  auto next = [&] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  if (depth == 0 || next() % 3 == 0) {
    const auto r = next() % (m + 2);
    if (r == m) return AttrExpr::top();
    if (r == m + 1) return AttrExpr::bottom();
    return AttrExpr::var(r);
  }
  switch (next() % 3) {
    case 0: return AttrExpr::negate(random_expr(state, m, depth - 1));
    case 1: return AttrExpr::conj({random_expr(state, m, depth - 1),
                                   random_expr(state, m, depth - 1)});
    default: return AttrExpr::disj({random_expr(state, m, depth - 1),
                                    random_expr(state, m, depth - 1)});
  }
}

void run_canonical_soundness(const Env& e, Check& check) {
  const std::size_t m = e.ctx.num_attributes();
  const auto mu = static_cast<unsigned>(m);
  std::uint64_t state = 0x9e3779b97f4a7c15ull ^ (m << 8) ^ e.ctx.num_objects();
  for (std::size_t i = 0; i < kRandomExpressions; ++i) {
    const auto expr = random_expr(state, m, 4);
    const auto cf = to_canonical(expr, m, e.caps.max_attributes);
    const auto x = eval_contextual(expr, e.ctx);
    bool ok = eval_canonical(cf, e.ctx) == x &&
              to_canonical(AttrExpr::negate(expr), m, e.caps.max_attributes) ==
                  cf.complement() &&
              equivalent_class_membership(expr, x, e.ctx);
    if (ok && m <= kFullAttributeSweep) {
      ObjectSet acc = e.ctx.empty_objects();
      for (auto id : cf.ids()) acc |= eval_contextual(atom_expr(id, mu), e.ctx);
      ok = acc == x;
    }
    if (!check(ok, [&] {
          return "expression " + format_expr(expr, e.ctx.attributes()) +
                 " evaluates differently through its truth table";
        }))
      return;
  }
}

// ------------------------------------------------------------- irreducibles

void run_irreducible_literals(const Env& e, Check& check) {
  const auto& c = e.ctx;
  const auto all = c.all_objects();
  for (std::size_t j = 0; j < c.num_attributes(); ++j) {
    for (bool pos : {true, false}) {
      const auto lit = LiteralSet::empty(c.num_attributes()).add(j, pos);
      const auto x = pos ? c.column(j) : c.column(j).complement();
      bool ok = true;
      if (x != all) {
        const auto members = e.irr->conjunctions(x).members;
        ok = std::find(members.begin(), members.end(), lit) != members.end();
      }
      if (ok && x.any()) {
        const auto members = e.irr->disjunctions(x).members;
        ok = std::find(members.begin(), members.end(), lit) != members.end();
      }
      if (!check(ok, [&] {
            return "literal " + lit.to_string(c.attributes()) +
                   " missing from the classes of its own extent";
          }))
        return;
    }
  }
}

void run_negation_swap(const Env& e, Check& check) {
  const auto& c = e.ctx;
  auto contains = [](const IrredClass& k, const LiteralSet& s) {
    return std::find(k.members.begin(), k.members.end(), s) != k.members.end();
  };
  for (const auto& [x, members] : e.irr->disjunction_classes()) {
    const auto dual = e.irr->conjunctions(x.complement());
    for (const auto& psi : members)
      if (!check(contains(dual, psi.negated()), [&] {
            return psi.to_string(c.attributes()) + " in [" + e.objs(x) +
                   "^+] but its negation is not in the complement's conjunctions";
          }))
        return;
  }
  for (const auto& [x, members] : e.irr->conjunction_classes()) {
    const auto dual = e.irr->disjunctions(x.complement());
    for (const auto& psi : members)
      if (!check(contains(dual, psi.negated()), [&] {
            return psi.to_string(c.attributes()) + " in [" + e.objs(x) +
                   "^x] but its negation is not in the complement's disjunctions";
          }))
        return;
  }
}

void run_irreducible_membership(const Env& e, Check& check) {
  const auto& c = e.ctx;
  for (int pass = 0; pass < 2; ++pass) {
    const bool conj = pass == 0;
    const auto& classes = conj ? e.irr->conjunction_classes() : e.irr->disjunction_classes();
    for (const auto& [x, members] : classes) {
      for (const auto& psi : members) {
        auto eval = [&](const LiteralSet& s) {
          return eval_contextual(conj ? s.as_conjunction() : s.as_disjunction(), c);
        };
        bool ok = eval(psi) == x;
        psi.present.for_each([&](std::size_t j) {
          LiteralSet dropped{psi.present, psi.polarity};
          dropped.present.reset(j);
          dropped.polarity.reset(j);
          ok = ok && eval(dropped) != x;
        });
        if (!check(ok, [&] {
              return psi.to_string(c.attributes()) + " is not an irreducible " +
                     (conj ? "conjunction" : "disjunction") + " for " + e.objs(x);
            }))
          return;
      }
    }
  }
}

void run_simplified_intent(const Env& e, Check& check) {
  const std::size_t m = e.ctx.num_attributes();
  for (auto mask : e.node_domain) {
    const auto& node = e.gcl.node(mask);
    const auto rho = simplified_intent(*e.irr, node.extent, IntentMode::kGrspDnf);
    const auto eta = simplified_intent(*e.irr, node.extent, IntentMode::kGfcpCnf);
    const bool ok = to_canonical(rho, m, e.caps.max_attributes) == node.grsp &&
                    to_canonical(eta, m, e.caps.max_attributes) == node.gfcp &&
                    eval_contextual(rho, e.ctx) == node.extent &&
                    eval_contextual(eta, e.ctx) == node.extent;
    if (!check(ok, [&] {
          return "X=" + e.objs(node.extent) +
                 ": irreducible-pool intent differs from the canonical node intent";
        }))
      return;
  }
}

// ----------------------------------------------------------------- registry

const std::vector<Law>& registry() {
  static const std::vector<Law> laws = {
      {"derivation-closure",
       "applying a derivation or box/diamond operator three times equals applying it once",
       always, run_derivation_closure},
      {"derivation-order",
       "X1 <= X2 implies X2^I <= X1^I, X1^box <= X2^box and X1^diamond <= X2^diamond "
       "(and dually for attribute sets); the converse is not claimed",
       always, run_derivation_order},
      {"modal-complement", "complementing around box gives diamond on both sides",
       always, run_modal_complement},
      {"rsl-duality",
       "complementing an RSL concept gives a property-oriented concept", always,
       run_rsl_duality},
      {"classical-concepts",
       "FCL/RSL concepts are fixed points, their properties evaluate to the "
       "extent, extent families are closed and lie in E_F",
       always, run_classical_concepts},
      {"common-column-extents", "every column is both an FCL and an RSL extent", always,
       run_common_columns},
      {"block-partition",
       "blocks are disjoint, cover G, have distinct intents and n_F <= min(|G|, 2^|M|)",
       always, run_block_partition},
      {"atom-extents", "every minterm's extent is empty or exactly one block",
       [](const Env& e) {
         return e.ctx.num_attributes() <= kAtomSweepAttributes
                    ? std::string()
                    : "needs |M| <= " + std::to_string(kAtomSweepAttributes);
       },
       run_atom_extents},
      {"extent-fixpoint", "grsp(X) and gfcp(X) both evaluate to X", always,
       run_extent_fixpoint},
      {"intent-separation",
       "grsp(X) is gfcp(X) plus exactly the empty-extent minterms", always,
       run_intent_separation},
      {"extent-family",
       "E_F has 2^n_F members and is closed under union, intersection and complement",
       always, run_extent_family},
      {"dagger-conjugation",
       "the node at X^c has grsp = not gfcp(X) and gfcp = not grsp(X)", always,
       run_dagger},
      {"sub-extent-recursion",
       "for non-block X, grsp(X) is the union of grsp over proper sub-extents; "
       "dually for gfcp over proper super-extents",
       [](const Env& e) {
         return e.gcl.num_blocks() <= kRecursionBlocks
                    ? std::string()
                    : "needs n_F <= " + std::to_string(kRecursionBlocks);
       },
       run_recursion},
      {"block-decomposition",
       "grsp(X) is the union of its blocks' grsp; gfcp(X) the intersection of "
       "gfcp over the missing blocks' complements",
       always, run_decomposition},
      {"single-minterm-blocks",
       "gfcp of a block is one minterm and grsp of its complement misses only that minterm",
       always, run_single_minterm_blocks},
      {"contextual-constants",
       "0_rho = grsp(empty), 1_eta = gfcp(G), 1_eta = not 0_rho", always, run_constants},
      {"block-constant-decomposition",
       "rho(D_k) = rho0(D_k) + 0_rho and eta(D_k^c) = eta0(D_k^c) * 1_eta, with "
       "rho0/eta0 the block's own irreducible pool",
       needs_irreducibles, run_block_constants},
      {"order-agreement",
       "extent inclusion, grsp inclusion and gfcp inclusion agree on node pairs", always,
       run_order_agreement},
      {"lattice-structure",
       "2^n_F nodes, n_F*2^(n_F-1) cover edges, sup/inf values, dagger involution, "
       "order reversal and meet/join",
       always, run_lattice_structure},
      {"classical-recovery",
       "FCL and RSL read out of the lattice equal the directly built ones", always,
       run_classical_recovery},
      {"classical-intent-bounds",
       "sum of X^box lies below grsp(X) and gfcp(X) lies below product of X^I", always,
       run_classical_intent_bounds},
      {"classical-intent-pool",
       "classical intent attributes with a nontrivial column appear in the irreducible "
       "intent pools (non-strict containment; the pools need not be strictly larger)",
       needs_irreducibles, run_classical_intent_pool},
      {"contextual-order",
       "equal truth tables give equal extents, truth-table inclusion gives extent "
       "inclusion, and a strictly smaller extent excludes a strictly greater function",
       [](const Env& e) {
         return e.ctx.num_attributes() <= kOrderSweepAttributes
                    ? std::string()
                    : "needs |M| <= " + std::to_string(kOrderSweepAttributes);
       },
       run_contextual_order},
      {"canonical-soundness",
       "random expressions evaluate identically directly, through their truth "
       "table and through their minterms; negation complements the truth table",
       always, run_canonical_soundness},
      {"irreducible-literals",
       "each literal with a nontrivial extent is its own irreducible conjunction and "
       "disjunction",
       needs_irreducibles, run_irreducible_literals},
      {"irreducible-negation-swap",
       "psi is an irreducible disjunction for X iff its negation is an irreducible "
       "conjunction for X^c",
       needs_irreducibles, run_negation_swap},
      {"irreducible-membership",
       "every irreducible class member evaluates to its target and loses it when any "
       "literal is dropped",
       needs_irreducibles, run_irreducible_membership},
      {"simplified-intent",
       "intents assembled from irreducible pools equal the canonical grsp/gfcp",
       needs_irreducibles, run_simplified_intent},
  };
  return laws;
}

Env make_env(const GclLattice& gcl, const Caps& caps) {
  const FormalContext& ctx = *gcl.context;
  Env e{gcl, ctx, caps, {}, {}, {}, {}, build_fcl(ctx, caps), build_rsl(ctx, caps), {}};

  const std::size_t n = ctx.num_objects();
  if (n <= kFullObjectSweep) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      ObjectSet x(n);
      for (std::size_t g = 0; g < n; ++g)
        if ((bits >> g) & 1u) x.set(g);
      e.object_sets.push_back(std::move(x));
    }
  } else {
    for (std::size_t i = 0; i < gcl.nodes.size() && i < kInstanceLimit; ++i)
      e.object_sets.push_back(gcl.nodes[i].extent);
  }

  const std::size_t m = ctx.num_attributes();
  if (m <= kFullAttributeSweep) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      AttributeSet y(m);
      for (std::size_t j = 0; j < m; ++j)
        if ((bits >> j) & 1u) y.set(j);
      e.attribute_sets.push_back(std::move(y));
    }
  } else {
    e.attribute_sets.push_back(ctx.empty_attributes());
    e.attribute_sets.push_back(ctx.all_attributes());
    for (std::size_t j = 0; j < m; ++j) {
      AttributeSet y(m);
      y.set(j);
      e.attribute_sets.push_back(std::move(y));
    }
    for (const auto& b : gcl.partition.blocks) {
      if (e.attribute_sets.size() >= kInstanceLimit) break;
      e.attribute_sets.push_back(b.intent);
    }
  }

  for (BlockMask k = 0; k < gcl.nodes.size() && k < kInstanceLimit; ++k)
    e.node_domain.push_back(k);

  std::vector<MintermId> rows;
  for (std::size_t g = 0; g < n; ++g)
    rows.push_back(static_cast<MintermId>(ctx.row_code(g)));
  e.z_empty = CanonicalForm::all_but(static_cast<unsigned>(m), std::move(rows));

  if (m <= caps.max_irreducible_attributes) e.irr.emplace(ctx, caps);
  return e;
}

}  // namespace

OracleReport verify_laws(const FormalContext& ctx, const Caps& caps) {
  return verify_laws(build_gcl(ctx, caps), caps);
}

OracleReport verify_laws(const GclLattice& lattice, const Caps& caps) {
  if (!lattice.context) throw InvalidArgument("lattice has no context");
  const Env env = make_env(lattice, caps);
  OracleReport report;
  report.context_digest = context_digest(env.ctx);
  for (const auto& law : registry()) {
    LawResult r{std::string(law.id), std::string(law.description), LawStatus::kPass, 0, {}};
    if (auto reason = law.skip(env); !reason.empty()) {
      r.status = LawStatus::kSkipped;
      r.detail = std::move(reason);
    } else {
      Check check(r);
      try {
        law.run(env, check);
      } catch (const Error& ex) {
        // A corrupted lattice can make a lookup throw; that is a failure of
        // the law, not of the run.
        if (r.status != LawStatus::kFail) {
          r.status = LawStatus::kFail;
          r.detail = std::string("error: ") + ex.what();
        }
      }
    }
    report.laws.push_back(std::move(r));
  }
  return report;
}

std::vector<LawInfo> law_catalog() {
  std::vector<LawInfo> out;
  for (const auto& law : registry()) out.push_back({law.id, law.description});
  for (const auto& info : {detail::kMstarCount, detail::kMstarExtents,
                           detail::kMstarBounds, detail::kMstarPartition})
    out.push_back(info);
  return out;
}

}  // namespace gcl
