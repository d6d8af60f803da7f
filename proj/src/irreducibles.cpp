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

#include "gcl/irreducibles.hpp"

#include <algorithm>

#include "gcl/error.hpp"

namespace gcl {

LiteralSet& LiteralSet::add(std::size_t attribute, bool positive) {
  present.set(attribute);
  polarity.set(attribute, positive);
  return *this;
}

bool LiteralSet::is_subset_of(const LiteralSet& o) const {
  if (!present.is_subset_of(o.present)) return false;
  // Shared attributes must agree in polarity.
  return (polarity & present) == (o.polarity & present);
}

LiteralSet LiteralSet::negated() const {
  return {present, present - polarity};
}

AttrExpr LiteralSet::as_conjunction() const {
  std::vector<AttrExpr> lits;
  present.for_each(
      [&](std::size_t j) { lits.push_back(AttrExpr::literal(j, polarity.test(j))); });
  return AttrExpr::product(std::move(lits));
}

AttrExpr LiteralSet::as_disjunction() const {
  std::vector<AttrExpr> lits;
  present.for_each(
      [&](std::size_t j) { lits.push_back(AttrExpr::literal(j, polarity.test(j))); });
  return AttrExpr::sum(std::move(lits));
}

std::string LiteralSet::to_string(const std::vector<std::string>& names) const {
  std::string s = "{";
  bool first = true;
  present.for_each([&](std::size_t j) {
    if (!first) s += ',';
    if (!polarity.test(j)) s += '!';
    s += j < names.size() ? names[j] : "#" + std::to_string(j);
    first = false;
  });
  return s + "}";
}

bool LiteralSet::operator<(const LiteralSet& o) const {
  if (auto c = size() <=> o.size(); c != 0) return c < 0;
  if (auto c = present <=> o.present; c != 0) return c < 0;
  return (polarity <=> o.polarity) < 0;
}

namespace {

// Base-3 digit of attribute j: 0 absent, 1 positive, 2 negative.
std::size_t digit(std::size_t code, const std::vector<std::size_t>& pow3,
                  std::size_t j) {
  return (code / pow3[j]) % 3;
}

}  // namespace

IrreducibleIndex::IrreducibleIndex(const FormalContext& ctx, const Caps& caps)
    : ctx_(ctx), m_(ctx.num_attributes()) {
  if (m_ > caps.max_irreducible_attributes)
    throw CapExceeded("attribute count |M| for irreducibles", m_,
                      caps.max_irreducible_attributes);
  pow3_.resize(m_ + 1);
  pow3_[0] = 1;
  for (std::size_t j = 0; j < m_; ++j) pow3_[j + 1] = pow3_[j] * 3;
  const std::size_t total = pow3_[m_];

  conj_extent_.reserve(total);
  disj_extent_.reserve(total);
  conj_extent_.push_back(ctx.all_objects());
  disj_extent_.push_back(ctx.empty_objects());
  for (std::size_t code = 1; code < total; ++code) {
    std::size_t j = 0;
    while (digit(code, pow3_, j) == 0) ++j;
    const std::size_t d = digit(code, pow3_, j);
    const std::size_t parent = code - d * pow3_[j];
    const ObjectSet lit = d == 1 ? ctx.column(j) : ctx.column(j).complement();
    conj_extent_.push_back(conj_extent_[parent] & lit);
    disj_extent_.push_back(disj_extent_[parent] | lit);
  }

  conj_irred_.assign(total, 0);
  disj_irred_.assign(total, 0);
  for (std::size_t code = 0; code < total; ++code) {
    bool conj_ok = true, disj_ok = true;
    LiteralSet lits = LiteralSet::empty(m_);
    for (std::size_t j = 0; j < m_; ++j) {
      const std::size_t d = digit(code, pow3_, j);
      if (d == 0) continue;
      lits.add(j, d == 1);
      const std::size_t dropped = code - d * pow3_[j];
      if (conj_extent_[dropped] == conj_extent_[code]) conj_ok = false;
      if (disj_extent_[dropped] == disj_extent_[code]) disj_ok = false;
    }
    conj_irred_[code] = conj_ok;
    disj_irred_[code] = disj_ok;
    if (conj_ok) conj_classes_[conj_extent_[code]].push_back(lits);
    if (disj_ok) disj_classes_[disj_extent_[code]].push_back(lits);
  }
  for (auto* classes : {&conj_classes_, &disj_classes_})
    for (auto& [x, members] : *classes) std::sort(members.begin(), members.end());
}

IrredClass IrreducibleIndex::conjunctions(const ObjectSet& x) const {
  IrredClass c{x, IrredMode::kConjunction, {}};
  if (auto it = conj_classes_.find(x); it != conj_classes_.end())
    c.members = it->second;
  return c;
}

IrredClass IrreducibleIndex::disjunctions(const ObjectSet& x) const {
  IrredClass c{x, IrredMode::kDisjunction, {}};
  if (auto it = disj_classes_.find(x); it != disj_classes_.end())
    c.members = it->second;
  return c;
}

std::size_t IrreducibleIndex::code_of(const LiteralSet& s) const {
  std::size_t code = 0;
  s.present.for_each([&](std::size_t j) {
    code += (s.polarity.test(j) ? 1 : 2) * pow3_[j];
  });
  return code;
}

bool IrreducibleIndex::has_reducing_subset(std::size_t code,
                                           const ObjectSet& bound,
                                           IrredMode mode) const {
  std::vector<std::size_t> terms;  // digit * 3^j for each literal present
  for (std::size_t j = 0; j < m_; ++j)
    if (auto d = digit(code, pow3_, j)) terms.push_back(d * pow3_[j]);
  const std::size_t s = terms.size();
  // Proper, non-empty sub-literal-sets.
  for (std::uint64_t pick = 1; pick + 1 < (std::uint64_t{1} << s); ++pick) {
    std::size_t sub = 0;
    for (std::size_t i = 0; i < s; ++i)
      if ((pick >> i) & 1u) sub += terms[i];
    if (mode == IrredMode::kConjunction) {
      if (conj_irred_[sub] && conj_extent_[sub].is_subset_of(bound)) return true;
    } else {
      if (disj_irred_[sub] && bound.is_subset_of(disj_extent_[sub])) return true;
    }
  }
  return false;
}

std::vector<LiteralSet> IrreducibleIndex::class_pool(const ObjectSet& x0,
                                                     const ObjectSet& x,
                                                     IrredMode mode) const {
  const auto& classes =
      mode == IrredMode::kConjunction ? conj_classes_ : disj_classes_;
  std::vector<LiteralSet> pool;
  auto it = classes.find(x0);
  if (it == classes.end()) return pool;
  for (const auto& mu : it->second)
    if (!has_reducing_subset(code_of(mu), x, mode)) pool.push_back(mu);
  return pool;
}

std::vector<LiteralSet> IrreducibleIndex::intent_pool(const ObjectSet& x,
                                                      IrredMode mode) const {
  const bool conj = mode == IrredMode::kConjunction;
  std::vector<LiteralSet> pool;
  for (const auto& [x0, members] : conj ? conj_classes_ : disj_classes_) {
    if (conj ? !x0.is_subset_of(x) : !x.is_subset_of(x0)) continue;
    auto part = class_pool(x0, x, mode);
    pool.insert(pool.end(), part.begin(), part.end());
  }
  return pool;
}

IrredClass irreducible_conjunctions(const ObjectSet& x, const FormalContext& ctx,
                                    const Caps& caps) {
  return IrreducibleIndex(ctx, caps).conjunctions(x);
}

IrredClass irreducible_disjunctions(const ObjectSet& x, const FormalContext& ctx,
                                    const Caps& caps) {
  return IrreducibleIndex(ctx, caps).disjunctions(x);
}

IrredClass quotient_class(const IrredClass& c0, const IrredClass& ci) {
  if (c0.mode != ci.mode)
    throw InvalidArgument("quotient of classes with different modes");
  IrredClass out{c0.target, c0.mode, {}};
  for (const auto& mu : c0.members) {
    const bool factors = std::any_of(
        ci.members.begin(), ci.members.end(), [&](const LiteralSet& nu) {
          return nu.size() > 0 && nu.size() < mu.size() && nu.is_subset_of(mu);
        });
    if (!factors) out.members.push_back(mu);
  }
  return out;
}

AttrExpr simplified_intent(const IrreducibleIndex& index, const ObjectSet& x,
                           IntentMode mode) {
  if (!blocks(index.context()).mask_of(x))
    throw InvalidArgument("extent is not a union of blocks");
  std::vector<AttrExpr> terms;
  if (mode == IntentMode::kGrspDnf) {
    for (const auto& lits : index.intent_pool(x, IrredMode::kConjunction))
      terms.push_back(lits.as_conjunction());
    return AttrExpr::sum(std::move(terms));
  }
  for (const auto& lits : index.intent_pool(x, IrredMode::kDisjunction))
    terms.push_back(lits.as_disjunction());
  return AttrExpr::product(std::move(terms));
}

AttrExpr simplified_intent(const ObjectSet& x, const FormalContext& ctx,
                           IntentMode mode, const Caps& caps) {
  return simplified_intent(IrreducibleIndex(ctx, caps), x, mode);
}

}  // namespace gcl
