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

// Irreducible literal conjunctions/disjunctions and the intent expressions
// assembled from them.

#ifndef GCL_IRREDUCIBLES_HPP_
#define GCL_IRREDUCIBLES_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gcl/attr_expr.hpp"
#include "gcl/caps.hpp"
#include "gcl/context.hpp"

namespace gcl {

/// A consistent set of literals: attribute j appears at most once, positive
/// iff `polarity` has bit j.
struct LiteralSet {
  AttributeSet present;
  AttributeSet polarity;  // subset of `present`

  static LiteralSet empty(std::size_t m_count) {
    return {AttributeSet(m_count), AttributeSet(m_count)};
  }

  std::size_t size() const { return present.count(); }
  LiteralSet& add(std::size_t attribute, bool positive);

  /// Literal-wise inclusion.
  bool is_subset_of(const LiteralSet& o) const;
  /// Every literal flipped.
  LiteralSet negated() const;

  AttrExpr as_conjunction() const;
  AttrExpr as_disjunction() const;

  /// "{a,!b}"
  std::string to_string(const std::vector<std::string>& names) const;

  bool operator==(const LiteralSet& o) const = default;
  /// Size first, then present/polarity bit patterns.
  bool operator<(const LiteralSet& o) const;
};

enum class IrredMode { kConjunction, kDisjunction };

/// All irreducible literal sets of one mode whose contextual extent is
/// `target`, sorted.
struct IrredClass {
  ObjectSet target;
  IrredMode mode = IrredMode::kConjunction;
  std::vector<LiteralSet> members;
};

/// Exhaustive table over the 3^|M| consistent literal sets of a context:
/// conjunction/disjunction extents and irreducibility flags, grouped by
/// extent. Built once, then queried per X.
class IrreducibleIndex {
 public:
  /// Throws CapExceeded if |M| > caps.max_irreducible_attributes.
  explicit IrreducibleIndex(const FormalContext& ctx, const Caps& caps = {});

  const FormalContext& context() const { return ctx_; }

  IrredClass conjunctions(const ObjectSet& x) const;
  IrredClass disjunctions(const ObjectSet& x) const;

  /// Non-empty classes keyed by extent.
  const std::map<ObjectSet, std::vector<LiteralSet>>& conjunction_classes() const {
    return conj_classes_;
  }
  const std::map<ObjectSet, std::vector<LiteralSet>>& disjunction_classes() const {
    return disj_classes_;
  }

  /// Members of [X0^×] for X0 ⊆ X that survive every quotient by
  /// [Xi^×], X0 ⊂ Xi ⊆ X (conjunction mode), or the dual over X0 ⊇ X with
  /// disjunction classes.
  std::vector<LiteralSet> intent_pool(const ObjectSet& x, IrredMode mode) const;

  /// The part of intent_pool(x, mode) contributed by the class of x0 alone.
  std::vector<LiteralSet> class_pool(const ObjectSet& x0, const ObjectSet& x,
                                     IrredMode mode) const;

 private:
  std::size_t code_of(const LiteralSet& s) const;
  bool has_reducing_subset(std::size_t code, const ObjectSet& bound,
                           IrredMode mode) const;

  FormalContext ctx_;
  std::size_t m_ = 0;
  std::vector<std::size_t> pow3_;
  std::vector<ObjectSet> conj_extent_, disj_extent_;
  std::vector<std::uint8_t> conj_irred_, disj_irred_;
  std::map<ObjectSet, std::vector<LiteralSet>> conj_classes_, disj_classes_;
};

IrredClass irreducible_conjunctions(const ObjectSet& x, const FormalContext& ctx,
                                    const Caps& caps = {});
IrredClass irreducible_disjunctions(const ObjectSet& x, const FormalContext& ctx,
                                    const Caps& caps = {});

/// Quotient of classes: the members of c0 that do not factor through a
/// member of ci. A member μ factors when some non-empty ν ∈ ci is a proper
/// subset of μ (μ = ν·rest, resp. ν+rest). Throws on mode mismatch.
IrredClass quotient_class(const IrredClass& c0, const IrredClass& ci);

enum class IntentMode { kGrspDnf, kGfcpCnf };

/// Grsp as a DNF over the grsp intent pool, or Gfcp as a CNF over the gfcp
/// pool. Throws InvalidArgument if X is not a union of blocks.
AttrExpr simplified_intent(const IrreducibleIndex& index, const ObjectSet& x,
                           IntentMode mode);
AttrExpr simplified_intent(const ObjectSet& x, const FormalContext& ctx,
                           IntentMode mode, const Caps& caps = {});

}  // namespace gcl

#endif  // GCL_IRREDUCIBLES_HPP_
