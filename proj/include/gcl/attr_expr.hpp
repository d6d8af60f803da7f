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

// Generalised attributes: Boolean expressions over the attribute set, their
// contextual extents, and their truth-table (minterm set) identities.

#ifndef GCL_ATTR_EXPR_HPP_
#define GCL_ATTR_EXPR_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcl/canonical_form.hpp"
#include "gcl/caps.hpp"
#include "gcl/context.hpp"

namespace gcl {

/// Immutable expression tree. Copies share structure.
class AttrExpr {
 public:
  enum class Kind { kTop, kBottom, kVar, kNot, kAnd, kOr };

  /// Defaults to Top.
  AttrExpr();

  static AttrExpr top();
  static AttrExpr bottom();
  static AttrExpr var(std::size_t attribute);
  static AttrExpr negate(AttrExpr child);
  /// Both throw InvalidArgument on an empty child list.
  static AttrExpr conj(std::vector<AttrExpr> children);
  static AttrExpr disj(std::vector<AttrExpr> children);

  /// Conjunction/disjunction that collapse to Top/Bottom when empty and to
  /// the child itself when singular.
  static AttrExpr product(std::vector<AttrExpr> children);
  static AttrExpr sum(std::vector<AttrExpr> children);

  /// Literal: `positive` ? m : !m.
  static AttrExpr literal(std::size_t attribute, bool positive);

  Kind kind() const;
  std::size_t var_index() const;  // kVar only
  std::span<const AttrExpr> children() const;

  /// Number of tree nodes.
  std::size_t size() const;
  /// Largest Var index + 1 (0 if none).
  std::size_t min_attribute_count() const;

  bool operator==(const AttrExpr& o) const;

 private:
  struct Node;
  static std::shared_ptr<const Node> make_node(Kind kind, std::size_t var,
                                               std::vector<AttrExpr> children);
  explicit AttrExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// μ^R: substitute columns for attributes, complements for negation,
/// ∩/∪ for conjunction/disjunction. Top ↦ G, Bottom ↦ ∅.
/// Throws InvalidArgument for a Var index outside the context.
ObjectSet eval_contextual(const AttrExpr& expr, const FormalContext& ctx);

/// Truth table of `expr` over `m_count` attributes.
/// Throws CapExceeded if m_count > cap, InvalidArgument if a Var is out of
/// range.
CanonicalForm to_canonical(const AttrExpr& expr, std::size_t m_count,
                           std::size_t cap = Caps{}.max_attributes);

/// Contextual extent computed from a truth table: the objects whose row
/// (read as a minterm id) is a member.
ObjectSet eval_canonical(const CanonicalForm& cf, const FormalContext& ctx);

enum class NormalForm { kDnf, kCnf };

/// Minterm DNF (Bottom if empty) or maxterm CNF (Top if full).
AttrExpr canonical_to_expr(const CanonicalForm& cf, NormalForm mode);

/// The conjunction of literals for minterm `id`; Top when m_count is 0.
AttrExpr atom_expr(MintermId id, unsigned m_count);
/// The disjunction of the opposite literals; the negation of atom `id`.
/// Bottom when m_count is 0.
AttrExpr coatom_expr(MintermId id, unsigned m_count);

struct AtomsCoatoms {
  /// Polarity bit vectors, ascending id.
  std::vector<AttributeSet> atoms;
  /// coatoms[k] is the negation of atoms[k].
  std::vector<AttrExpr> coatoms;
};
AtomsCoatoms atoms_coatoms(std::size_t m_count,
                           std::size_t cap = Caps{}.max_attributes);

enum class Comparison { kEqual, kLess, kGreater, kIncomparable };

/// Compares by inclusion of truth tables (unconstrained Venn diagram).
Comparison intrinsic_compare(const AttrExpr& a, const AttrExpr& b,
                             std::size_t m_count,
                             std::size_t cap = Caps{}.max_attributes);

const char* to_string(Comparison c);

/// Infix syntax: attribute names, `!`, `&`, `|`, parentheses, `1`/`0` for
/// Top/Bottom. Precedence ! > & > |. Names containing operator characters or
/// spaces, or named "1"/"0", must be double-quoted.
AttrExpr parse_expr(std::string_view text,
                    const std::vector<std::string>& attribute_names);

/// Renders in the same syntax parse_expr accepts.
std::string format_expr(const AttrExpr& expr,
                        const std::vector<std::string>& attribute_names);

}  // namespace gcl

#endif  // GCL_ATTR_EXPR_HPP_
