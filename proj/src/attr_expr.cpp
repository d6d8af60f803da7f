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

#include "gcl/attr_expr.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

#include "gcl/error.hpp"

namespace gcl {

struct AttrExpr::Node {
  Kind kind = Kind::kTop;
  std::size_t var = 0;
  std::vector<AttrExpr> children;
  std::size_t size = 1;
  std::size_t min_attributes = 0;
};

std::shared_ptr<const AttrExpr::Node> AttrExpr::make_node(
    Kind kind, std::size_t var, std::vector<AttrExpr> children) {
  auto n = std::make_shared<AttrExpr::Node>();
  n->kind = kind;
  n->var = var;
  n->size = 1;
  n->min_attributes = kind == AttrExpr::Kind::kVar ? var + 1 : 0;
  for (const auto& c : children) {
    n->size += c.size();
    n->min_attributes = std::max(n->min_attributes, c.min_attribute_count());
  }
  n->children = std::move(children);
  return n;
}

AttrExpr::AttrExpr() : AttrExpr(top()) {}

AttrExpr AttrExpr::top() {
  static const auto node = make_node(Kind::kTop, 0, {});
  return AttrExpr(node);
}

AttrExpr AttrExpr::bottom() {
  static const auto node = make_node(Kind::kBottom, 0, {});
  return AttrExpr(node);
}

AttrExpr AttrExpr::var(std::size_t attribute) {
  return AttrExpr(make_node(Kind::kVar, attribute, {}));
}

AttrExpr AttrExpr::negate(AttrExpr child) {
  return AttrExpr(make_node(Kind::kNot, 0, {std::move(child)}));
}

AttrExpr AttrExpr::conj(std::vector<AttrExpr> children) {
  if (children.empty()) throw InvalidArgument("conjunction needs a child");
  return AttrExpr(make_node(Kind::kAnd, 0, std::move(children)));
}

AttrExpr AttrExpr::disj(std::vector<AttrExpr> children) {
  if (children.empty()) throw InvalidArgument("disjunction needs a child");
  return AttrExpr(make_node(Kind::kOr, 0, std::move(children)));
}

AttrExpr AttrExpr::product(std::vector<AttrExpr> children) {
  if (children.empty()) return top();
  if (children.size() == 1) return std::move(children.front());
  return conj(std::move(children));
}

AttrExpr AttrExpr::sum(std::vector<AttrExpr> children) {
  if (children.empty()) return bottom();
  if (children.size() == 1) return std::move(children.front());
  return disj(std::move(children));
}

AttrExpr AttrExpr::literal(std::size_t attribute, bool positive) {
  return positive ? var(attribute) : negate(var(attribute));
}

AttrExpr::Kind AttrExpr::kind() const { return node_->kind; }
std::size_t AttrExpr::var_index() const { return node_->var; }
std::span<const AttrExpr> AttrExpr::children() const { return node_->children; }
std::size_t AttrExpr::size() const { return node_->size; }
std::size_t AttrExpr::min_attribute_count() const {
  return node_->min_attributes;
}

bool AttrExpr::operator==(const AttrExpr& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind() || size() != o.size()) return false;
  if (kind() == Kind::kVar) return var_index() == o.var_index();
  auto a = children(), b = o.children();
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

ObjectSet eval_contextual(const AttrExpr& expr, const FormalContext& ctx) {
  switch (expr.kind()) {
    case AttrExpr::Kind::kTop:
      return ctx.all_objects();
    case AttrExpr::Kind::kBottom:
      return ctx.empty_objects();
    case AttrExpr::Kind::kVar:
      if (expr.var_index() >= ctx.num_attributes())
        throw InvalidArgument("attribute index " +
                              std::to_string(expr.var_index()) +
                              " out of range");
      return ctx.column(expr.var_index());
    case AttrExpr::Kind::kNot:
      return eval_contextual(expr.children()[0], ctx).complement();
    case AttrExpr::Kind::kAnd: {
      ObjectSet x = ctx.all_objects();
      for (const auto& c : expr.children()) x &= eval_contextual(c, ctx);
      return x;
    }
    case AttrExpr::Kind::kOr: {
      ObjectSet x = ctx.empty_objects();
      for (const auto& c : expr.children()) x |= eval_contextual(c, ctx);
      return x;
    }
  }
  return ctx.empty_objects();
}

namespace {

using Table = std::vector<std::uint64_t>;

struct TableShape {
  std::size_t words;
  std::uint64_t last_mask;
};

TableShape shape_for(std::size_t m) {
  const std::uint64_t universe = std::uint64_t{1} << m;
  if (universe >= 64) return {static_cast<std::size_t>(universe / 64), ~0ull};
  return {1, (std::uint64_t{1} << universe) - 1};
}

Table var_table(std::size_t j, std::size_t m) {
  static constexpr std::uint64_t kPatterns[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  const auto shape = shape_for(m);
  Table t(shape.words);
  for (std::size_t w = 0; w < shape.words; ++w) {
    if (j < 6) {
      t[w] = kPatterns[j];
    } else {
      t[w] = ((w >> (j - 6)) & 1u) ? ~0ull : 0ull;
    }
  }
  t.back() &= shape.last_mask;
  return t;
}

Table eval_table(const AttrExpr& e, std::size_t m) {
  const auto shape = shape_for(m);
  switch (e.kind()) {
    case AttrExpr::Kind::kTop: {
      Table t(shape.words, ~0ull);
      t.back() &= shape.last_mask;
      return t;
    }
    case AttrExpr::Kind::kBottom:
      return Table(shape.words, 0);
    case AttrExpr::Kind::kVar:
      if (e.var_index() >= m)
        throw InvalidArgument("attribute index " + std::to_string(e.var_index()) +
                              " out of range for " + std::to_string(m) +
                              " attributes");
      return var_table(e.var_index(), m);
    case AttrExpr::Kind::kNot: {
      Table t = eval_table(e.children()[0], m);
      for (auto& w : t) w = ~w;
      t.back() &= shape.last_mask;
      return t;
    }
    case AttrExpr::Kind::kAnd: {
      Table t(shape.words, ~0ull);
      for (const auto& c : e.children()) {
        Table u = eval_table(c, m);
        for (std::size_t i = 0; i < t.size(); ++i) t[i] &= u[i];
      }
      t.back() &= shape.last_mask;
      return t;
    }
    case AttrExpr::Kind::kOr: {
      Table t(shape.words, 0);
      for (const auto& c : e.children()) {
        Table u = eval_table(c, m);
        for (std::size_t i = 0; i < t.size(); ++i) t[i] |= u[i];
      }
      return t;
    }
  }
  return Table(shape.words, 0);
}

void check_cap(std::size_t m_count, std::size_t cap) {
  const std::size_t limit = std::min(cap, kMaxAttributesLimit);
  if (m_count > limit)
    throw CapExceeded("attribute count |M|", m_count, limit);
}

}  // namespace

CanonicalForm to_canonical(const AttrExpr& expr, std::size_t m_count,
                           std::size_t cap) {
  check_cap(m_count, cap);
  return CanonicalForm::from_truth_table(static_cast<unsigned>(m_count),
                                         eval_table(expr, m_count));
}

ObjectSet eval_canonical(const CanonicalForm& cf, const FormalContext& ctx) {
  if (cf.m_count() != ctx.num_attributes())
    throw InvalidArgument("canonical form width does not match the context");
  ObjectSet x = ctx.empty_objects();
  for (std::size_t g = 0; g < ctx.num_objects(); ++g)
    if (cf.contains(static_cast<MintermId>(ctx.row_code(g)))) x.set(g);
  return x;
}

AttrExpr atom_expr(MintermId id, unsigned m_count) {
  std::vector<AttrExpr> lits;
  for (unsigned j = 0; j < m_count; ++j)
    lits.push_back(AttrExpr::literal(j, (id >> j) & 1u));
  return AttrExpr::product(std::move(lits));
}

AttrExpr coatom_expr(MintermId id, unsigned m_count) {
  std::vector<AttrExpr> lits;
  for (unsigned j = 0; j < m_count; ++j)
    lits.push_back(AttrExpr::literal(j, !((id >> j) & 1u)));
  return AttrExpr::sum(std::move(lits));
}

AttrExpr canonical_to_expr(const CanonicalForm& cf, NormalForm mode) {
  const unsigned m = cf.m_count();
  std::vector<AttrExpr> terms;
  if (mode == NormalForm::kDnf) {
    for (MintermId id : cf.ids()) terms.push_back(atom_expr(id, m));
    return AttrExpr::sum(std::move(terms));
  }
  for (MintermId id : cf.complement().ids()) terms.push_back(coatom_expr(id, m));
  return AttrExpr::product(std::move(terms));
}

AtomsCoatoms atoms_coatoms(std::size_t m_count, std::size_t cap) {
  check_cap(m_count, cap);
  AtomsCoatoms out;
  const std::uint64_t n = std::uint64_t{1} << m_count;
  out.atoms.reserve(n);
  out.coatoms.reserve(n);
  for (std::uint64_t id = 0; id < n; ++id) {
    AttributeSet polarity(m_count);
    for (std::size_t j = 0; j < m_count; ++j)
      if ((id >> j) & 1u) polarity.set(j);
    out.atoms.push_back(std::move(polarity));
    out.coatoms.push_back(
        coatom_expr(static_cast<MintermId>(id), static_cast<unsigned>(m_count)));
  }
  return out;
}

Comparison intrinsic_compare(const AttrExpr& a, const AttrExpr& b,
                             std::size_t m_count, std::size_t cap) {
  const auto ca = to_canonical(a, m_count, cap);
  const auto cb = to_canonical(b, m_count, cap);
  const bool le = ca.is_subset_of(cb), ge = cb.is_subset_of(ca);
  if (le && ge) return Comparison::kEqual;
  if (le) return Comparison::kLess;
  if (ge) return Comparison::kGreater;
  return Comparison::kIncomparable;
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::kEqual:
      return "equal";
    case Comparison::kLess:
      return "less";
    case Comparison::kGreater:
      return "greater";
    case Comparison::kIncomparable:
      return "incomparable";
  }
  return "?";
}

namespace {

bool is_operator_char(char c) {
  return c == '&' || c == '|' || c == '!' || c == '(' || c == ')' || c == '"';
}

class ExprParser {
 public:
  ExprParser(std::string_view text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  AttrExpr parse() {
    AttrExpr e = parse_or();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  AttrExpr parse_or() {
    std::vector<AttrExpr> terms{parse_and()};
    while (accept('|')) terms.push_back(parse_and());
    return terms.size() == 1 ? terms.front() : AttrExpr::disj(std::move(terms));
  }

  AttrExpr parse_and() {
    std::vector<AttrExpr> factors{parse_not()};
    while (accept('&')) factors.push_back(parse_not());
    return factors.size() == 1 ? factors.front()
                               : AttrExpr::conj(std::move(factors));
  }

  AttrExpr parse_not() {
    if (accept('!')) return AttrExpr::negate(parse_not());
    if (accept('(')) {
      AttrExpr e = parse_or();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    return parse_atom();
  }

  AttrExpr parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    std::string name;
    bool quoted = false;
    if (text_[pos_] == '"') {
      quoted = true;
      const std::size_t close = text_.find('"', pos_ + 1);
      if (close == std::string_view::npos) fail("unterminated quoted name");
      name = std::string(text_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
    } else {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && !is_operator_char(text_[pos_]) &&
             !std::isspace(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ == start) fail("expected an attribute name");
      name = std::string(text_.substr(start, pos_ - start));
    }
    if (!quoted && name == "1") return AttrExpr::top();
    if (!quoted && name == "0") return AttrExpr::bottom();
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return AttrExpr::var(i);
    fail("unknown attribute '" + name + "'");
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression: " + msg + " at column " +
                         std::to_string(pos_ + 1),
                     0);
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

std::string quote_name(const std::string& name) {
  bool plain = !name.empty() && name != "0" && name != "1";
  for (char c : name)
    if (is_operator_char(c) || std::isspace(static_cast<unsigned char>(c)))
      plain = false;
  return plain ? name : "\"" + name + "\"";
}

enum class Prec { kOr = 0, kAnd = 1, kUnary = 2 };

void format_into(const AttrExpr& e, const std::vector<std::string>& names,
                 Prec context, std::string& out) {
  switch (e.kind()) {
    case AttrExpr::Kind::kTop:
      out += '1';
      return;
    case AttrExpr::Kind::kBottom:
      out += '0';
      return;
    case AttrExpr::Kind::kVar:
      out += e.var_index() < names.size()
                 ? quote_name(names[e.var_index()])
                 : "#" + std::to_string(e.var_index());
      return;
    case AttrExpr::Kind::kNot:
      out += '!';
      format_into(e.children()[0], names, Prec::kUnary, out);
      return;
    case AttrExpr::Kind::kAnd:
    case AttrExpr::Kind::kOr: {
      const bool is_and = e.kind() == AttrExpr::Kind::kAnd;
      const Prec mine = is_and ? Prec::kAnd : Prec::kOr;
      const bool parens = context > mine;
      if (parens) out += '(';
      bool first = true;
      for (const auto& c : e.children()) {
        if (!first) out += is_and ? " & " : " | ";
        // Nested same-kind nodes are parenthesised so the tree shape
        // survives a round trip through the parser.
        format_into(c, names, static_cast<Prec>(static_cast<int>(mine) + 1),
                    out);
        first = false;
      }
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

AttrExpr parse_expr(std::string_view text,
                    const std::vector<std::string>& attribute_names) {
  return ExprParser(text, attribute_names).parse();
}

std::string format_expr(const AttrExpr& expr,
                        const std::vector<std::string>& attribute_names) {
  std::string out;
  format_into(expr, attribute_names, Prec::kOr, out);
  return out;
}

}  // namespace gcl
