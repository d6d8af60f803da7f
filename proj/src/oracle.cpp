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

#include "gcl/oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "gcl/attr_expr.hpp"
#include "gcl/error.hpp"
#include "mstar_laws.hpp"

namespace gcl {

const char* to_string(LawStatus s) {
  switch (s) {
    case LawStatus::kPass: return "pass";
    case LawStatus::kFail: return "fail";
    case LawStatus::kSkipped: return "skipped";
  }
  return "?";
}

bool OracleReport::passed() const {
  for (const auto& l : laws)
    if (l.status == LawStatus::kFail) return false;
  return true;
}

const LawResult* OracleReport::find(std::string_view id) const {
  for (const auto& l : laws)
    if (l.id == id) return &l;
  return nullptr;
}

OracleReport& OracleReport::merge(const OracleReport& other) {
  if (!context_digest.empty() && !other.context_digest.empty() &&
      context_digest != other.context_digest)
    throw InvalidArgument("cannot merge reports for different contexts");
  if (context_digest.empty()) context_digest = other.context_digest;
  total_functions += other.total_functions;
  classes.insert(classes.end(), other.classes.begin(), other.classes.end());
  laws.insert(laws.end(), other.laws.begin(), other.laws.end());
  return *this;
}

std::string context_digest(const FormalContext& ctx) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : write_cxt(ctx)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

FormalContext random_context(std::uint64_t seed, std::size_t n_objects,
                             std::size_t n_attributes, double density) {
  if (!(density >= 0.0 && density <= 1.0))
    throw InvalidArgument("density must lie in [0, 1]");
  std::uint64_t state = seed;
  std::vector<std::vector<bool>> rows(n_objects, std::vector<bool>(n_attributes));
  for (auto& row : rows) {
    for (std::size_t j = 0; j < n_attributes; ++j) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      row[j] = static_cast<double>(state >> 11) * 0x1.0p-53 < density;
    }
  }
  std::vector<std::string> objects, attributes;
  for (std::size_t i = 0; i < n_objects; ++i)
    objects.push_back("g" + std::to_string(i + 1));
  for (std::size_t j = 0; j < n_attributes; ++j)
    attributes.push_back("m" + std::to_string(j + 1));
  return FormalContext(std::move(objects), std::move(attributes), rows);
}

namespace {

struct Accumulator {
  std::uint64_t size = 0;
  std::uint64_t and_all = ~std::uint64_t{0};
  std::uint64_t or_all = 0;
};

// Truth tables here have at most 2^4 = 16 rows, so one word each.
CanonicalForm table_form(unsigned m, std::uint64_t f) {
  return CanonicalForm::from_truth_table(m, {f});
}

class LawSink {
 public:
  explicit LawSink(std::vector<LawResult>& out) : out_(out) {}
  LawResult& open(const LawInfo& info) {
    out_.push_back({std::string(info.id), std::string(info.description),
                    LawStatus::kPass, 0, {}});
    return out_.back();
  }

 private:
  std::vector<LawResult>& out_;
};

void fail(LawResult& r, std::string detail) {
  if (r.status == LawStatus::kFail) return;
  r.status = LawStatus::kFail;
  r.detail = std::move(detail);
}

}  // namespace

OracleReport enumerate_mstar(const FormalContext& ctx, const Caps& caps) {
  const std::size_t m = ctx.num_attributes();
  const std::size_t n = ctx.num_objects();
  if (m > caps.max_oracle_attributes)
    throw CapExceeded("attribute count |M| for the exhaustive sweep", m,
                      caps.max_oracle_attributes);
  if (n > caps.max_oracle_objects)
    throw CapExceeded("object count |G| for the exhaustive sweep", n,
                      caps.max_oracle_objects);

  const auto mu = static_cast<unsigned>(m);
  const std::uint64_t rows = std::uint64_t{1} << m;         // truth-table rows
  const std::uint64_t total = std::uint64_t{1} << rows;     // functions

  // Row codes straight from the incidence matrix.
  std::vector<std::uint64_t> code(n, 0);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t j = 0; j < m; ++j)
      if (ctx.incident(g, j)) code[g] |= std::uint64_t{1} << j;

  std::map<std::uint32_t, Accumulator> groups;
  for (std::uint64_t f = 0; f < total; ++f) {
    std::uint32_t extent = 0;
    for (std::size_t g = 0; g < n; ++g)
      if ((f >> code[g]) & 1u) extent |= std::uint32_t{1} << g;
    auto& acc = groups[extent];
    ++acc.size;
    acc.and_all &= f;
    acc.or_all |= f;
  }

  auto to_objects = [&](std::uint32_t bits) {
    ObjectSet x(n);
    for (std::size_t g = 0; g < n; ++g)
      if ((bits >> g) & 1u) x.set(g);
    return x;
  };
  auto extent_of_table = [&](std::uint64_t f) {
    std::uint32_t e = 0;
    for (std::size_t g = 0; g < n; ++g)
      if ((f >> code[g]) & 1u) e |= std::uint32_t{1} << g;
    return e;
  };

  OracleReport report;
  report.context_digest = context_digest(ctx);
  report.total_functions = total;
  for (const auto& [bits, acc] : groups)
    report.classes.push_back({to_objects(bits), acc.size, table_form(mu, acc.and_all),
                              table_form(mu, acc.or_all)});

  LawSink sink(report.laws);
  auto show = [&](const ObjectSet& x) { return format_objects(x, ctx); };

  {
    auto& r = sink.open(detail::kMstarCount);
    std::set<std::vector<MintermId>> distinct;
    for (std::uint64_t f = 0; f < total; ++f) {
      auto cf = table_form(mu, f);
      if (cf.count() != static_cast<std::uint64_t>(std::popcount(f)))
        fail(r, "truth table " + std::to_string(f) + " lost members");
      distinct.insert(cf.ids());
    }
    std::uint64_t sum = 0;
    for (const auto& c : report.classes) sum += c.size;
    r.instances = total;
    if (distinct.size() != total)
      fail(r, "distinct forms " + std::to_string(distinct.size()) + " != " +
                  std::to_string(total));
    if (sum != total)
      fail(r, "class sizes sum to " + std::to_string(sum) + " != " +
                  std::to_string(total));
    const auto ac = atoms_coatoms(m, caps.max_attributes);
    if (ac.atoms.size() != rows)
      fail(r, "atom count " + std::to_string(ac.atoms.size()) + " != " +
                  std::to_string(rows));
    for (std::size_t k = 0; k < ac.atoms.size(); ++k) {
      const auto id = static_cast<MintermId>(k);
      const auto atom = to_canonical(atom_expr(id, mu), m, caps.max_attributes);
      const auto co = to_canonical(ac.coatoms[k], m, caps.max_attributes);
      if (atom != CanonicalForm::from_ids(mu, {id}) || co != atom.complement())
        fail(r, "atom/coatom " + std::to_string(k) + " mismatch");
    }
  }

  const GclLattice lat = build_gcl(ctx, caps);
  {
    auto& r = sink.open(detail::kMstarExtents);
    const auto family = extent_family(ctx, caps);
    std::set<ObjectSet> want(family.begin(), family.end());
    std::set<ObjectSet> got;
    for (const auto& c : report.classes) got.insert(c.extent);
    r.instances = want.size() + got.size();
    for (const auto& x : got)
      if (!want.count(x)) fail(r, "realised extent " + show(x) + " is not in E_F");
    for (const auto& x : want)
      if (!got.count(x)) fail(r, "E_F member " + show(x) + " is never realised");
  }
  {
    auto& r = sink.open(detail::kMstarBounds);
    for (const auto& [bits, acc] : groups) {
      ++r.instances;
      const ObjectSet x = to_objects(bits);
      if (extent_of_table(acc.and_all) != bits || extent_of_table(acc.or_all) != bits) {
        fail(r, "X=" + show(x) + ": class bound lies outside the class");
        continue;
      }
      auto mask = lat.partition.mask_of(x);
      if (!mask) {
        fail(r, "X=" + show(x) + " is not a lattice extent");
        continue;
      }
      const auto& node = lat.node(*mask);
      if (node.gfcp != table_form(mu, acc.and_all))
        fail(r, "X=" + show(x) + ": class minimum differs from gfcp");
      if (node.grsp != table_form(mu, acc.or_all))
        fail(r, "X=" + show(x) + ": class maximum differs from grsp");
    }
  }
  {
    auto& r = sink.open(detail::kMstarPartition);
    std::set<std::uint32_t> seen;
    for (const auto& [bits, acc] : groups)
      if (!seen.insert(bits).second) fail(r, "duplicate class " + show(to_objects(bits)));
    for (std::uint64_t f = 0; f < total; ++f) {
      ++r.instances;
      if (eval_canonical(table_form(mu, f), ctx) != to_objects(extent_of_table(f))) {
        fail(r, "truth table " + std::to_string(f) + " evaluates inconsistently");
        break;
      }
    }
  }
  return report;
}

OracleReport verify_all(const FormalContext& ctx, const Caps& caps) {
  OracleReport report = verify_laws(ctx, caps);
  if (ctx.num_attributes() <= caps.max_oracle_attributes &&
      ctx.num_objects() <= caps.max_oracle_objects)
    report.merge(enumerate_mstar(ctx, caps));
  return report;
}

}  // namespace gcl
