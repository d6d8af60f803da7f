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

#include "gcl/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "gcl/attr_expr.hpp"
#include "gcl/classical.hpp"
#include "gcl/context.hpp"
#include "gcl/error.hpp"
#include "gcl/export.hpp"
#include "gcl/gcl_lattice.hpp"
#include "gcl/irreducibles.hpp"
#include "gcl/oracle.hpp"

namespace gcl::cli {
namespace {

// Raised for bad input files or flag values found after parsing.
struct InputError : Error {
  using Error::Error;
};

struct Options {
  std::string input;
  std::string input_format = "auto";
  std::string lattice = "gcl";
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 1;
  std::size_t n_objects = 5;
  std::size_t n_attributes = 3;
  double density = 0.5;
  std::string query;
  std::string extent;
  bool has_extent = false;
  bool irreducibles = false;
  Caps caps;
};

void env_cap(const char* name, std::size_t& field) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return;
  std::size_t pos = 0;
  unsigned long long parsed = 0;
  try {
    parsed = std::stoull(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || v[pos] != '\0' || std::string_view(v).front() == '-')
    throw InputError(std::string(name) + " must be a non-negative integer, got '" +
                     v + "'");
  field = static_cast<std::size_t>(parsed);
}

FormalContext load_context(const Options& o) {
  std::ifstream in(o.input, std::ios::binary);
  if (!in) throw InputError("cannot open input file '" + o.input + "'");
  std::ostringstream text;
  text << in.rdbuf();
  if (o.input_format == "cxt") return parse_context(text.str(), ContextFormat::kCxt);
  if (o.input_format == "csv") return parse_context(text.str(), ContextFormat::kCsv);
  return parse_context_auto(text.str());
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw InputError("cannot write output file '" + o.out_path + "'");
  f << text;
}

std::string literal_list(const std::vector<LiteralSet>& sets, IrredMode mode,
                         const FormalContext& ctx) {
  if (sets.empty()) return "(none)";
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += "  ";
    const AttrExpr e = mode == IrredMode::kConjunction ? sets[i].as_conjunction()
                                                       : sets[i].as_disjunction();
    out += format_expr(e, ctx.attributes());
  }
  return out;
}

int cmd_build(const Options& o, std::ostream& out) {
  const FormalContext ctx = load_context(o);
  const ExportFormat fmt = parse_export_format(o.format);
  if (o.lattice == "gcl") {
    emit(o, export_lattice(build_gcl(ctx, o.caps), fmt, o.caps), out);
  } else {
    const auto lat = o.lattice == "fcl" ? build_fcl(ctx, o.caps) : build_rsl(ctx, o.caps);
    emit(o, export_lattice(lat, ctx, fmt), out);
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const FormalContext ctx = load_context(o);
  const OracleReport report = verify_all(ctx, o.caps);
  emit(o, export_report(report, ctx, parse_export_format(o.format)), out);
  return report.passed() ? kOk : kLawFailure;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const FormalContext ctx = load_context(o);
  const GclLattice gcl = build_gcl(ctx, o.caps);
  emit(o, compare_table(gcl, build_fcl(ctx, o.caps), build_rsl(ctx, o.caps)), out);
  return kOk;
}

int cmd_random(const Options& o, std::ostream& out) {
  emit(o, write_cxt(random_context(o.seed, o.n_objects, o.n_attributes, o.density)),
       out);
  return kOk;
}

int cmd_inspect(const Options& o, std::ostream& out) {
  const FormalContext ctx = load_context(o);
  ObjectSet x;
  std::ostringstream os;
  if (o.has_extent) {
    x = parse_object_list(o.extent, ctx);
  } else {
    const AttrExpr e = parse_expr(o.query, ctx.attributes());
    x = eval_contextual(e, ctx);
    os << "query: " << format_expr(e, ctx.attributes()) << "\n";
  }
  os << "extent: " << format_objects(x, ctx) << "\n";

  const auto mask = blocks(ctx).mask_of(x);
  if (!mask) {
    os << "node: none (not a union of blocks)\n";
  } else {
    const GeneralConcept c = general_concept(x, ctx, o.caps);
    std::unique_ptr<IrreducibleIndex> index;
    if (ctx.num_attributes() <= o.caps.max_irreducible_attributes)
      index = std::make_unique<IrreducibleIndex>(ctx, o.caps);
    os << "node: block_set " << *mask << "\n"
       << "  grsp " << pretty_form(c.grsp, ctx, index.get(), &x, IntentMode::kGrspDnf)
       << "\n"
       << "  gfcp " << pretty_form(c.gfcp, ctx, index.get(), &x, IntentMode::kGfcpCnf)
       << "\n";
    if (o.query.empty() == false) {
      const AttrExpr e = parse_expr(o.query, ctx.attributes());
      os << "  in class: "
         << (equivalent_class_membership(e, x, ctx) ? "yes" : "no") << "\n";
    }
  }

  if (o.irreducibles) {
    if (ctx.num_attributes() > o.caps.max_irreducible_attributes) {
      os << "irreducibles: skipped, |M| = " << ctx.num_attributes() << " exceeds cap "
         << o.caps.max_irreducible_attributes << "\n";
    } else {
      const IrreducibleIndex index(ctx, o.caps);
      const IrredClass conj = index.conjunctions(x);
      const IrredClass disj = index.disjunctions(x);
      std::vector<LiteralSet> both;
      std::set_intersection(conj.members.begin(), conj.members.end(),
                            disj.members.begin(), disj.members.end(),
                            std::back_inserter(both));
      os << "irreducible conjunctions: "
         << literal_list(conj.members, IrredMode::kConjunction, ctx) << "\n"
         << "irreducible disjunctions: "
         << literal_list(disj.members, IrredMode::kDisjunction, ctx) << "\n"
         << "in both: " << literal_list(both, IrredMode::kConjunction, ctx) << "\n";
    }
  }
  emit(o, os.str(), out);
  return kOk;
}

void add_caps(CLI::App& app, Caps& caps) {
  app.add_option("--max-nf", caps.max_blocks, "Largest block count n_F");
  app.add_option("--max-m", caps.max_attributes, "Largest |M| for canonical forms");
  app.add_option("--max-irreducible-m", caps.max_irreducible_attributes,
                 "Largest |M| for irreducible classes");
  app.add_option("--max-oracle-m", caps.max_oracle_attributes,
                 "Largest |M| for the exhaustive sweep");
  app.add_option("--max-oracle-g", caps.max_oracle_objects,
                 "Largest |G| for the exhaustive sweep");
}

void add_input(CLI::App& sub, Options& o) {
  add_caps(sub, o.caps);
  sub.add_option("input", o.input, "Context file (cxt or csv)")->required();
  sub.add_option("--input-format", o.input_format, "auto, cxt or csv")
      ->check(CLI::IsMember({"auto", "cxt", "csv"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    env_cap("GCL_MAX_NF", o.caps.max_blocks);
    env_cap("GCL_MAX_M", o.caps.max_attributes);
  } catch (const InputError& e) {
    err << "gcl: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App app{"Concept lattices over generalised attributes", "gcl"};
  app.require_subcommand(1, 1);
  add_caps(app, o.caps);

  auto* build = app.add_subcommand("build", "Build a lattice and export it");
  add_input(*build, o);
  build->add_option("--lattice", o.lattice, "gcl, fcl or rsl")
      ->check(CLI::IsMember({"gcl", "fcl", "rsl"}));
  build->add_option("--format", o.format, "json, dot or text")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  build->add_option("--out", o.out_path, "Output file");

  auto* verify = app.add_subcommand("verify", "Run the law suite and oracle");
  add_input(*verify, o);
  verify->add_option("--format", o.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", o.out_path, "Output file");

  auto* compare = app.add_subcommand("compare", "Tabulate FCL/RSL/general extents");
  add_input(*compare, o);
  compare->add_option("--out", o.out_path, "Output file");

  auto* random = app.add_subcommand("random", "Emit a random context in cxt format");
  random->add_option("--seed", o.seed, "Generator seed");
  random->add_option("--objects", o.n_objects, "Object count");
  random->add_option("--attributes", o.n_attributes, "Attribute count");
  random->add_option("--density", o.density, "Incidence probability")
      ->check(CLI::Range(0.0, 1.0));
  random->add_option("--out", o.out_path, "Output file");

  auto* inspect = app.add_subcommand("inspect", "Inspect one extent");
  add_input(*inspect, o);
  auto* query = inspect->add_option("--query", o.query, "Attribute expression");
  auto* extent = inspect->add_option("--extent", o.extent, "Object list, e.g. g1,g3");
  query->excludes(extent);
  inspect->add_flag("--irreducibles", o.irreducibles, "List irreducible classes");
  inspect->add_option("--out", o.out_path, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (inspect->parsed() && query->count() == 0 && extent->count() == 0)
      throw CLI::RequiredError("one of --query or --extent");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  o.has_extent = extent->count() > 0;

  try {
    if (build->parsed()) return cmd_build(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
    if (random->parsed()) return cmd_random(o, out);
    return cmd_inspect(o, out);
  } catch (const CapExceeded& e) {
    err << "gcl: " << e.what() << "\n";
    return kCap;
  } catch (const Error& e) {
    err << "gcl: " << e.what() << "\n";
    return kInput;
  }
}

}  // namespace gcl::cli
