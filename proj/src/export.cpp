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

#include "gcl/export.hpp"

#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

#include "gcl/attr_expr.hpp"
#include "gcl/error.hpp"

namespace gcl {

using nlohmann::json;

ExportFormat parse_export_format(std::string_view name) {
  if (name == "json") return ExportFormat::kJson;
  if (name == "dot") return ExportFormat::kDot;
  if (name == "text") return ExportFormat::kText;
  throw InvalidArgument("unknown export format '" + std::string(name) + "'");
}

std::string pretty_form(const CanonicalForm& cf, const FormalContext& ctx,
                        const IrreducibleIndex* index, const ObjectSet* x,
                        IntentMode mode) {
  const std::uint64_t on = cf.count();
  AttrExpr best = canonical_to_expr(
      cf, on <= cf.universe() - on ? NormalForm::kDnf : NormalForm::kCnf);
  if (index != nullptr && x != nullptr && blocks(ctx).mask_of(*x)) {
    AttrExpr simple = simplified_intent(*index, *x, mode);
    if (simple.size() < best.size()) best = std::move(simple);
  }
  return format_expr(best, ctx.attributes());
}

namespace {

template <typename Set>
json names(const Set& s, const std::vector<std::string>& universe) {
  json out = json::array();
  s.for_each([&](std::size_t i) { out.push_back(universe[i]); });
  return out;
}

json ids(const CanonicalForm& cf) { return json(cf.ids()); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string ids_text(const CanonicalForm& cf) {
  std::string out = "{";
  bool first = true;
  for (MintermId id : cf.ids()) {
    if (!first) out += ",";
    out += std::to_string(id);
    first = false;
  }
  return out + "}";
}

struct GclPretty {
  std::vector<std::string> grsp, gfcp;
  std::string zero_rho, one_eta;
};

GclPretty pretty_all(const GclLattice& lat, const Caps& caps) {
  const FormalContext& ctx = *lat.context;
  std::unique_ptr<IrreducibleIndex> index;
  if (ctx.num_attributes() <= caps.max_irreducible_attributes)
    index = std::make_unique<IrreducibleIndex>(ctx, caps);
  GclPretty p;
  for (const auto& n : lat.nodes) {
    p.grsp.push_back(pretty_form(n.grsp, ctx, index.get(), &n.extent,
                                 IntentMode::kGrspDnf));
    p.gfcp.push_back(pretty_form(n.gfcp, ctx, index.get(), &n.extent,
                                 IntentMode::kGfcpCnf));
  }
  p.zero_rho = pretty_form(lat.constants.zero_rho, ctx);
  p.one_eta = pretty_form(lat.constants.one_eta, ctx);
  return p;
}

json edges_json(const std::vector<HasseEdge>& edges) {
  json out = json::array();
  for (const auto& [lo, hi] : edges) out.push_back({lo, hi});
  return out;
}

std::string dot_graph(std::string_view name, const std::vector<std::string>& labels,
                      const std::vector<HasseEdge>& edges) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    os << "  n" << i << " [label=\"" << dot_escape(labels[i]) << "\"];\n";
  for (const auto& [lo, hi] : edges) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string export_lattice(const GclLattice& lat, ExportFormat format,
                           const Caps& caps) {
  const FormalContext& ctx = *lat.context;
  const GclPretty p = pretty_all(lat, caps);

  if (format == ExportFormat::kJson) {
    json j;
    j["kind"] = "gcl";
    j["objects"] = ctx.objects();
    j["attributes"] = ctx.attributes();
    j["blocks"] = json::array();
    for (const auto& b : lat.partition.blocks)
      j["blocks"].push_back({{"extent", names(b.extent, ctx.objects())},
                             {"intent", names(b.intent, ctx.attributes())}});
    j["nodes"] = json::array();
    for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
      const auto& n = lat.nodes[i];
      j["nodes"].push_back({{"block_set", n.block_set},
                            {"extent", names(n.extent, ctx.objects())},
                            {"grsp_minterms", ids(n.grsp)},
                            {"grsp_pretty", p.grsp[i]},
                            {"gfcp_minterms", ids(n.gfcp)},
                            {"gfcp_pretty", p.gfcp[i]}});
    }
    j["edges"] = edges_json(lat.hasse_edges);
    j["constants"] = {{"zero_rho", ids(lat.constants.zero_rho)},
                      {"one_eta", ids(lat.constants.one_eta)}};
    j["inf"] = 0;
    j["sup"] = lat.full_mask();
    return dump(j);
  }

  if (format == ExportFormat::kDot) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < lat.nodes.size(); ++i)
      labels.push_back(format_objects(lat.nodes[i].extent, ctx) + " | " + p.gfcp[i]);
    return dot_graph("gcl", labels, lat.hasse_edges);
  }

  std::ostringstream os;
  os << "gcl: " << ctx.num_objects() << " objects, " << ctx.num_attributes()
     << " attributes, " << lat.num_blocks() << " blocks, " << lat.nodes.size()
     << " nodes, " << lat.hasse_edges.size() << " edges\n";
  os << "blocks:\n";
  for (std::size_t k = 0; k < lat.partition.size(); ++k) {
    const auto& b = lat.partition.blocks[k];
    os << "  B" << k << " " << format_objects(b.extent, ctx) << " minterm "
       << lat.block_atoms[k] << " intent " << format_attributes(b.intent, ctx)
       << "\n";
  }
  os << "nodes:\n";
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    const auto& n = lat.nodes[i];
    os << "  [" << i << "] " << format_objects(n.extent, ctx) << "\n"
       << "    grsp " << p.grsp[i] << "  " << ids_text(n.grsp) << "\n"
       << "    gfcp " << p.gfcp[i] << "  " << ids_text(n.gfcp) << "\n";
  }
  os << "edges:\n";
  for (const auto& [lo, hi] : lat.hasse_edges) os << "  " << lo << " -> " << hi << "\n";
  os << "constants:\n"
     << "  zero_rho " << p.zero_rho << "  " << ids_text(lat.constants.zero_rho) << "\n"
     << "  one_eta " << p.one_eta << "  " << ids_text(lat.constants.one_eta) << "\n";
  return os.str();
}

std::string export_lattice(const ClassicalLattice& lat, const FormalContext& ctx,
                           ExportFormat format) {
  const char* kind = to_string(lat.kind);
  std::vector<std::string> property;
  for (const auto& c : lat.concepts)
    property.push_back(format_expr(c.property, ctx.attributes()));

  if (format == ExportFormat::kJson) {
    json j;
    j["kind"] = kind;
    j["objects"] = ctx.objects();
    j["attributes"] = ctx.attributes();
    j["nodes"] = json::array();
    for (std::size_t i = 0; i < lat.concepts.size(); ++i) {
      const auto& c = lat.concepts[i];
      j["nodes"].push_back({{"extent", names(c.extent, ctx.objects())},
                            {"intent", names(c.intent, ctx.attributes())},
                            {"property", property[i]}});
    }
    j["edges"] = edges_json(lat.hasse_edges);
    j["inf"] = lat.inf;
    j["sup"] = lat.sup;
    return dump(j);
  }

  if (format == ExportFormat::kDot) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < lat.concepts.size(); ++i)
      labels.push_back(format_objects(lat.concepts[i].extent, ctx) + " | " +
                       property[i]);
    return dot_graph(kind, labels, lat.hasse_edges);
  }

  std::ostringstream os;
  os << kind << ": " << ctx.num_objects() << " objects, " << ctx.num_attributes()
     << " attributes, " << lat.concepts.size() << " concepts, "
     << lat.hasse_edges.size() << " edges\n";
  os << "concepts:\n";
  for (std::size_t i = 0; i < lat.concepts.size(); ++i) {
    const auto& c = lat.concepts[i];
    os << "  [" << i << "] " << format_objects(c.extent, ctx) << " "
       << format_attributes(c.intent, ctx) << "  " << property[i] << "\n";
  }
  os << "edges:\n";
  for (const auto& [lo, hi] : lat.hasse_edges) os << "  " << lo << " -> " << hi << "\n";
  return os.str();
}

std::string export_report(const OracleReport& report, const FormalContext& ctx,
                          ExportFormat format) {
  if (format == ExportFormat::kDot)
    throw InvalidArgument("reports have no DOT rendering");

  if (format == ExportFormat::kJson) {
    json j;
    j["context_digest"] = report.context_digest;
    j["passed"] = report.passed();
    j["total_functions"] = report.total_functions;
    j["laws"] = json::array();
    for (const auto& l : report.laws)
      j["laws"].push_back({{"id", l.id},
                           {"description", l.description},
                           {"status", to_string(l.status)},
                           {"instances", l.instances},
                           {"detail", l.detail}});
    j["classes"] = json::array();
    for (const auto& c : report.classes)
      j["classes"].push_back({{"extent", names(c.extent, ctx.objects())},
                              {"size", c.size},
                              {"min_minterms", ids(c.min)},
                              {"max_minterms", ids(c.max)}});
    return dump(j);
  }

  std::ostringstream os;
  os << "context " << report.context_digest << "\n";
  std::size_t width = 0;
  for (const auto& l : report.laws) width = std::max(width, l.id.size());
  for (const auto& l : report.laws) {
    os << "  " << l.id << std::string(width - l.id.size() + 2, ' ')
       << to_string(l.status) << "  " << l.instances;
    if (!l.detail.empty()) os << "  " << l.detail;
    os << "\n";
  }
  if (report.total_functions > 0) {
    os << "sweep: " << report.total_functions << " functions, "
       << report.classes.size() << " classes\n";
    for (const auto& c : report.classes)
      os << "  " << format_objects(c.extent, ctx) << " size " << c.size << " min "
         << ids_text(c.min) << " max " << ids_text(c.max) << "\n";
  }
  os << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string compare_table(const GclLattice& gcl, const ClassicalLattice& fcl,
                          const ClassicalLattice& rsl) {
  const FormalContext& ctx = *gcl.context;
  std::set<ObjectSet> in_fcl, in_rsl;
  for (const auto& c : fcl.concepts) in_fcl.insert(c.extent);
  for (const auto& c : rsl.concepts) in_rsl.insert(c.extent);
  std::vector<std::string> extents;
  std::size_t width = 6;
  for (const auto& n : gcl.nodes) {
    extents.push_back(format_objects(n.extent, ctx));
    width = std::max(width, extents.back().size());
  }
  auto mark = [](bool b) { return b ? "yes" : "no "; };
  std::ostringstream os;
  os << "node  extent" << std::string(width - 6, ' ') << "  E_fcl  E_rsl  E_F\n";
  for (std::size_t i = 0; i < gcl.nodes.size(); ++i) {
    std::string idx = std::to_string(i);
    os << idx << std::string(idx.size() < 6 ? 6 - idx.size() : 1, ' ') << extents[i]
       << std::string(width - extents[i].size(), ' ') << "  "
       << mark(in_fcl.count(gcl.nodes[i].extent)) << "    "
       << mark(in_rsl.count(gcl.nodes[i].extent)) << "    yes\n";
  }
  os << "totals: " << gcl.nodes.size() << " general, " << in_fcl.size() << " fcl, "
     << in_rsl.size() << " rsl\n";
  return os.str();
}

}  // namespace gcl
