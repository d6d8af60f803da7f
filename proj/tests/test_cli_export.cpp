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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gcl/classical.hpp"
#include "gcl/cli.hpp"
#include "gcl/export.hpp"
#include "gcl/gcl_lattice.hpp"
#include "gcl/oracle.hpp"
#include "json.hpp"
#include "support/fixtures.hpp"

using namespace gcl;
using namespace gcl::testing;
using nlohmann::json;

namespace {

std::size_t count_lines_with(const std::string& text, const std::string& needle,
                             const std::string& without = "") {
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line))
    if (line.find(needle) != std::string::npos &&
        (without.empty() || line.find(without) == std::string::npos))
      ++n;
  return n;
}

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("gcl_cli_test_" + std::to_string(std::rand()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct EnvGuard {
  explicit EnvGuard(const char* name, const char* value) : name_(name) {
    setenv(name, value, 1);
  }
  ~EnvGuard() { unsetenv(name_); }
  const char* name_;
};

}  // namespace

TEST_CASE("T1 GCL json carries canonical ids") {
  const auto lat = build_gcl(t1());
  const json j = json::parse(export_lattice(lat, ExportFormat::kJson));
  CHECK(j["kind"] == "gcl");
  CHECK(j["objects"] == json({"g1", "g2", "g3"}));
  CHECK(j["attributes"] == json({"a", "b"}));
  CHECK(j["blocks"].size() == 3);
  CHECK(j["blocks"][1]["intent"] == json({"a", "b"}));
  REQUIRE(j["nodes"].size() == 8);
  const auto& g1 = j["nodes"][1];
  CHECK(g1["block_set"] == 1);
  CHECK(g1["extent"] == json({"g1"}));
  CHECK(g1["grsp_minterms"] == json({0, 1}));
  CHECK(g1["gfcp_minterms"] == json({1}));
  CHECK(g1["grsp_pretty"] == "!b");
  CHECK(g1["gfcp_pretty"] == "a & !b");
  CHECK(j["edges"].size() == 12);
  CHECK(j["constants"]["zero_rho"] == json({0}));
  CHECK(j["constants"]["one_eta"] == json({1, 2, 3}));
  CHECK(j["sup"] == 7);
}

TEST_CASE("T1 GCL dot has 8 node and 12 edge statements") {
  const std::string dot = export_lattice(build_gcl(t1()), ExportFormat::kDot);
  CHECK(dot.rfind("digraph gcl {", 0) == 0);
  CHECK(dot.find("rankdir=BT;") != std::string::npos);
  CHECK(count_lines_with(dot, "[label=") == 8);
  CHECK(count_lines_with(dot, " -> ") == 12);
  CHECK(dot.find("n1 [label=\"{g1} | a & !b\"];") != std::string::npos);
}

TEST_CASE("T1 classical json exports") {
  const auto ctx = t1();
  const json fcl = json::parse(export_lattice(build_fcl(ctx), ctx, ExportFormat::kJson));
  CHECK(fcl["kind"] == "fcl");
  REQUIRE(fcl["nodes"].size() == 4);
  CHECK(fcl["nodes"][0]["extent"] == json({"g2"}));
  CHECK(fcl["nodes"][0]["intent"] == json({"a", "b"}));
  CHECK(fcl["nodes"][3]["intent"] == json::array());
  const json rsl = json::parse(export_lattice(build_rsl(ctx), ctx, ExportFormat::kJson));
  CHECK(rsl["kind"] == "rsl");
  REQUIRE(rsl["nodes"].size() == 4);
  CHECK(rsl["nodes"][3]["intent"] == json({"a", "b"}));
  const std::string dot = export_lattice(build_rsl(ctx), ctx, ExportFormat::kDot);
  CHECK(count_lines_with(dot, "[label=") == 4);
  CHECK(count_lines_with(dot, " -> ") == 4);
}

TEST_CASE("empty context renders a single node") {
  const FormalContext empty({}, {"a"}, {});
  const auto lat = build_gcl(empty);
  const std::string text = export_lattice(lat, ExportFormat::kText);
  CHECK(text.find("1 nodes, 0 edges") != std::string::npos);
  const json j = json::parse(export_lattice(lat, ExportFormat::kJson));
  CHECK(j["nodes"].size() == 1);
  CHECK(count_lines_with(export_lattice(lat, ExportFormat::kDot), "[label=") == 1);
}

TEST_CASE("exports are byte-identical across runs") {
  ContextGen gen(7);
  for (int i = 0; i < 20; ++i) {
    const auto ctx = gen.next(6, 4);
    for (auto fmt : {ExportFormat::kJson, ExportFormat::kDot, ExportFormat::kText}) {
      CHECK(export_lattice(build_gcl(ctx), fmt) == export_lattice(build_gcl(ctx), fmt));
      CHECK(export_lattice(build_fcl(ctx), ctx, fmt) ==
            export_lattice(build_fcl(ctx), ctx, fmt));
    }
  }
}

TEST_CASE("pretty forms denote the canonical form they print") {
  ContextGen gen(11);
  for (int i = 0; i < 30; ++i) {
    const auto ctx = gen.next(6, 4);
    const json j = json::parse(export_lattice(build_gcl(ctx), ExportFormat::kJson));
    const unsigned m = static_cast<unsigned>(ctx.num_attributes());
    for (const auto& n : j["nodes"]) {
      for (const char* side : {"grsp", "gfcp"}) {
        const auto expr = parse_expr(n[std::string(side) + "_pretty"].get<std::string>(),
                                     ctx.attributes());
        const auto ids =
            n[std::string(side) + "_minterms"].get<std::vector<MintermId>>();
        CHECK(to_canonical(expr, m) == CanonicalForm::from_ids(m, ids));
      }
    }
  }
}

TEST_CASE("report export") {
  const auto ctx = t1();
  const auto report = verify_all(ctx);
  const json j = json::parse(export_report(report, ctx, ExportFormat::kJson));
  CHECK(j["passed"] == true);
  CHECK(j["total_functions"] == 16);
  CHECK(j["context_digest"] == context_digest(ctx));
  CHECK(j["laws"].size() == report.laws.size());
  CHECK(j["classes"].size() == 8);
  const std::string text = export_report(report, ctx, ExportFormat::kText);
  CHECK(text.find("result: PASS") != std::string::npos);
  CHECK_THROWS_AS(export_report(report, ctx, ExportFormat::kDot), InvalidArgument);
}

TEST_CASE("compare table") {
  const auto ctx = t1();
  const std::string table = compare_table(build_gcl(ctx), build_fcl(ctx), build_rsl(ctx));
  CHECK(table.find("totals: 8 general, 4 fcl, 4 rsl") != std::string::npos);
  CHECK(count_lines_with(table, "yes") == 8);
}

TEST_CASE("cli build") {
  TempDir dir;
  const std::string path = dir.write("t1.cxt", kT1Cxt);
  auto r = invoke({"build", path, "--lattice", "gcl", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("8 nodes, 12 edges") != std::string::npos);
  CHECK(r.out.find("grsp !b  {0,1}") != std::string::npos);
  CHECK(r.out.find("gfcp a & !b  {1}") != std::string::npos);

  r = invoke({"build", path, "--lattice", "fcl", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["nodes"].size() == 4);

  const std::string out_path = dir.file("t1.dot");
  r = invoke({"build", path, "--format", "dot", "--out", out_path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(out_path) == export_lattice(build_gcl(t1()), ExportFormat::kDot));

  const std::string csv = dir.write("t1.csv", write_csv(t1()));
  r = invoke({"build", csv, "--input-format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == invoke({"build", path}).out);
}

TEST_CASE("cli exit codes") {
  TempDir dir;
  const std::string path = dir.write("t1.cxt", kT1Cxt);
  auto r = invoke({"build", dir.file("missing.cxt")});
  CHECK(r.code == 2);
  CHECK(r.err.find("missing.cxt") != std::string::npos);

  CHECK(invoke({"build", dir.write("bad.cxt", "B\n\nx\n")}).code == 2);
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"build", path, "--lattice", "lattice"}).code == 1);
  CHECK(invoke({"build", path, "--format", "svg"}).code == 1);
  CHECK(invoke({"verify", path, "--format", "dot"}).code == 1);
  CHECK(invoke({"random", "--density", "2"}).code == 1);
  CHECK(invoke({"build", path, "--max-nf", "2"}).code == 3);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("cli caps from the environment") {
  TempDir dir;
  const std::string path = dir.write("t1.cxt", kT1Cxt);
  {
    EnvGuard env("GCL_MAX_NF", "2");
    CHECK(invoke({"build", path}).code == 3);
    CHECK(invoke({"build", path, "--max-nf", "3"}).code == 0);
  }
  {
    EnvGuard env("GCL_MAX_M", "1");
    const auto r = invoke({"build", path});
    CHECK(r.code == 3);
    CHECK(r.err.find("exceeds cap 1") != std::string::npos);
  }
  {
    EnvGuard env("GCL_MAX_NF", "many");
    CHECK(invoke({"build", path}).code == 1);
  }
  CHECK(invoke({"build", path}).code == 0);
}

TEST_CASE("cli verify") {
  TempDir dir;
  const std::string path = dir.write("t1.cxt", kT1Cxt);
  auto r = invoke({"verify", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("result: PASS") != std::string::npos);
  CHECK(r.out.find("mstar-bounds") != std::string::npos);
  r = invoke({"verify", path, "--format", "json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["passed"] == true);

  // |M| = 5 is beyond the sweep cap; the law suite still runs.
  const std::string wide = dir.write("w.cxt", write_cxt(random_context(3, 6, 5, 0.5)));
  r = invoke({"verify", wide});
  CHECK(r.code == 0);
  CHECK(r.out.find("sweep:") == std::string::npos);
}

TEST_CASE("cli compare") {
  TempDir dir;
  const auto r = invoke({"compare", dir.write("t1.cxt", kT1Cxt)});
  CHECK(r.code == 0);
  CHECK(r.out.find("E_fcl  E_rsl  E_F") != std::string::npos);
  CHECK(r.out.find("totals: 8 general, 4 fcl, 4 rsl") != std::string::npos);
}

TEST_CASE("cli random is reproducible and parseable") {
  const auto a = invoke({"random", "--seed", "9", "--objects", "7", "--attributes", "4",
                      "--density", "0.3"});
  const auto b = invoke({"random", "--seed", "9", "--objects", "7", "--attributes", "4",
                      "--density", "0.3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(parse_context(a.out, ContextFormat::kCxt) == random_context(9, 7, 4, 0.3));
}

TEST_CASE("cli inspect") {
  TempDir dir;
  const std::string path = dir.write("t1.cxt", kT1Cxt);
  auto r = invoke({"inspect", path, "--query", "a & !b", "--irreducibles"});
  CHECK(r.code == 0);
  CHECK(r.out.find("extent: {g1}") != std::string::npos);
  CHECK(r.out.find("grsp !b") != std::string::npos);
  CHECK(r.out.find("gfcp a & !b") != std::string::npos);
  CHECK(r.out.find("in class: yes") != std::string::npos);
  CHECK(r.out.find("irreducible conjunctions: !b") != std::string::npos);

  r = invoke({"inspect", path, "--extent", "g1,g2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("gfcp a\n") != std::string::npos);

  CHECK(invoke({"inspect", path}).code == 1);
  CHECK(invoke({"inspect", path, "--query", "a", "--extent", "g1"}).code == 1);
  CHECK(invoke({"inspect", path, "--query", "a & zz"}).code == 2);
  CHECK(invoke({"inspect", path, "--extent", "g9"}).code == 2);

  // g1 and g2 share a row, so {g1} splits a block.
  const std::string dup = dir.write("dup.cxt", write_cxt(from_rows({"10", "10", "01"}, 2)));
  r = invoke({"inspect", dup, "--extent", "g1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("node: none") != std::string::npos);
}
