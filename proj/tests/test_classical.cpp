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

#include <set>

#include "doctest.h"
#include "gcl/classical.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

using namespace gcl;
using gcl::testing::attributes;
using gcl::testing::objects;
using gcl::testing::t1;
namespace ref = gcl::testing::ref;

namespace {

using Pair = std::pair<ObjectSet, AttributeSet>;

std::vector<Pair> pairs(const ClassicalLattice& lat) {
  std::vector<Pair> out;
  for (const auto& c : lat.concepts) out.emplace_back(c.extent, c.intent);
  return out;
}

}  // namespace

TEST_CASE("toy formal concept lattice") {
  const auto c = t1();
  const auto fcl = build_fcl(c);
  CHECK(pairs(fcl) == std::vector<Pair>{{objects(c, {1}), attributes(c, {0, 1})},
                                        {objects(c, {0, 1}), attributes(c, {0})},
                                        {objects(c, {1, 2}), attributes(c, {1})},
                                        {objects(c, {0, 1, 2}), attributes(c, {})}});
  CHECK(fcl.hasse_edges == std::vector<HasseEdge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(fcl.inf == 0);
  CHECK(fcl.sup == 3);
  CHECK(eval_contextual(fcl.concepts[0].property, c) == objects(c, {1}));
}

TEST_CASE("toy rough set lattice") {
  const auto c = t1();
  const auto rsl = build_rsl(c);
  CHECK(pairs(rsl) == std::vector<Pair>{{objects(c, {}), attributes(c, {})},
                                        {objects(c, {0, 1}), attributes(c, {0})},
                                        {objects(c, {1, 2}), attributes(c, {1})},
                                        {objects(c, {0, 1, 2}), attributes(c, {0, 1})}});
  CHECK(rsl.hasse_edges.size() == 4);
  CHECK(eval_contextual(rsl.concepts[3].property, c) == c.all_objects());
}

TEST_CASE("degenerate classical lattices") {
  const auto none = gcl::testing::from_rows({"", ""}, 0);
  CHECK(pairs(build_fcl(none)) == std::vector<Pair>{{none.all_objects(), none.empty_attributes()}});
  CHECK(pairs(build_rsl(none)) ==
        std::vector<Pair>{{none.empty_objects(), none.empty_attributes()}});
  const auto one = gcl::testing::from_rows({"1"}, 1);
  CHECK(pairs(build_fcl(one)) == std::vector<Pair>{{one.all_objects(), one.all_attributes()}});
}

TEST_CASE("recovery from the general lattice on the toy context") {
  const auto c = t1();
  const auto lat = build_gcl(c);
  CHECK(same_concepts(recover_classical(lat, LatticeKind::kFcl), build_fcl(c)));
  CHECK(same_concepts(recover_classical(lat, LatticeKind::kRsl), build_rsl(c)));
  for (auto kind : {LatticeKind::kFcl, LatticeKind::kRsl})
    for (const auto& k : recover_classical(lat, kind).concepts)
      CHECK(k.extent != objects(c, {0, 2}));
}

TEST_CASE("closure enumeration matches the subset sweep") {
  gcl::testing::ContextGen gen(53);
  Caps narrow;
  narrow.max_attributes = 0;
  for (int round = 0; round < 60; ++round) {
    const auto c = gen.next(8, 6);
    CHECK(pairs(build_fcl(c)) == pairs(build_fcl(c, narrow)));
    CHECK(pairs(build_rsl(c)) == pairs(build_rsl(c, narrow)));
  }
}

TEST_CASE("property: classical lattices against the reference") {
  gcl::testing::ContextGen gen(59);
  for (int round = 0; round < 200; ++round) {
    const auto c = gen.next(8, 5);
    CAPTURE(write_cxt(c));
    const auto fcl = build_fcl(c);
    const auto rsl = build_rsl(c);
    std::set<ObjectSet> fe, re;
    for (const auto& k : fcl.concepts) {
      fe.insert(k.extent);
      CHECK(intent_of(k.extent, c) == k.intent);
      CHECK(extent_of(k.intent, c) == k.extent);
    }
    for (const auto& k : rsl.concepts) {
      re.insert(k.extent);
      CHECK(box_of(k.extent, c) == k.intent);
      CHECK(approx_diamond(k.intent, c) == k.extent);
      // Complemented pair is a property-oriented concept.
      CHECK(diamond_of(k.extent.complement(), c) == k.intent.complement());
      CHECK(approx_box(k.intent.complement(), c) == k.extent.complement());
    }
    CHECK(fe == ref::classical_extents(c, true));
    CHECK(re == ref::classical_extents(c, false));
    for (std::size_t j = 0; j < c.num_attributes(); ++j) {
      CHECK(fe.count(c.column(j)));
      CHECK(re.count(c.column(j)));
    }
    const auto family = ref::extent_family(c);
    for (const auto& x : fe) CHECK(family.count(x));
    for (const auto& x : re) CHECK(family.count(x));

    const auto lat = build_gcl(c);
    CHECK(same_concepts(recover_classical(lat, LatticeKind::kFcl), fcl));
    CHECK(same_concepts(recover_classical(lat, LatticeKind::kRsl), rsl));

    // Cover edges: i < j by inclusion with nothing in between.
    const auto& cs = fcl.concepts;
    std::set<HasseEdge> edges(fcl.hasse_edges.begin(), fcl.hasse_edges.end());
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) {
        bool cover = cs[i].extent.is_proper_subset_of(cs[j].extent);
        for (std::size_t k = 0; k < cs.size() && cover; ++k)
          if (cs[i].extent.is_proper_subset_of(cs[k].extent) &&
              cs[k].extent.is_proper_subset_of(cs[j].extent))
            cover = false;
        CHECK(edges.count({i, j}) == (cover ? 1u : 0u));
      }
  }
}
