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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "gcl/context.hpp"
#include "gcl/error.hpp"
#include "support/fixtures.hpp"

using namespace gcl;
using gcl::testing::attributes;
using gcl::testing::objects;
using gcl::testing::t1;

TEST_CASE("cxt text parses to the three-object toy context") {
  const auto ctx = parse_context(gcl::testing::kT1Cxt, ContextFormat::kCxt);
  CHECK(ctx == t1());
  CHECK(ctx.objects() == std::vector<std::string>{"g1", "g2", "g3"});
  CHECK(ctx.attributes() == std::vector<std::string>{"a", "b"});
  CHECK(ctx.row_code(0) == 1);
  CHECK(ctx.row_code(1) == 3);
  CHECK(ctx.row_code(2) == 2);
}

TEST_CASE("csv text parses to the same context") {
  CHECK(parse_context(",a,b\ng1,1,0\ng2,1,1\ng3,0,1", ContextFormat::kCsv) == t1());
  CHECK(parse_context(",a,b\ng1,X,.\ng2,X,X\ng3,.,X\n", ContextFormat::kCsv) == t1());
  CHECK(parse_context_auto(",a,b\ng1,1,0\ng2,1,1\ng3,0,1") == t1());
  CHECK(parse_context_auto(gcl::testing::kT1Cxt) == t1());
}

TEST_CASE("cxt blank line before names is optional") {
  CHECK(parse_context("B\n\n3\n2\ng1\ng2\ng3\na\nb\nX.\nXX\n.X\n", ContextFormat::kCxt) ==
        t1());
}

TEST_CASE("parse errors carry a line number") {
  auto line_of = [](const char* text, ContextFormat f) -> std::size_t {
    try {
      parse_context(text, f);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  SUBCASE("illegal cell character") {
    try {
      parse_context("B\n\n1\n2\n\ng1\na\nb\nXY\n", ContextFormat::kCxt);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("illegal cell character 'Y'") != std::string::npos);
      CHECK(e.line() == 9);
    }
  }
  SUBCASE("malformed header") {
    CHECK(line_of("A\n\n1\n1\n\ng\nm\nX\n", ContextFormat::kCxt) == 1);
    CHECK(line_of("B\n\nthree\n1\n", ContextFormat::kCxt) == 3);
    CHECK(line_of("a,b\ng1,1,0\n", ContextFormat::kCsv) == 1);
  }
  SUBCASE("dimension mismatch") {
    CHECK(line_of("B\n\n1\n2\n\ng1\na\nb\nXXX\n", ContextFormat::kCxt) == 9);
    CHECK(line_of(",a,b\ng1,1\n", ContextFormat::kCsv) == 2);
    CHECK(line_of("B\n\n1\n1\n\ng1\na\nX\nX\n", ContextFormat::kCxt) == 9);
  }
  SUBCASE("duplicate names") {
    CHECK(line_of("B\n\n2\n1\n\ng\ng\na\nX\nX\n", ContextFormat::kCxt) > 0);
    CHECK(line_of(",a,a\ng1,1,0\n", ContextFormat::kCsv) > 0);
  }
  SUBCASE("illegal csv cell") {
    CHECK(line_of(",a\ng1,2\n", ContextFormat::kCsv) == 2);
  }
}

TEST_CASE("constructor rejects duplicate names and ragged rows") {
  CHECK_THROWS_AS(FormalContext({"g", "g"}, {"a"}, {{true}, {false}}), InvalidArgument);
  CHECK_THROWS_AS(FormalContext({"g"}, {"a", "a"}, {{true, false}}), InvalidArgument);
  CHECK_THROWS_AS(FormalContext({"g"}, {"a", "b"}, {{true}}), InvalidArgument);
}

TEST_CASE("empty contexts are legal") {
  const FormalContext none({}, {}, {});
  CHECK(none.num_objects() == 0);
  CHECK(blocks(none).size() == 0);
  const auto no_attrs = gcl::testing::from_rows({"", ""}, 0);
  CHECK(blocks(no_attrs).size() == 1);
  CHECK(parse_context(write_cxt(none), ContextFormat::kCxt) == none);
  CHECK(parse_context(write_cxt(no_attrs), ContextFormat::kCxt) == no_attrs);
}

TEST_CASE("derivation operators on the toy context") {
  const auto c = t1();
  CHECK(intent_of(objects(c, {1}), c) == attributes(c, {0, 1}));
  CHECK(intent_of(objects(c, {}), c) == attributes(c, {0, 1}));
  CHECK(intent_of(objects(c, {0, 1, 2}), c) == attributes(c, {}));
  CHECK(extent_of(attributes(c, {0, 1}), c) == objects(c, {1}));
  CHECK(extent_of(attributes(c, {}), c) == objects(c, {0, 1, 2}));
  CHECK(extent_of(attributes(c, {0}), c) == objects(c, {0, 1}));
}

TEST_CASE("modal operators on the toy context") {
  const auto c = t1();
  CHECK(box_of(objects(c, {0, 1}), c) == attributes(c, {0}));
  CHECK(box_of(objects(c, {0, 1, 2}), c) == attributes(c, {0, 1}));
  CHECK(box_of(objects(c, {}), c) == attributes(c, {}));
  CHECK(diamond_of(objects(c, {0}), c) == attributes(c, {0}));
  CHECK(diamond_of(objects(c, {}), c) == attributes(c, {}));
  CHECK(diamond_of(objects(c, {0, 2}), c) == attributes(c, {0, 1}));
  CHECK(approx_diamond(attributes(c, {0}), c) == objects(c, {0, 1}));
  CHECK(approx_box(attributes(c, {0, 1}), c) == objects(c, {0, 1, 2}));
  CHECK(approx_box(attributes(c, {0}), c) == objects(c, {0}));
}

TEST_CASE("block partition of the toy context") {
  const auto c = t1();
  const auto p = blocks(c);
  REQUIRE(p.size() == 3);
  CHECK(p.blocks[0].extent == objects(c, {0}));
  CHECK(p.blocks[1].extent == objects(c, {1}));
  CHECK(p.blocks[2].extent == objects(c, {2}));
  CHECK(p.blocks[0].intent == attributes(c, {0}));
  CHECK(p.blocks[1].intent == attributes(c, {0, 1}));
  CHECK(p.blocks[2].intent == attributes(c, {1}));
  CHECK(p.mask_of(objects(c, {0, 2})) == BlockMask{5});
  CHECK(p.extent_of_mask(6, 3) == objects(c, {1, 2}));
}

TEST_CASE("identical rows merge into one block") {
  const auto c = gcl::testing::from_rows({"10", "10"}, 2);
  const auto p = blocks(c);
  REQUIRE(p.size() == 1);
  CHECK(p.blocks[0].extent == objects(c, {0, 1}));
  CHECK_FALSE(p.mask_of(objects(c, {0})).has_value());
}

TEST_CASE("object list parsing and formatting") {
  const auto c = t1();
  CHECK(parse_object_list("g1,g3", c) == objects(c, {0, 2}));
  CHECK(parse_object_list("{g2}", c) == objects(c, {1}));
  CHECK(parse_object_list("", c) == objects(c, {}));
  CHECK(format_objects(objects(c, {0, 2}), c) == "{g1,g3}");
  CHECK(format_attributes(attributes(c, {}), c) == "{}");
  CHECK_THROWS_AS(parse_object_list("g9", c), InvalidArgument);
}

TEST_CASE("property: operator laws on random contexts") {
  gcl::testing::ContextGen gen(7);
  for (int round = 0; round < 150; ++round) {
    const auto c = gen.next(7, 5);
    CAPTURE(write_cxt(c));
    for (int k = 0; k < 10; ++k) {
      const auto x = gen.subset(c.num_objects());
      const auto x2 = x | gen.subset(c.num_objects());
      const auto i = intent_of(x, c);
      CHECK(intent_of(extent_of(i, c), c) == i);
      CHECK(box_of(approx_diamond(box_of(x, c), c), c) == box_of(x, c));
      CHECK(diamond_of(approx_box(diamond_of(x, c), c), c) == diamond_of(x, c));
      CHECK(intent_of(x2, c).is_subset_of(i));
      CHECK(box_of(x, c).is_subset_of(box_of(x2, c)));
      CHECK(diamond_of(x, c).is_subset_of(diamond_of(x2, c)));
      CHECK(box_of(x.complement(), c).complement() == diamond_of(x, c));
      const auto y = intent_of(gen.subset(c.num_objects()), c);
      CHECK(approx_box(y.complement(), c).complement() == approx_diamond(y, c));
    }
  }
}

TEST_CASE("property: blocks are a partition by identical rows") {
  gcl::testing::ContextGen gen(11);
  for (int round = 0; round < 150; ++round) {
    const auto c = gen.next(9, 4);
    CAPTURE(write_cxt(c));
    const auto p = blocks(c);
    ObjectSet seen = c.empty_objects();
    for (const auto& b : p.blocks) {
      CHECK(b.extent.any());
      CHECK_FALSE(b.extent.intersects(seen));
      seen |= b.extent;
      b.extent.for_each([&](std::size_t g) { CHECK(c.row(g) == b.intent); });
    }
    CHECK(seen == c.all_objects());
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        CHECK(p.blocks[i].intent != p.blocks[j].intent);
    CHECK(p.size() <= std::min<std::size_t>(c.num_objects(), 1u << c.num_attributes()));

    // Reversing the objects keeps the multiset of (size, intent).
    std::vector<std::string> names(c.objects().rbegin(), c.objects().rend());
    std::vector<std::vector<bool>> rows;
    for (std::size_t g = c.num_objects(); g-- > 0;) {
      std::vector<bool> r;
      for (std::size_t j = 0; j < c.num_attributes(); ++j) r.push_back(c.incident(g, j));
      rows.push_back(r);
    }
    const auto q = blocks(FormalContext(names, c.attributes(), rows));
    std::multiset<std::pair<std::size_t, AttributeSet>> a, b;
    for (const auto& k : p.blocks) a.insert({k.extent.count(), k.intent});
    for (const auto& k : q.blocks) b.insert({k.extent.count(), k.intent});
    CHECK(a == b);
  }
}

TEST_CASE("property: cxt and csv round trip") {
  gcl::testing::ContextGen gen(3);
  for (int round = 0; round < 100; ++round) {
    const auto c = gen.next(6, 6);
    CHECK(parse_context(write_cxt(c), ContextFormat::kCxt) == c);
    if (c.num_attributes() > 0)
      CHECK(parse_context(write_csv(c), ContextFormat::kCsv) == c);
  }
}
