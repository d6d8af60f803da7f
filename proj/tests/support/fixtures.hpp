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

// Shared contexts and hand-rolled generators for the test binaries.

#ifndef GCL_TESTS_SUPPORT_FIXTURES_HPP_
#define GCL_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "gcl/attr_expr.hpp"
#include "gcl/context.hpp"

namespace gcl::testing {

// G = {g1,g2,g3}, M = {a,b}, rows 10 / 11 / 01.
inline const char* kT1Cxt = "B\n\n3\n2\n\ng1\ng2\ng3\na\nb\nX.\nXX\n.X\n";

inline FormalContext t1() {
  return FormalContext({"g1", "g2", "g3"}, {"a", "b"},
                       {{true, false}, {true, true}, {false, true}});
}

/// Builds a context from row strings of '0'/'1'.
inline FormalContext from_rows(const std::vector<std::string>& rows,
                               std::size_t m) {
  std::vector<std::string> objects, attributes;
  std::vector<std::vector<bool>> inc;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    objects.push_back("g" + std::to_string(i + 1));
    std::vector<bool> r;
    for (char c : rows[i]) r.push_back(c == '1');
    inc.push_back(r);
  }
  for (std::size_t j = 0; j < m; ++j)
    attributes.push_back(std::string(1, static_cast<char>('a' + j)));
  return FormalContext(objects, attributes, inc);
}

inline ObjectSet objects(const FormalContext& ctx,
                         std::initializer_list<std::size_t> members) {
  return ObjectSet(ctx.num_objects(), members);
}

inline AttributeSet attributes(const FormalContext& ctx,
                               std::initializer_list<std::size_t> members) {
  return AttributeSet(ctx.num_attributes(), members);
}

/// Hand-rolled generator of small random contexts.
class ContextGen {
 public:
  explicit ContextGen(std::uint64_t seed) : rng_(seed) {}

  FormalContext next(std::size_t max_g, std::size_t max_m) {
    const std::size_t n = pick(0, max_g);
    const std::size_t m = pick(0, max_m);
    const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < n; ++i) {
      std::string r;
      for (std::size_t j = 0; j < m; ++j)
        r += std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < density ? '1' : '0';
      rows.push_back(r);
    }
    return from_rows(rows, m);
  }

  ObjectSet subset(std::size_t width) {
    ObjectSet x(width);
    for (std::size_t i = 0; i < width; ++i)
      if (rng_() & 1u) x.set(i);
    return x;
  }

  AttrExpr expr(std::size_t m, int depth) {
    if (depth == 0 || pick(0, 2) == 0) {
      const auto r = pick(0, m + 1);
      if (r == m) return AttrExpr::top();
      if (r == m + 1) return AttrExpr::bottom();
      return AttrExpr::var(r);
    }
    switch (pick(0, 3)) {
      case 0: return AttrExpr::negate(expr(m, depth - 1));
      case 1: return AttrExpr::conj({expr(m, depth - 1), expr(m, depth - 1)});
      case 2: return AttrExpr::disj({expr(m, depth - 1), expr(m, depth - 1),
                                     expr(m, depth - 1)});
      default: return AttrExpr::disj({expr(m, depth - 1), expr(m, depth - 1)});
    }
  }

  std::size_t pick(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gcl::testing

#endif  // GCL_TESTS_SUPPORT_FIXTURES_HPP_
