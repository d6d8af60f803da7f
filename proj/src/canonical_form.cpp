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

#include "gcl/canonical_form.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

#include "gcl/caps.hpp"
#include "gcl/error.hpp"

namespace gcl {

namespace {

using Ids = std::vector<MintermId>;

Ids set_union(const Ids& a, const Ids& b) {
  Ids r;
  r.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}
Ids set_intersection(const Ids& a, const Ids& b) {
  Ids r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(r));
  return r;
}
Ids set_difference(const Ids& a, const Ids& b) {
  Ids r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(r));
  return r;
}
// [0, universe) \ a
Ids complement_ids(const Ids& a, std::uint64_t universe) {
  Ids r;
  r.reserve(universe - a.size());
  auto it = a.begin();
  for (std::uint64_t id = 0; id < universe; ++id) {
    if (it != a.end() && *it == id) {
      ++it;
    } else {
      r.push_back(static_cast<MintermId>(id));
    }
  }
  return r;
}

void check_m(unsigned m) {
  if (m > kMaxAttributesLimit)
    throw CapExceeded("canonical form attribute count", m, kMaxAttributesLimit);
}

}  // namespace

CanonicalForm CanonicalForm::empty(unsigned m_count) {
  check_m(m_count);
  return CanonicalForm(m_count, false, {});
}

CanonicalForm CanonicalForm::full(unsigned m_count) {
  check_m(m_count);
  CanonicalForm f(m_count, true, {});
  f.normalise();
  return f;
}

CanonicalForm CanonicalForm::from_ids(unsigned m_count, Ids ids) {
  check_m(m_count);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (!ids.empty() && ids.back() >= (std::uint64_t{1} << m_count))
    throw InvalidArgument("minterm id out of range");
  CanonicalForm f(m_count, false, std::move(ids));
  f.normalise();
  return f;
}

CanonicalForm CanonicalForm::all_but(unsigned m_count, Ids ids) {
  auto f = from_ids(m_count, std::move(ids));
  return f.complement();
}

CanonicalForm CanonicalForm::from_truth_table(
    unsigned m_count, const std::vector<std::uint64_t>& table) {
  check_m(m_count);
  const std::uint64_t universe = std::uint64_t{1} << m_count;
  std::uint64_t ones = 0;
  for (std::uint64_t w : table) ones += static_cast<std::uint64_t>(std::popcount(w));
  const bool store_zeros = ones > universe - ones;
  Ids ids;
  ids.reserve(store_zeros ? universe - ones : ones);
  for (std::uint64_t id = 0; id < universe; ++id) {
    const bool bit = (table[id / 64] >> (id % 64)) & 1u;
    if (bit != store_zeros) ids.push_back(static_cast<MintermId>(id));
  }
  return CanonicalForm(m_count, store_zeros, std::move(ids));
}

std::uint64_t CanonicalForm::count() const {
  return complemented_ ? universe() - ids_.size() : ids_.size();
}

bool CanonicalForm::contains(MintermId id) const {
  const bool listed = std::binary_search(ids_.begin(), ids_.end(), id);
  return listed != complemented_;
}

std::vector<MintermId> CanonicalForm::ids() const {
  return complemented_ ? complement_ids(ids_, universe()) : ids_;
}

CanonicalForm CanonicalForm::complement() const {
  CanonicalForm f(m_count_, !complemented_, ids_);
  f.normalise();
  return f;
}

CanonicalForm CanonicalForm::unite(const CanonicalForm& o) const {
  check_compatible(o);
  CanonicalForm r;
  if (!complemented_ && !o.complemented_) {
    r = CanonicalForm(m_count_, false, set_union(ids_, o.ids_));
  } else if (complemented_ && o.complemented_) {
    r = CanonicalForm(m_count_, true, set_intersection(ids_, o.ids_));
  } else {
    const auto& plain = complemented_ ? o.ids_ : ids_;
    const auto& holes = complemented_ ? ids_ : o.ids_;
    r = CanonicalForm(m_count_, true, set_difference(holes, plain));
  }
  r.normalise();
  return r;
}

CanonicalForm CanonicalForm::intersect(const CanonicalForm& o) const {
  check_compatible(o);
  CanonicalForm r;
  if (!complemented_ && !o.complemented_) {
    r = CanonicalForm(m_count_, false, set_intersection(ids_, o.ids_));
  } else if (complemented_ && o.complemented_) {
    r = CanonicalForm(m_count_, true, set_union(ids_, o.ids_));
  } else {
    const auto& plain = complemented_ ? o.ids_ : ids_;
    const auto& holes = complemented_ ? ids_ : o.ids_;
    r = CanonicalForm(m_count_, false, set_difference(plain, holes));
  }
  r.normalise();
  return r;
}

bool CanonicalForm::is_subset_of(const CanonicalForm& o) const {
  check_compatible(o);
  if (!complemented_ && !o.complemented_)
    return std::includes(o.ids_.begin(), o.ids_.end(), ids_.begin(), ids_.end());
  if (complemented_ && o.complemented_)
    return std::includes(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end());
  if (!complemented_)  // plain a within U \ b  <=>  a ∩ b = ∅
    return set_intersection(ids_, o.ids_).empty();
  // U \ a within plain b  <=>  a ∪ b = U
  return set_union(ids_, o.ids_).size() == universe();
}

void CanonicalForm::normalise() {
  const std::uint64_t half = universe() / 2;
  // Keep the shorter list; on a tie prefer the direct one.
  if (ids_.size() > half || (complemented_ && ids_.size() == universe() - ids_.size())) {
    ids_ = complement_ids(ids_, universe());
    complemented_ = !complemented_;
  }
}

void CanonicalForm::check_compatible(const CanonicalForm& o) const {
  if (m_count_ != o.m_count_)
    throw InvalidArgument("canonical forms over different attribute counts");
}

}  // namespace gcl
