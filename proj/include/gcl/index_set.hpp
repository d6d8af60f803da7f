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

#ifndef GCL_INDEX_SET_HPP_
#define GCL_INDEX_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "gcl/error.hpp"

namespace gcl {

/// Fixed-width bit vector over the indices [0, width). The tag keeps object
/// sets and attribute sets from being mixed up at compile time.
template <class Tag>
class IndexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  IndexSet() = default;
  explicit IndexSet(std::size_t width)
      : width_(width), words_((width + kWordBits - 1) / kWordBits, 0) {}
  IndexSet(std::size_t width, std::initializer_list<std::size_t> members)
      : IndexSet(width) {
    for (std::size_t i : members) set(i);
  }

  static IndexSet full(std::size_t width) {
    IndexSet s(width);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  std::size_t width() const { return width_; }

  bool test(std::size_t i) const {
    check_index(i);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  IndexSet& set(std::size_t i, bool value = true) {
    check_index(i);
    const Word bit = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= bit;
    } else {
      words_[i / kWordBits] &= ~bit;
    }
    return *this;
  }
  IndexSet& reset(std::size_t i) { return set(i, false); }

  std::size_t count() const {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool none() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }
  bool all() const { return count() == width_; }

  IndexSet complement() const {
    IndexSet r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  IndexSet& operator&=(const IndexSet& o) {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  IndexSet& operator|=(const IndexSet& o) {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // Set difference.
  IndexSet& operator-=(const IndexSet& o) {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  bool is_subset_of(const IndexSet& o) const {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool is_proper_subset_of(const IndexSet& o) const {
    return is_subset_of(o) && *this != o;
  }
  bool intersects(const IndexSet& o) const {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  // Calls f(i) for every member in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        const int b = std::countr_zero(w);
        f(wi * kWordBits + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  const std::vector<Word>& words() const { return words_; }

  bool operator==(const IndexSet& o) const = default;

  // Orders by cardinality, then by the numeric value of the bit pattern
  // (member i weighs 2^i). Sets of different widths order by width first.
  std::strong_ordering operator<=>(const IndexSet& o) const {
    if (auto c = width_ <=> o.width_; c != 0) return c;
    if (auto c = count() <=> o.count(); c != 0) return c;
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (auto c = words_[i] <=> o.words_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(width_);
    for (Word w : words_) h = h * 1099511628211ull ^ std::hash<Word>{}(w);
    return h;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= width_) throw InvalidArgument("index out of range");
  }
  void check_width(const IndexSet& o) const {
    if (width_ != o.width_) throw InvalidArgument("set width mismatch");
  }
  void trim() {
    if (width_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (width_ % kWordBits)) - 1;
  }

  std::size_t width_ = 0;
  std::vector<Word> words_;
};

struct ObjectTag {};
struct AttributeTag {};

using ObjectSet = IndexSet<ObjectTag>;
using AttributeSet = IndexSet<AttributeTag>;

// Subset of the F-distinct blocks, bit k = block k. n_F is capped well below
// 64, so a machine word suffices.
using BlockMask = std::uint64_t;

}  // namespace gcl

template <class Tag>
struct std::hash<gcl::IndexSet<Tag>> {
  std::size_t operator()(const gcl::IndexSet<Tag>& s) const { return s.hash(); }
};

#endif  // GCL_INDEX_SET_HPP_
