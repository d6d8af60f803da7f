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

#ifndef GCL_CANONICAL_FORM_HPP_
#define GCL_CANONICAL_FORM_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gcl {

using MintermId = std::uint32_t;

/// A Boolean function of m attributes identified by its set of true rows
/// (minterm ids in [0, 2^m), attribute j <-> bit j).
///
/// Stored sparsely: either the ids themselves or the ids of the complement,
/// whichever list is shorter (ties keep the direct list). The representation
/// is normalised after every operation, so `==` is structural.
class CanonicalForm {
 public:
  CanonicalForm() = default;

  static CanonicalForm empty(unsigned m_count);
  static CanonicalForm full(unsigned m_count);
  /// `ids` need not be sorted; duplicates are ignored.
  static CanonicalForm from_ids(unsigned m_count, std::vector<MintermId> ids);
  /// All ids except `ids`.
  static CanonicalForm all_but(unsigned m_count, std::vector<MintermId> ids);
  /// Truth-table constructor: bit `id` of `table` set iff id is a member.
  static CanonicalForm from_truth_table(unsigned m_count,
                                        const std::vector<std::uint64_t>& table);

  unsigned m_count() const { return m_count_; }
  std::uint64_t universe() const { return std::uint64_t{1} << m_count_; }
  std::uint64_t count() const;
  bool is_empty() const { return count() == 0; }
  bool is_full() const { return count() == universe(); }
  bool contains(MintermId id) const;

  /// Sorted member ids (materialises the complement representation).
  std::vector<MintermId> ids() const;

  CanonicalForm complement() const;
  CanonicalForm unite(const CanonicalForm& o) const;
  CanonicalForm intersect(const CanonicalForm& o) const;
  CanonicalForm minus(const CanonicalForm& o) const {
    return intersect(o.complement());
  }
  bool is_subset_of(const CanonicalForm& o) const;

  bool operator==(const CanonicalForm& o) const = default;

  /// Internal representation, exposed for serialisers that want to stay
  /// sparse.
  bool complemented() const { return complemented_; }
  const std::vector<MintermId>& stored_ids() const { return ids_; }

 private:
  CanonicalForm(unsigned m, bool complemented, std::vector<MintermId> ids)
      : m_count_(m), complemented_(complemented), ids_(std::move(ids)) {}
  void normalise();
  void check_compatible(const CanonicalForm& o) const;

  unsigned m_count_ = 0;
  bool complemented_ = false;
  std::vector<MintermId> ids_;  // sorted, unique
};

}  // namespace gcl

#endif  // GCL_CANONICAL_FORM_HPP_
