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

// Formal contexts, the derivation and modal operators, and the partition of
// objects into classes with identical incidence rows.

#ifndef GCL_CONTEXT_HPP_
#define GCL_CONTEXT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcl/index_set.hpp"

namespace gcl {

/// A binary formal context: objects, attributes and the incidence relation.
/// Immutable once constructed; rows and columns are both kept so that either
/// orientation is a direct lookup.
class FormalContext {
 public:
  FormalContext() = default;

  /// `incidence[g][m]` is true iff object g has attribute m. Throws
  /// InvalidArgument on duplicate names or a ragged matrix.
  FormalContext(std::vector<std::string> objects,
                std::vector<std::string> attributes,
                const std::vector<std::vector<bool>>& incidence);

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_attributes() const { return attributes_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }

  bool incident(std::size_t g, std::size_t m) const { return rows_.at(g).test(m); }
  // g^R
  const AttributeSet& row(std::size_t g) const { return rows_.at(g); }
  // m^R
  const ObjectSet& column(std::size_t m) const { return columns_.at(m); }

  /// Row g read as a minterm id: bit j set iff g has attribute j.
  /// Requires |M| <= 63.
  std::uint64_t row_code(std::size_t g) const;

  std::optional<std::size_t> object_index(std::string_view name) const;
  std::optional<std::size_t> attribute_index(std::string_view name) const;

  ObjectSet empty_objects() const { return ObjectSet(num_objects()); }
  ObjectSet all_objects() const { return ObjectSet::full(num_objects()); }
  AttributeSet empty_attributes() const { return AttributeSet(num_attributes()); }
  AttributeSet all_attributes() const {
    return AttributeSet::full(num_attributes());
  }

  bool operator==(const FormalContext& o) const {
    return objects_ == o.objects_ && attributes_ == o.attributes_ &&
           rows_ == o.rows_;
  }

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<AttributeSet> rows_;
  std::vector<ObjectSet> columns_;
};

enum class ContextFormat { kCxt, kCsv };

/// Parses Burmeister cxt or CSV text. Errors carry the offending line.
FormalContext parse_context(std::string_view text, ContextFormat format);

/// Picks the format from content: a first line of exactly "B" means cxt.
FormalContext parse_context_auto(std::string_view text);

/// Burmeister cxt serialisation; parse_context(write_cxt(c), kCxt) == c.
std::string write_cxt(const FormalContext& ctx);
std::string write_csv(const FormalContext& ctx);

// Derivation operators. All require argument widths to match the context.

/// X^I = {m | m^R ⊇ X}.
AttributeSet intent_of(const ObjectSet& x, const FormalContext& ctx);
/// Y^I = {g | g^R ⊇ Y}.
ObjectSet extent_of(const AttributeSet& y, const FormalContext& ctx);
/// X^□ = {m | m^R ⊆ X}.
AttributeSet box_of(const ObjectSet& x, const FormalContext& ctx);
/// X^◇ = ∪_{g∈X} g^R.
AttributeSet diamond_of(const ObjectSet& x, const FormalContext& ctx);
/// Y^□ = {g | g^R ⊆ Y}.
ObjectSet approx_box(const AttributeSet& y, const FormalContext& ctx);
/// Y^◇ = ∪_{m∈Y} m^R.
ObjectSet approx_diamond(const AttributeSet& y, const FormalContext& ctx);

/// One class of objects sharing the same incidence row.
struct Block {
  ObjectSet extent;
  AttributeSet intent;
};

/// The F-distinct object classes, in order of first member object.
struct BlockPartition {
  std::vector<Block> blocks;

  std::size_t size() const { return blocks.size(); }

  /// Union of the blocks selected by `mask`.
  ObjectSet extent_of_mask(BlockMask mask, std::size_t num_objects) const;

  /// Block set of X if X is a union of blocks, nullopt otherwise.
  std::optional<BlockMask> mask_of(const ObjectSet& x) const;
};

BlockPartition blocks(const FormalContext& ctx);

/// Renders a set as "{g1,g3}" using the context's names.
std::string format_objects(const ObjectSet& x, const FormalContext& ctx);
std::string format_attributes(const AttributeSet& y, const FormalContext& ctx);

/// Parses a comma-separated list of object names ("g1,g3"; "" or "{}" is the
/// empty set). Braces are optional. Throws InvalidArgument on unknown names.
ObjectSet parse_object_list(std::string_view text, const FormalContext& ctx);

}  // namespace gcl

#endif  // GCL_CONTEXT_HPP_
