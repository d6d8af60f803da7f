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

#include "gcl/context.hpp"

#include <charconv>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "gcl/error.hpp"

namespace gcl {

namespace {

void check_unique(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second)
      throw InvalidArgument(std::string("duplicate ") + what + " name '" + n +
                            "'");
  }
}

void check_width(std::size_t got, std::size_t want) {
  if (got != want) throw InvalidArgument("set width mismatch");
}

// Splits into lines, dropping a trailing '\r' from each.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(std::string_view s, std::size_t line) {
  s = trim(s);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("malformed header: expected a count, got '" +
                         std::string(s) + "'",
                     line);
  return value;
}

FormalContext build_checked(std::vector<std::string> objects,
                            std::vector<std::string> attributes,
                            const std::vector<std::vector<bool>>& incidence,
                            std::size_t objects_line,
                            std::size_t attributes_line) {
  auto duplicate_line = [](const std::vector<std::string>& names,
                           std::size_t first_line) -> std::size_t {
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (!seen.insert(names[i]).second) return first_line + i;
    return 0;
  };
  if (auto l = duplicate_line(objects, objects_line))
    throw ParseError("duplicate object name '" +
                         objects[l - objects_line] + "'",
                     l);
  if (auto l = duplicate_line(attributes, attributes_line))
    throw ParseError("duplicate attribute name '" +
                         attributes[l - attributes_line] + "'",
                     l);
  return FormalContext(std::move(objects), std::move(attributes), incidence);
}

FormalContext parse_cxt(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;  // index of next line; line number is i + 1
  auto next = [&](const char* expected) -> std::string_view {
    if (i >= lines.size())
      throw ParseError(std::string("unexpected end of input, expected ") +
                           expected,
                       i + 1);
    return lines[i++];
  };
  if (trim(next("'B'")) != "B")
    throw ParseError("malformed header: first line must be 'B'", 1);
  if (!trim(next("blank line")).empty())
    throw ParseError("malformed header: expected blank line after 'B'", 2);
  const auto obj_text = next("object count");
  const std::size_t n_obj = parse_count(obj_text, i);
  const auto att_text = next("attribute count");
  const std::size_t n_att = parse_count(att_text, i);
  if (i < lines.size() && trim(lines[i]).empty()) ++i;

  std::vector<std::string> objects, attributes;
  const std::size_t objects_line = i + 1;
  for (std::size_t k = 0; k < n_obj; ++k) {
    auto name = trim(next("object name"));
    if (name.empty()) throw ParseError("empty object name", i);
    objects.emplace_back(name);
  }
  const std::size_t attributes_line = i + 1;
  for (std::size_t k = 0; k < n_att; ++k) {
    auto name = trim(next("attribute name"));
    if (name.empty()) throw ParseError("empty attribute name", i);
    attributes.emplace_back(name);
  }
  std::vector<std::vector<bool>> incidence(n_obj, std::vector<bool>(n_att));
  for (std::size_t g = 0; g < n_obj; ++g) {
    auto row = trim(next("incidence row"));
    const std::size_t line = i;
    if (row.size() != n_att)
      throw ParseError("dimension mismatch: row has " +
                           std::to_string(row.size()) + " cells, expected " +
                           std::to_string(n_att),
                       line);
    for (std::size_t m = 0; m < n_att; ++m) {
      const char c = row[m];
      if (c == 'X') {
        incidence[g][m] = true;
      } else if (c != '.') {
        throw ParseError(std::string("illegal cell character '") + c + "'",
                         line);
      }
    }
  }
  for (; i < lines.size(); ++i) {
    if (!trim(lines[i]).empty())
      throw ParseError("dimension mismatch: unexpected content after " +
                           std::to_string(n_obj) + " incidence rows",
                       i + 1);
  }
  return build_checked(std::move(objects), std::move(attributes), incidence,
                       objects_line, attributes_line);
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(pos)));
      return cells;
    }
    cells.push_back(trim(line.substr(pos, comma - pos)));
    pos = comma + 1;
  }
}

FormalContext parse_csv(std::string_view text) {
  auto lines = split_lines(text);
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("malformed header: empty input", 1);

  auto header = split_csv(lines[0]);
  // ",a,b": the first cell is empty; a header that is just "" means zero
  // attributes.
  if (!header[0].empty())
    throw ParseError("malformed header: expected ',attr1,attr2,...'", 1);
  std::vector<std::string> attributes;
  for (std::size_t k = 1; k < header.size(); ++k) {
    if (header[k].empty()) throw ParseError("empty attribute name", 1);
    attributes.emplace_back(header[k]);
  }

  const std::size_t n_att = attributes.size();
  std::vector<std::string> objects;
  std::vector<std::vector<bool>> incidence;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const std::size_t line = li + 1;
    auto cells = split_csv(lines[li]);
    if (cells.size() != n_att + 1)
      throw ParseError("dimension mismatch: row has " +
                           std::to_string(cells.size() - 1) +
                           " cells, expected " + std::to_string(n_att),
                       line);
    if (cells[0].empty()) throw ParseError("empty object name", line);
    objects.emplace_back(cells[0]);
    std::vector<bool> row(n_att);
    for (std::size_t m = 0; m < n_att; ++m) {
      auto c = cells[m + 1];
      if (c == "1" || c == "X") {
        row[m] = true;
      } else if (c != "0" && c != ".") {
        throw ParseError("illegal cell character '" + std::string(c) + "'",
                         line);
      }
    }
    incidence.push_back(std::move(row));
  }
  return build_checked(std::move(objects), std::move(attributes), incidence, 2,
                       1);
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects,
                             std::vector<std::string> attributes,
                             const std::vector<std::vector<bool>>& incidence)
    : objects_(std::move(objects)), attributes_(std::move(attributes)) {
  check_unique(objects_, "object");
  check_unique(attributes_, "attribute");
  if (incidence.size() != objects_.size())
    throw InvalidArgument("incidence matrix has " +
                          std::to_string(incidence.size()) + " rows, expected " +
                          std::to_string(objects_.size()));
  const std::size_t n = objects_.size(), k = attributes_.size();
  rows_.assign(n, AttributeSet(k));
  columns_.assign(k, ObjectSet(n));
  for (std::size_t g = 0; g < n; ++g) {
    if (incidence[g].size() != k)
      throw InvalidArgument("incidence row " + std::to_string(g) + " has " +
                            std::to_string(incidence[g].size()) +
                            " cells, expected " + std::to_string(k));
    for (std::size_t m = 0; m < k; ++m) {
      if (incidence[g][m]) {
        rows_[g].set(m);
        columns_[m].set(g);
      }
    }
  }
}

std::uint64_t FormalContext::row_code(std::size_t g) const {
  if (num_attributes() > 63)
    throw InvalidArgument("row_code requires at most 63 attributes");
  const auto& words = rows_.at(g).words();
  return words.empty() ? 0 : words[0];
}

std::optional<std::size_t> FormalContext::object_index(std::string_view name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> FormalContext::attribute_index(
    std::string_view name) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i)
    if (attributes_[i] == name) return i;
  return std::nullopt;
}

FormalContext parse_context(std::string_view text, ContextFormat format) {
  return format == ContextFormat::kCxt ? parse_cxt(text) : parse_csv(text);
}

FormalContext parse_context_auto(std::string_view text) {
  auto lines = split_lines(text);
  if (!lines.empty() && trim(lines[0]) == "B")
    return parse_cxt(text);
  return parse_csv(text);
}

std::string write_cxt(const FormalContext& ctx) {
  std::ostringstream out;
  out << "B\n\n" << ctx.num_objects() << '\n' << ctx.num_attributes() << "\n\n";
  for (const auto& n : ctx.objects()) out << n << '\n';
  for (const auto& n : ctx.attributes()) out << n << '\n';
  for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m)
      out << (ctx.incident(g, m) ? 'X' : '.');
    out << '\n';
  }
  return out.str();
}

std::string write_csv(const FormalContext& ctx) {
  std::ostringstream out;
  for (const auto& n : ctx.attributes()) out << ',' << n;
  out << '\n';
  for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
    out << ctx.objects()[g];
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m)
      out << ',' << (ctx.incident(g, m) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

AttributeSet intent_of(const ObjectSet& x, const FormalContext& ctx) {
  check_width(x.width(), ctx.num_objects());
  AttributeSet y = ctx.all_attributes();
  x.for_each([&](std::size_t g) { y &= ctx.row(g); });
  return y;
}

ObjectSet extent_of(const AttributeSet& y, const FormalContext& ctx) {
  check_width(y.width(), ctx.num_attributes());
  ObjectSet x = ctx.all_objects();
  y.for_each([&](std::size_t m) { x &= ctx.column(m); });
  return x;
}

AttributeSet box_of(const ObjectSet& x, const FormalContext& ctx) {
  check_width(x.width(), ctx.num_objects());
  AttributeSet y = ctx.empty_attributes();
  for (std::size_t m = 0; m < ctx.num_attributes(); ++m)
    if (ctx.column(m).is_subset_of(x)) y.set(m);
  return y;
}

AttributeSet diamond_of(const ObjectSet& x, const FormalContext& ctx) {
  check_width(x.width(), ctx.num_objects());
  AttributeSet y = ctx.empty_attributes();
  x.for_each([&](std::size_t g) { y |= ctx.row(g); });
  return y;
}

ObjectSet approx_box(const AttributeSet& y, const FormalContext& ctx) {
  check_width(y.width(), ctx.num_attributes());
  ObjectSet x = ctx.empty_objects();
  for (std::size_t g = 0; g < ctx.num_objects(); ++g)
    if (ctx.row(g).is_subset_of(y)) x.set(g);
  return x;
}

ObjectSet approx_diamond(const AttributeSet& y, const FormalContext& ctx) {
  check_width(y.width(), ctx.num_attributes());
  ObjectSet x = ctx.empty_objects();
  y.for_each([&](std::size_t m) { x |= ctx.column(m); });
  return x;
}

ObjectSet BlockPartition::extent_of_mask(BlockMask mask,
                                         std::size_t num_objects) const {
  ObjectSet x(num_objects);
  for (std::size_t k = 0; k < blocks.size(); ++k)
    if ((mask >> k) & 1u) x |= blocks[k].extent;
  return x;
}

std::optional<BlockMask> BlockPartition::mask_of(const ObjectSet& x) const {
  BlockMask mask = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& d = blocks[k].extent;
    if (d.is_subset_of(x)) {
      mask |= BlockMask{1} << k;
    } else if (d.intersects(x)) {
      return std::nullopt;
    }
  }
  return mask;
}

BlockPartition blocks(const FormalContext& ctx) {
  BlockPartition part;
  std::unordered_map<AttributeSet, std::size_t> by_row;
  for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
    const auto& row = ctx.row(g);
    auto [it, inserted] = by_row.try_emplace(row, part.blocks.size());
    if (inserted) part.blocks.push_back({ctx.empty_objects(), row});
    part.blocks[it->second].extent.set(g);
  }
  return part;
}

std::string format_objects(const ObjectSet& x, const FormalContext& ctx) {
  std::string s = "{";
  bool first = true;
  x.for_each([&](std::size_t g) {
    if (!first) s += ',';
    s += ctx.objects()[g];
    first = false;
  });
  return s + "}";
}

std::string format_attributes(const AttributeSet& y, const FormalContext& ctx) {
  std::string s = "{";
  bool first = true;
  y.for_each([&](std::size_t m) {
    if (!first) s += ',';
    s += ctx.attributes()[m];
    first = false;
  });
  return s + "}";
}

ObjectSet parse_object_list(std::string_view text, const FormalContext& ctx) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') text.remove_prefix(1);
  if (!text.empty() && text.back() == '}') text.remove_suffix(1);
  ObjectSet x = ctx.empty_objects();
  if (trim(text).empty()) return x;
  for (auto name : split_csv(text)) {
    auto g = ctx.object_index(name);
    if (!g) throw InvalidArgument("unknown object '" + std::string(name) + "'");
    x.set(*g);
  }
  return x;
}

}  // namespace gcl
