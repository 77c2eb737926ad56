// Copyright 2026 The odprof Authors
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

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "odprof/value.hpp"

namespace odprof {

using Attribute = std::size_t;
using RowId = std::size_t;

/// Widest schema supported; attribute sets are 64-bit masks.
inline constexpr std::size_t kMaxArity = 64;

/// Ordered attribute sequence. Repeats are allowed and the list may be empty.
class AttributeList {
 public:
  AttributeList() = default;
  AttributeList(std::initializer_list<Attribute> attrs) : attrs_(attrs) {}
  explicit AttributeList(std::vector<Attribute> attrs) : attrs_(std::move(attrs)) {}

  std::size_t size() const { return attrs_.size(); }
  bool empty() const { return attrs_.empty(); }
  Attribute operator[](std::size_t i) const { return attrs_[i]; }
  auto begin() const { return attrs_.begin(); }
  auto end() const { return attrs_.end(); }
  std::span<const Attribute> view() const { return attrs_; }

  void push_back(Attribute a) { attrs_.push_back(a); }
  /// This list followed by `tail`.
  AttributeList concat(const AttributeList& tail) const;
  /// First `n` attributes.
  AttributeList prefix(std::size_t n) const;
  bool has_repeats() const;
  bool is_prefix_of(const AttributeList& other) const;

  friend auto operator<=>(const AttributeList&, const AttributeList&) = default;
  friend bool operator==(const AttributeList&, const AttributeList&) = default;

 private:
  std::vector<Attribute> attrs_;
};

/// Unordered attribute collection backed by a 64-bit mask.
class AttributeSet {
 public:
  AttributeSet() = default;
  AttributeSet(std::initializer_list<Attribute> attrs);
  explicit AttributeSet(const AttributeList& list);
  static AttributeSet from_mask(std::uint64_t mask) {
    AttributeSet s;
    s.mask_ = mask;
    return s;
  }

  std::uint64_t mask() const { return mask_; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  bool empty() const { return mask_ == 0; }
  bool contains(Attribute a) const { return a < kMaxArity && ((mask_ >> a) & 1U) != 0; }
  bool is_subset_of(AttributeSet other) const { return (mask_ & ~other.mask_) == 0; }
  bool intersects(AttributeSet other) const { return (mask_ & other.mask_) != 0; }

  AttributeSet with(Attribute a) const;
  AttributeSet without(Attribute a) const;
  AttributeSet united(AttributeSet other) const { return from_mask(mask_ | other.mask_); }

  /// Members in ascending index order.
  std::vector<Attribute> members() const;

  friend bool operator==(AttributeSet, AttributeSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Deterministic order over sets: by size, then by ascending member indices.
std::strong_ordering compare_sets(AttributeSet a, AttributeSet b);

struct Column {
  std::string name;
  ValueType type;

  friend bool operator==(const Column&, const Column&) = default;
};

/// A row of a table together with its zero-based position.
class Tuple {
 public:
  Tuple(RowId row_id, std::vector<Value> cells) : row_id_(row_id), cells_(std::move(cells)) {}

  RowId row_id() const { return row_id_; }
  const Value& operator[](Attribute a) const { return cells_[a]; }
  std::span<const Value> cells() const { return cells_; }
  std::size_t arity() const { return cells_.size(); }

  friend bool operator==(const Tuple&, const Tuple&) = default;

 private:
  RowId row_id_;
  std::vector<Value> cells_;
};

/// Immutable typed row store.
///
/// Besides the values themselves, every column is dictionary encoded into
/// dense order-preserving ranks so that hot loops compare integers only.
class Table {
 public:
  Table(std::string name, std::vector<Column> schema, std::vector<std::vector<Value>> rows);

  const std::string& name() const { return name_; }
  std::span<const Column> schema() const { return schema_; }
  std::size_t arity() const { return schema_.size(); }
  std::size_t size() const { return tuples_.size(); }
  const Tuple& row(RowId r) const { return tuples_[r]; }
  std::span<const Tuple> rows() const { return tuples_; }

  const std::string& attribute_name(Attribute a) const { return schema_.at(a).name; }
  /// Throws ParseError if there is no such column.
  Attribute attribute(std::string_view name) const;
  AttributeSet all_attributes() const;

  /// Rank of the cell in its column; equal values share a rank.
  std::uint32_t rank(RowId r, Attribute a) const { return ranks_[a][r]; }
  std::span<const std::uint32_t> column_ranks(Attribute a) const { return ranks_[a]; }

  void check_attributes(const AttributeList& list) const;
  void check_attributes(AttributeSet set) const;

  friend bool operator==(const Table& a, const Table& b) {
    return a.schema_ == b.schema_ && a.tuples_ == b.tuples_;
  }

 private:
  std::string name_;
  std::vector<Column> schema_;
  std::vector<Tuple> tuples_;
  std::vector<std::vector<std::uint32_t>> ranks_;
};

/// t precedes-or-ties s under the lexicographic order induced by `attrs`.
/// True for the empty list.
bool leq_lex(const Tuple& t, const Tuple& s, const AttributeList& attrs);
/// t strictly precedes s: leq_lex(t, s) and not leq_lex(s, t).
bool strict_less_lex(const Tuple& t, const Tuple& s, const AttributeList& attrs);

/// Rank-based three-way comparison of two rows of `table` over `attrs`.
/// Agrees with leq_lex; used by the checkers.
int compare_rows(const Table& table, RowId t, RowId s, std::span<const Attribute> attrs);

}  // namespace odprof
