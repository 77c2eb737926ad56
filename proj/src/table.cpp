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

#include "odprof/table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "odprof/error.hpp"

namespace odprof {

AttributeList AttributeList::concat(const AttributeList& tail) const {
  std::vector<Attribute> out = attrs_;
  out.insert(out.end(), tail.attrs_.begin(), tail.attrs_.end());
  return AttributeList(std::move(out));
}

AttributeList AttributeList::prefix(std::size_t n) const {
  n = std::min(n, attrs_.size());
  return AttributeList(std::vector<Attribute>(attrs_.begin(), attrs_.begin() + n));
}

bool AttributeList::has_repeats() const {
  std::uint64_t seen = 0;
  for (Attribute a : attrs_) {
    const std::uint64_t bit = std::uint64_t{1} << a;
    if ((seen & bit) != 0) return true;
    seen |= bit;
  }
  return false;
}

bool AttributeList::is_prefix_of(const AttributeList& other) const {
  return attrs_.size() <= other.attrs_.size() &&
         std::equal(attrs_.begin(), attrs_.end(), other.attrs_.begin());
}

AttributeSet::AttributeSet(std::initializer_list<Attribute> attrs) {
  for (Attribute a : attrs) *this = with(a);
}

AttributeSet::AttributeSet(const AttributeList& list) {
  for (Attribute a : list) *this = with(a);
}

AttributeSet AttributeSet::with(Attribute a) const {
  if (a >= kMaxArity) throw std::out_of_range("attribute index exceeds set capacity");
  return from_mask(mask_ | (std::uint64_t{1} << a));
}

AttributeSet AttributeSet::without(Attribute a) const {
  if (a >= kMaxArity) return *this;
  return from_mask(mask_ & ~(std::uint64_t{1} << a));
}

std::vector<Attribute> AttributeSet::members() const {
  std::vector<Attribute> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<Attribute>(std::countr_zero(m)));
  }
  return out;
}

std::strong_ordering compare_sets(AttributeSet a, AttributeSet b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.members() <=> b.members();
}

Table::Table(std::string name, std::vector<Column> schema, std::vector<std::vector<Value>> rows)
    : name_(std::move(name)), schema_(std::move(schema)) {
  if (schema_.size() > kMaxArity) {
    throw std::invalid_argument("schema has more than " + std::to_string(kMaxArity) + " columns");
  }
  std::set<std::string_view> names;
  for (const Column& c : schema_) {
    if (!names.insert(c.name).second) {
      throw std::invalid_argument("duplicate attribute name '" + c.name + "'");
    }
  }
  tuples_.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != schema_.size()) {
      throw std::invalid_argument("row " + std::to_string(r) + " has " +
                                  std::to_string(rows[r].size()) + " cells, expected " +
                                  std::to_string(schema_.size()));
    }
    for (std::size_t a = 0; a < schema_.size(); ++a) {
      if (rows[r][a].type() != schema_[a].type) {
        throw TypeError("row " + std::to_string(r) + " column '" + schema_[a].name + "' holds " +
                        std::string(to_string(rows[r][a].type())) + ", expected " +
                        std::string(to_string(schema_[a].type)));
      }
    }
    tuples_.emplace_back(r, std::move(rows[r]));
  }

  ranks_.assign(schema_.size(), std::vector<std::uint32_t>(tuples_.size(), 0));
  std::vector<RowId> order(tuples_.size());
  for (std::size_t a = 0; a < schema_.size(); ++a) {
    std::iota(order.begin(), order.end(), RowId{0});
    std::stable_sort(order.begin(), order.end(), [&](RowId x, RowId y) {
      return compare_values(tuples_[x][a], tuples_[y][a]) < 0;
    });
    std::uint32_t rank = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0 && compare_values(tuples_[order[i - 1]][a], tuples_[order[i]][a]) != 0) ++rank;
      ranks_[a][order[i]] = rank;
    }
  }
}

Attribute Table::attribute(std::string_view name) const {
  for (std::size_t a = 0; a < schema_.size(); ++a) {
    if (schema_[a].name == name) return a;
  }
  throw ParseError("unknown attribute '" + std::string(name) + "'");
}

AttributeSet Table::all_attributes() const {
  return AttributeSet::from_mask(arity() == 64 ? ~std::uint64_t{0}
                                               : (std::uint64_t{1} << arity()) - 1);
}

void Table::check_attributes(const AttributeList& list) const {
  for (Attribute a : list) {
    if (a >= arity()) {
      throw std::out_of_range("attribute index " + std::to_string(a) + " outside schema of " +
                              std::to_string(arity()));
    }
  }
}

void Table::check_attributes(AttributeSet set) const {
  if (!set.is_subset_of(all_attributes())) {
    throw std::out_of_range("attribute set outside schema of " + std::to_string(arity()));
  }
}

bool leq_lex(const Tuple& t, const Tuple& s, const AttributeList& attrs) {
  for (Attribute a : attrs) {
    const auto c = compare_values(t[a], s[a]);
    if (c < 0) return true;
    if (c > 0) return false;
  }
  return true;
}

bool strict_less_lex(const Tuple& t, const Tuple& s, const AttributeList& attrs) {
  return leq_lex(t, s, attrs) && !leq_lex(s, t, attrs);
}

int compare_rows(const Table& table, RowId t, RowId s, std::span<const Attribute> attrs) {
  for (Attribute a : attrs) {
    const std::uint32_t x = table.rank(t, a);
    const std::uint32_t y = table.rank(s, a);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

}  // namespace odprof
