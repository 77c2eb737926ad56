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

#include "odprof/oracle.hpp"

#include <algorithm>
#include <map>

#include "odprof/checker.hpp"
#include "odprof/discovery_set.hpp"
#include "odprof/error.hpp"

namespace odprof {

namespace {

void extend_lists(std::size_t arity, std::size_t min_len, std::size_t max_len,
                  std::vector<Attribute>& current, std::uint64_t used,
                  std::vector<AttributeList>& out) {
  if (current.size() >= min_len) out.emplace_back(current);
  if (current.size() == max_len) return;
  for (Attribute a = 0; a < arity; ++a) {
    if ((used >> a) & 1U) continue;
    current.push_back(a);
    extend_lists(arity, min_len, max_len, current, used | (std::uint64_t{1} << a), out);
    current.pop_back();
  }
}

bool admissible(const AttributeList& lhs, const AttributeList& rhs, const EnumerationBounds& b) {
  return b.allow_repeats || !AttributeSet(lhs).intersects(AttributeSet(rhs));
}

}  // namespace

void check_bounds(const Table& table, const EnumerationBounds& b) {
  if (b.max_list_len < 1) throw BoundsError("max list length must be at least 1");
  if (table.arity() > b.max_attrs) {
    throw BoundsError("schema has " + std::to_string(table.arity()) +
                      " attributes, enumeration guard is " + std::to_string(b.max_attrs));
  }
}

std::vector<AttributeList> enumerate_lists(std::size_t arity, std::size_t min_len,
                                           std::size_t max_len) {
  std::vector<AttributeList> out;
  std::vector<Attribute> current;
  extend_lists(arity, min_len, std::min(max_len, arity), current, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ListOD> enumerate_valid_ocds(const Table& table, const EnumerationBounds& b) {
  check_bounds(table, b);
  const std::vector<AttributeList> lists = enumerate_lists(table.arity(), 1, b.max_list_len);
  std::vector<ListOD> out;
  for (std::size_t i = 0; i < lists.size(); ++i) {
    for (std::size_t j = i; j < lists.size(); ++j) {
      const AttributeList& lhs = lists[i];
      const AttributeList& rhs = lists[j];
      if (!admissible(lhs, rhs, b)) continue;
      // An empty canonical image means one side is a prefix of the other.
      if (map_ocd_to_canonical(lhs, rhs).empty()) continue;
      if (order_compatible(table, lhs, rhs)) out.push_back(ListOD::compatible(lhs, rhs));
    }
  }
  return out;
}

std::vector<OracleOD> enumerate_valid_list_ods(const Table& table, const EnumerationBounds& b) {
  check_bounds(table, b);
  const std::vector<AttributeList> lists = enumerate_lists(table.arity(), 0, b.max_list_len);
  std::vector<OracleOD> out;
  for (const auto& lhs : lists) {
    for (const auto& rhs : lists) {
      if (!admissible(lhs, rhs, b)) continue;
      if (satisfies_od(table, lhs, rhs)) {
        out.push_back(OracleOD{ListOD::orders(lhs, rhs), rhs.is_prefix_of(lhs)});
      }
    }
  }
  return out;
}

bool canonical_closure_agrees(const Table& table, const DependencySet& canon,
                              const EnumerationBounds& b, const MinimalityPolicy& pol) {
  check_bounds(table, b);
  std::map<CanonicalDependency, bool> image_valid;
  auto image_ok = [&](const CanonicalDependency& d) -> std::optional<bool> {
    if (auto it = image_valid.find(d); it != image_valid.end()) return it->second;
    const bool derivable = derive(canon, d, pol).has_value();
    if (derivable != holds_canonical(table, d)) return std::nullopt;
    image_valid.emplace(d, derivable);
    return derivable;
  };

  const std::vector<AttributeList> lists = enumerate_lists(table.arity(), 0, b.max_list_len);
  for (const auto& lhs : lists) {
    for (const auto& rhs : lists) {
      if (!admissible(lhs, rhs, b)) continue;
      bool all_images = true;
      for (const auto& d : map_od_to_canonical(lhs, rhs)) {
        const std::optional<bool> ok = image_ok(d);
        if (!ok) return false;
        all_images = all_images && *ok;
      }
      if (all_images != satisfies_od(table, lhs, rhs)) return false;
    }
  }
  return true;
}

bool canonical_closure_agrees(const Table& table, const DependencySet& canon,
                              const EnumerationBounds& b) {
  return canonical_closure_agrees(table, canon, b, MinimalityPolicy{});
}

std::vector<CanonicalDependency> enumerate_canonical(std::size_t arity, std::size_t max_context) {
  if (arity > 24) throw BoundsError("canonical enumeration is limited to 24 attributes");
  DependencySet all;
  const std::uint64_t limit = std::uint64_t{1} << arity;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const AttributeSet context = AttributeSet::from_mask(mask);
    if (context.size() > max_context) continue;
    for (Attribute a = 0; a < arity; ++a) {
      if (context.contains(a)) continue;
      all.insert(CanonicalDependency::constant(context, a));
      for (Attribute b = a + 1; b < arity; ++b) {
        if (!context.contains(b)) all.insert(CanonicalDependency::compatible(context, a, b));
      }
    }
  }
  return {all.begin(), all.end()};
}

}  // namespace odprof
