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

#include "odprof/checker.hpp"

#include <algorithm>
#include <limits>

namespace odprof {

namespace {

bool agree_on(const Table& table, RowId t, RowId s, AttributeSet attrs) {
  for (Attribute a : attrs.members()) {
    if (table.rank(t, a) != table.rank(s, a)) return false;
  }
  return true;
}

void push_capped(WitnessList& out, Witness w, std::size_t limit) {
  ++out.total;
  if (out.items.size() < limit) out.items.push_back(std::move(w));
}

}  // namespace

bool satisfies_od(const Table& table, const AttributeList& lhs, const AttributeList& rhs) {
  table.check_attributes(lhs);
  table.check_attributes(rhs);
  const std::size_t n = table.size();
  for (RowId t = 0; t < n; ++t) {
    for (RowId s = 0; s < n; ++s) {
      if (compare_rows(table, t, s, lhs.view()) <= 0 && compare_rows(table, t, s, rhs.view()) > 0) {
        return false;
      }
    }
  }
  return true;
}

bool order_equivalent(const Table& table, const AttributeList& lhs, const AttributeList& rhs) {
  return satisfies_od(table, lhs, rhs) && satisfies_od(table, rhs, lhs);
}

bool order_compatible(const Table& table, const AttributeList& lhs, const AttributeList& rhs) {
  return order_equivalent(table, lhs.concat(rhs), rhs.concat(lhs));
}

bool satisfies(const Table& table, const ListOD& od) {
  switch (od.kind()) {
    case ListOD::Kind::kOrders:
      return satisfies_od(table, od.lhs(), od.rhs());
    case ListOD::Kind::kOrderEquivalent:
      return order_equivalent(table, od.lhs(), od.rhs());
    case ListOD::Kind::kOrderCompatible:
      return order_compatible(table, od.lhs(), od.rhs());
  }
  return false;
}

WitnessList find_splits(const Table& table, const AttributeList& lhs, const AttributeList& rhs,
                        std::size_t limit) {
  table.check_attributes(lhs);
  table.check_attributes(rhs);
  const AttributeSet agreed(lhs);
  WitnessList out;
  const std::size_t n = table.size();
  for (RowId s = 0; s < n; ++s) {
    for (RowId t = s + 1; t < n; ++t) {
      if (!agree_on(table, s, t, agreed)) continue;
      for (Attribute a : rhs) {
        if (table.rank(s, a) != table.rank(t, a)) {
          push_capped(out, Witness{Witness::Kind::kSplit, {s, t}, lhs, rhs, a}, limit);
          break;
        }
      }
    }
  }
  return out;
}

WitnessList find_swaps(const Table& table, const AttributeList& lhs, const AttributeList& rhs,
                       std::size_t limit) {
  table.check_attributes(lhs);
  table.check_attributes(rhs);
  WitnessList out;
  const std::size_t n = table.size();
  for (RowId s = 0; s < n; ++s) {
    for (RowId t = 0; t < n; ++t) {
      if (compare_rows(table, s, t, lhs.view()) < 0 && compare_rows(table, t, s, rhs.view()) < 0) {
        push_capped(out, Witness{Witness::Kind::kSwap, {s, t}, lhs, rhs, std::nullopt}, limit);
      }
    }
  }
  return out;
}

bool constant_within(const Table& table, const Partition& context, Attribute a) {
  for (const auto& cls : context.classes()) {
    const std::uint32_t first = table.rank(cls.front(), a);
    for (RowId r : cls) {
      if (table.rank(r, a) != first) return false;
    }
  }
  return true;
}

bool compatible_within(const Table& table, const Partition& context, Attribute a, Attribute b) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> keyed;
  for (const auto& cls : context.classes()) {
    if (cls.size() < 2) continue;
    keyed.clear();
    for (RowId r : cls) keyed.emplace_back(table.rank(r, a), table.rank(r, b));
    std::sort(keyed.begin(), keyed.end());
    // A swap exists iff some earlier a-group has a larger b than a later
    // a-group's smallest b.
    std::uint32_t max_before = 0;
    bool any_before = false;
    std::size_t i = 0;
    while (i < keyed.size()) {
      std::size_t j = i;
      std::uint32_t group_max = keyed[i].second;
      while (j < keyed.size() && keyed[j].first == keyed[i].first) {
        group_max = std::max(group_max, keyed[j].second);
        ++j;
      }
      if (any_before && max_before > keyed[i].second) return false;
      max_before = any_before ? std::max(max_before, group_max) : group_max;
      any_before = true;
      i = j;
    }
  }
  return true;
}

bool holds_canonical(const Table& table, const Partition& context, const CanonicalDependency& d) {
  if (d.is_trivial()) return true;
  if (d.is_constant()) return constant_within(table, context, d.first());
  return compatible_within(table, context, d.first(), d.second());
}

bool holds_canonical(const Table& table, const CanonicalDependency& d) {
  table.check_attributes(d.context().with(d.first()).with(d.second()));
  return holds_canonical(table, partition(table, d.context()), d);
}

Decomposition decompose_check(const Table& table, const AttributeList& lhs,
                              const AttributeList& rhs) {
  return Decomposition{satisfies_od(table, lhs, lhs.concat(rhs)),
                       order_compatible(table, lhs, rhs)};
}

}  // namespace odprof
