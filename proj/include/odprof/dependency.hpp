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

#include <compare>
#include <cstddef>
#include <set>
#include <vector>

#include "odprof/table.hpp"

namespace odprof {

/// A list-based statement: lhs orders rhs, the two are order equivalent, or
/// the two are order compatible.
class ListOD {
 public:
  enum class Kind { kOrders, kOrderEquivalent, kOrderCompatible };

  static ListOD orders(AttributeList lhs, AttributeList rhs) {
    return ListOD(Kind::kOrders, std::move(lhs), std::move(rhs));
  }
  static ListOD equivalent(AttributeList lhs, AttributeList rhs) {
    return ListOD(Kind::kOrderEquivalent, std::move(lhs), std::move(rhs));
  }
  static ListOD compatible(AttributeList lhs, AttributeList rhs) {
    return ListOD(Kind::kOrderCompatible, std::move(lhs), std::move(rhs));
  }

  Kind kind() const { return kind_; }
  const AttributeList& lhs() const { return lhs_; }
  const AttributeList& rhs() const { return rhs_; }

  /// For an order compatibility lhs ~ rhs, the defining equivalence
  /// lhs·rhs <-> rhs·lhs. Other kinds are returned unchanged.
  ListOD as_equivalence() const;

  friend auto operator<=>(const ListOD&, const ListOD&) = default;
  friend bool operator==(const ListOD&, const ListOD&) = default;

 private:
  ListOD(Kind kind, AttributeList lhs, AttributeList rhs)
      : kind_(kind), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

  Kind kind_;
  AttributeList lhs_;
  AttributeList rhs_;
};

/// Set-based canonical statement evaluated within the classes of a context:
/// either `context: [] -> a` (a is constant) or `context: a ~ b` (no swap
/// between a and b).
class CanonicalDependency {
 public:
  enum class Kind { kConstant, kCompatible };

  /// Throws std::invalid_argument when `a` lies in `context`.
  static CanonicalDependency constant(AttributeSet context, Attribute a);
  /// Throws std::invalid_argument when a == b or either lies in `context`.
  /// The pair is stored with the smaller index first.
  static CanonicalDependency compatible(AttributeSet context, Attribute a, Attribute b);

  /// Statements that hold on every table. Only produced on request.
  static CanonicalDependency trivial_constant(AttributeSet context, Attribute a);
  static CanonicalDependency trivial_compatible(AttributeSet context, Attribute a, Attribute b);

  Kind kind() const { return kind_; }
  bool is_constant() const { return kind_ == Kind::kConstant; }
  AttributeSet context() const { return context_; }
  /// The constant attribute, or the smaller side of a compatibility.
  Attribute first() const { return first_; }
  /// Larger side of a compatibility; equals first() for constants.
  Attribute second() const { return second_; }
  bool is_trivial() const;

  /// Same body, different context.
  CanonicalDependency in_context(AttributeSet context) const;

  friend bool operator==(const CanonicalDependency&, const CanonicalDependency&) = default;
  /// Context size, then context members, then body (constants first).
  friend std::strong_ordering operator<=>(const CanonicalDependency& a,
                                          const CanonicalDependency& b);

 private:
  CanonicalDependency(Kind kind, AttributeSet context, Attribute first, Attribute second)
      : kind_(kind), context_(context), first_(first), second_(second) {}

  Kind kind_;
  AttributeSet context_;
  Attribute first_;
  Attribute second_;
};

/// Deduplicated canonical statements with a stable iteration order.
class DependencySet {
 public:
  DependencySet() = default;
  DependencySet(std::initializer_list<CanonicalDependency> items) : items_(items) {}

  bool insert(const CanonicalDependency& d) { return items_.insert(d).second; }
  void merge(const DependencySet& other) { items_.insert(other.items_.begin(), other.items_.end()); }
  bool contains(const CanonicalDependency& d) const { return items_.contains(d); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  friend bool operator==(const DependencySet&, const DependencySet&) = default;

 private:
  std::set<CanonicalDependency> items_;
};

/// The OD form of the FD set(lhs) -> set(rhs): lhs orders lhs·rhs.
ListOD fd_as_od(const AttributeList& lhs, const AttributeList& rhs);

/// context: [] -> a for every a in `rhs`, skipping members of the context.
DependencySet map_fd_to_canonical(AttributeSet context, const AttributeList& rhs);

/// For every position pair (i, j): the statement
/// {lhs_1..lhs_{i-1}, rhs_1..rhs_{j-1}}: lhs_i ~ rhs_j, skipping trivial ones.
DependencySet map_ocd_to_canonical(const AttributeList& lhs, const AttributeList& rhs);

/// Canonical image of the OD lhs -> rhs; at most |rhs| + |lhs|·|rhs| items.
DependencySet map_od_to_canonical(const AttributeList& lhs, const AttributeList& rhs);

}  // namespace odprof
