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

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "odprof/dependency.hpp"
#include "odprof/partition.hpp"
#include "odprof/table.hpp"

namespace odprof {

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

/// Evidence that a pair of rows violates a dependency.
///
/// Split: rows agree on set(lhs) and differ on `differing`, an attribute of
/// the right-hand side. Swap: rows.first strictly precedes rows.second under
/// lhs while rows.second strictly precedes rows.first under rhs.
struct Witness {
  enum class Kind { kSplit, kSwap };

  Kind kind;
  std::pair<RowId, RowId> rows;
  AttributeList lhs;
  AttributeList rhs;
  std::optional<Attribute> differing;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Witnesses sorted by row pair, truncated to a limit; `total` is exact.
struct WitnessList {
  std::vector<Witness> items;
  std::size_t total = 0;
};

/// Pairwise ground truth: for all t, s, t <=_lhs s implies t <=_rhs s.
bool satisfies_od(const Table& table, const AttributeList& lhs, const AttributeList& rhs);
bool order_equivalent(const Table& table, const AttributeList& lhs, const AttributeList& rhs);
/// lhs·rhs <-> rhs·lhs.
bool order_compatible(const Table& table, const AttributeList& lhs, const AttributeList& rhs);
/// Dispatches on the statement kind.
bool satisfies(const Table& table, const ListOD& od);

/// Splits with respect to lhs -> lhs·rhs: pairs (s, t), s < t, agreeing on
/// set(lhs) and differing on set(rhs).
WitnessList find_splits(const Table& table, const AttributeList& lhs, const AttributeList& rhs,
                        std::size_t limit = kNoLimit);
/// Swaps with respect to lhs ~ rhs.
WitnessList find_swaps(const Table& table, const AttributeList& lhs, const AttributeList& rhs,
                       std::size_t limit = kNoLimit);

/// Partition-based check of a canonical statement. Must agree with the
/// pairwise list semantics for every permutation of the context.
bool holds_canonical(const Table& table, const CanonicalDependency& d);
/// Same check against a precomputed partition of d.context(), which may be
/// stripped.
bool holds_canonical(const Table& table, const Partition& context, const CanonicalDependency& d);

/// Constant check of `a` within every class of `context`.
bool constant_within(const Table& table, const Partition& context, Attribute a);
/// Swap-freedom of `a` against `b` within every class of `context`.
bool compatible_within(const Table& table, const Partition& context, Attribute a, Attribute b);

struct Decomposition {
  bool fd_holds;
  bool ocd_holds;
};

/// The FD part lhs -> lhs·rhs and the OCD part lhs ~ rhs of lhs -> rhs.
Decomposition decompose_check(const Table& table, const AttributeList& lhs,
                              const AttributeList& rhs);

}  // namespace odprof
