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
#include <vector>

#include "odprof/dependency.hpp"
#include "odprof/table.hpp"

namespace odprof {

struct MinimalityPolicy;

/// Limits for exhaustive enumeration.
struct EnumerationBounds {
  /// Longest list on either side; at least 1.
  std::size_t max_list_len = 2;
  /// Permit attributes shared between the two sides (common prefixes).
  bool allow_repeats = true;
  /// Reject wider schemas instead of truncating.
  std::size_t max_attrs = 6;
};

struct OracleOD {
  ListOD od;
  /// Holds on every table: the right side is a prefix of the left.
  bool trivial;

  friend bool operator==(const OracleOD&, const OracleOD&) = default;
};

/// Throws BoundsError if `table` or `b` are outside the guard.
void check_bounds(const Table& table, const EnumerationBounds& b);

/// Every repeat-free list over the schema with length in [min_len, max_len],
/// in lexicographic order.
std::vector<AttributeList> enumerate_lists(std::size_t arity, std::size_t min_len,
                                           std::size_t max_len);

/// All non-trivial order compatibilities lhs ~ rhs within bounds that hold
/// pairwise, one per symmetric pair (lhs <= rhs lexicographically).
std::vector<ListOD> enumerate_valid_ocds(const Table& table, const EnumerationBounds& b);

/// All lhs -> rhs within bounds (either side may be empty) that hold
/// pairwise, each flagged trivial or not.
std::vector<OracleOD> enumerate_valid_list_ods(const Table& table, const EnumerationBounds& b);

/// Whether `canon`, read through the minimality rules of `pol`, characterizes
/// list-level validity exactly: every OD in bounds holds pairwise iff all of
/// its canonical images are derivable from `canon`, and each image is
/// derivable iff it holds on the table.
bool canonical_closure_agrees(const Table& table, const DependencySet& canon,
                              const EnumerationBounds& b, const MinimalityPolicy& pol);
bool canonical_closure_agrees(const Table& table, const DependencySet& canon,
                              const EnumerationBounds& b);

/// Every canonical statement over the schema with context size at most
/// `max_context`, in DependencySet order.
std::vector<CanonicalDependency> enumerate_canonical(std::size_t arity, std::size_t max_context);

}  // namespace odprof
