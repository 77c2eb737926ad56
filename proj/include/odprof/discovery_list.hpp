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
#include "odprof/oracle.hpp"
#include "odprof/table.hpp"

namespace odprof {

/// Candidate lhs ~ rhs of the permutation lattice. Both sides are repeat
/// free, disjoint, and lhs[0] < rhs[0].
struct ListCandidate {
  AttributeList lhs;
  AttributeList rhs;

  std::size_t level() const { return lhs.size() + rhs.size(); }
  ListOD as_ocd() const { return ListOD::compatible(lhs, rhs); }

  friend auto operator<=>(const ListCandidate&, const ListCandidate&) = default;
  friend bool operator==(const ListCandidate&, const ListCandidate&) = default;
};

inline constexpr std::size_t kDefaultMaxLevel = 4;

/// <a> ~ <b> for every attribute pair a < b.
std::vector<ListCandidate> generate_level1(std::size_t arity);

/// For each attribute not yet used: lhs·a ~ rhs and lhs ~ rhs·a.
std::vector<ListCandidate> expand(const ListCandidate& c, std::size_t arity);

struct ListDiscoveryStats {
  /// Candidates produced by generation and expansion, counting duplicates
  /// reached through different parents.
  std::size_t generated = 0;
  /// Distinct candidates checked against the table.
  std::size_t checked = 0;
  std::size_t levels = 0;
};

struct ListDiscoveryResult {
  std::vector<ListOD> ocds;
  ListDiscoveryStats stats;
};

/// Level-wise traversal that only expands satisfied candidates. Output is
/// sorted. Throws BoundsError if max_level exceeds twice the arity.
ListDiscoveryResult ocddiscover(const Table& table, std::size_t max_level = kDefaultMaxLevel,
                                bool parallel = false);

struct MissedOcd {
  /// Representative of the group: shortest, then lexicographically least.
  ListOD ocd;
  /// Shared canonical image of the group.
  DependencySet canonical;
  /// Every image is derivable from set-based discovery output.
  bool covered_by_set;
};

struct DiffReport {
  /// Valid groups with no member reachable by ocddiscover.
  std::vector<MissedOcd> missed;
  /// Representatives of valid groups reached by ocddiscover.
  std::vector<ListOD> found_by_both;
  /// Representatives of missed groups that set-based discovery covers.
  std::vector<ListOD> found_only_by_set;
  EnumerationBounds bounds;
  std::size_t list_output_size = 0;
  std::size_t set_output_size = 0;
};

/// Compares the list-based candidate space against the oracle (with shared
/// attributes allowed) and set-based discovery. Valid OCDs are grouped by
/// their canonical image; trivial OCDs are ignored.
DiffReport diff_against_complete(const Table& table, EnumerationBounds b);

}  // namespace odprof
