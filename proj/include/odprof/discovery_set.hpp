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
#include <optional>
#include <string>

#include "odprof/dependency.hpp"
#include "odprof/table.hpp"

namespace odprof {

struct DiscoveryConfig {
  /// Largest context examined; nullopt means the schema arity.
  std::optional<std::size_t> max_context_size;
  /// Also emit statements that hold on every table (debugging aid).
  bool emit_trivial = false;
  /// Process the contexts of one lattice level on several threads.
  bool parallel = false;
  /// Drop singleton classes from cached partitions.
  bool stripped_partitions = true;
};

/// Rules deciding which valid canonical statements are reported.
///
/// context_subset: drop a statement whose body already holds in a smaller
///   context.
/// constant_side: drop `ctx: a ~ b` when a or b is constant in some subset
///   of ctx.
/// constant_in_context: skip contexts containing an attribute that is
///   constant in the rest of the context; their partition equals the
///   smaller one.
struct MinimalityPolicy {
  bool context_subset = true;
  bool constant_side = true;
  bool constant_in_context = true;

  static MinimalityPolicy none() { return {false, false, false}; }
};

struct DiscoveryStats {
  std::size_t contexts_visited = 0;
  std::size_t contexts_skipped = 0;
  std::size_t candidates_checked = 0;
};

struct DiscoveryResult {
  DependencySet dependencies;
  DiscoveryStats stats;
};

/// Level-wise traversal of the context lattice. Every valid canonical
/// statement with context size within bounds is either reported or
/// derivable from the reported ones under `pol` (see derive()).
DiscoveryResult discover_canonical(const Table& table, const DiscoveryConfig& cfg = {},
                                   const MinimalityPolicy& pol = {});

/// Why a statement is implied by a discovery result.
struct Derivation {
  enum class Rule { kReported, kTrivial, kContextSubset, kConstantSide, kConstantInContext };

  Rule rule;
  /// The smaller statement the rule appeals to; absent for kReported.
  std::optional<CanonicalDependency> via;
  /// For kConstantInContext: the statement making the dropped context
  /// attribute constant.
  std::optional<CanonicalDependency> reduction;
};

std::string_view to_string(Derivation::Rule rule);

/// Whether `d` follows from `result` using only the rules enabled in `pol`.
/// Purely symbolic; never looks at data.
std::optional<Derivation> derive(const DependencySet& result, const CanonicalDependency& d,
                                 const MinimalityPolicy& pol = {});

struct Explanation {
  bool minimal;
  Derivation derivation;
  std::string text;
};

/// Explains the presence or absence of `d` in `result`. Throws
/// UnknownDependencyError, naming a violating row pair, if `d` does not
/// hold on `table`.
Explanation explain_minimality(const Table& table, const CanonicalDependency& d,
                               const DependencySet& result, const MinimalityPolicy& pol = {});

}  // namespace odprof
