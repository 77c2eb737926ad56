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

#include "odprof/table.hpp"

namespace odprof {

/// Rows agreeing on every attribute of a set. Never empty.
using EquivalenceClass = std::vector<RowId>;

/// The equivalence classes of a table over an attribute set.
///
/// Classes are sorted internally by row id and ordered by their first row.
/// A stripped partition omits singleton classes; it is only produced on
/// request and only consumed where singletons cannot matter.
class Partition {
 public:
  Partition(AttributeSet over, std::vector<EquivalenceClass> classes, std::size_t row_count,
            bool stripped);

  AttributeSet over() const { return over_; }
  const std::vector<EquivalenceClass>& classes() const { return classes_; }
  std::size_t row_count() const { return row_count_; }
  bool stripped() const { return stripped_; }

  /// Number of classes including any stripped singletons.
  std::size_t class_count() const { return class_count_; }
  /// A copy without singleton classes.
  Partition strip() const;

  /// Class structure equality, ignoring `over`.
  bool same_classes(const Partition& other) const;

 private:
  AttributeSet over_;
  std::vector<EquivalenceClass> classes_;
  std::size_t row_count_;
  std::size_t class_count_;
  bool stripped_;
};

/// Π over `attrs`. The empty set yields one class holding every row
/// (no classes for an empty table).
Partition partition(const Table& table, AttributeSet attrs);

/// Π over p.over() ∪ {a}, computed by splitting the classes of `p`.
/// A stripped input gives a stripped output.
Partition refine(const Partition& p, const Table& table, Attribute a);

}  // namespace odprof
