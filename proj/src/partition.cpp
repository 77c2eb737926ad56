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

#include "odprof/partition.hpp"

#include <algorithm>
#include <numeric>

namespace odprof {

namespace {

void order_classes(std::vector<EquivalenceClass>& classes) {
  std::sort(classes.begin(), classes.end(),
            [](const EquivalenceClass& x, const EquivalenceClass& y) { return x.front() < y.front(); });
}

// Splits `rows` (ascending) by the rank of `a`, keeping each piece ascending.
void split_by(const Table& table, const EquivalenceClass& rows, Attribute a,
              std::vector<EquivalenceClass>& out) {
  EquivalenceClass sorted = rows;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](RowId x, RowId y) { return table.rank(x, a) < table.rank(y, a); });
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i == sorted.size() || table.rank(sorted[i], a) != table.rank(sorted[begin], a)) {
      EquivalenceClass piece(sorted.begin() + static_cast<std::ptrdiff_t>(begin),
                             sorted.begin() + static_cast<std::ptrdiff_t>(i));
      out.push_back(std::move(piece));
      begin = i;
    }
  }
}

}  // namespace

Partition::Partition(AttributeSet over, std::vector<EquivalenceClass> classes,
                     std::size_t row_count, bool stripped)
    : over_(over), classes_(std::move(classes)), row_count_(row_count), stripped_(stripped) {
  std::size_t covered = 0;
  for (const auto& c : classes_) covered += c.size();
  // Every row outside a stored class is a singleton.
  class_count_ = classes_.size() + (row_count_ - covered);
}

Partition Partition::strip() const {
  std::vector<EquivalenceClass> kept;
  for (const auto& c : classes_) {
    if (c.size() > 1) kept.push_back(c);
  }
  return Partition(over_, std::move(kept), row_count_, true);
}

bool Partition::same_classes(const Partition& other) const {
  return row_count_ == other.row_count_ && strip().classes_ == other.strip().classes_;
}

Partition partition(const Table& table, AttributeSet attrs) {
  table.check_attributes(attrs);
  std::vector<EquivalenceClass> classes;
  if (table.size() == 0) return Partition(attrs, {}, 0, false);
  EquivalenceClass all(table.size());
  std::iota(all.begin(), all.end(), RowId{0});
  classes.push_back(std::move(all));
  for (Attribute a : attrs.members()) {
    std::vector<EquivalenceClass> next;
    for (const auto& c : classes) split_by(table, c, a, next);
    classes = std::move(next);
  }
  order_classes(classes);
  return Partition(attrs, std::move(classes), table.size(), false);
}

Partition refine(const Partition& p, const Table& table, Attribute a) {
  std::vector<EquivalenceClass> classes;
  for (const auto& c : p.classes()) {
    if (p.stripped()) {
      std::vector<EquivalenceClass> pieces;
      split_by(table, c, a, pieces);
      for (auto& piece : pieces) {
        if (piece.size() > 1) classes.push_back(std::move(piece));
      }
    } else {
      split_by(table, c, a, classes);
    }
  }
  order_classes(classes);
  return Partition(p.over().with(a), std::move(classes), p.row_count(), p.stripped());
}

}  // namespace odprof
