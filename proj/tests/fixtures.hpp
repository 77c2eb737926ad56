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

#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "odprof/table.hpp"

namespace odprof::testing {

/// Employee tax table; money stored as plain numbers (5K -> 5000).
inline Table taxes_table() {
  auto row = [](std::int64_t id, std::int64_t year, const char* position, std::int64_t bin,
                std::int64_t salary, std::int64_t percentage, std::int64_t tax, const char* group,
                const char* subgroup) {
    return std::vector<Value>{Value::integer(id),         Value::integer(year),
                              Value::text(position),      Value::integer(bin),
                              Value::integer(salary),     Value::integer(percentage),
                              Value::integer(tax),        Value::text(group),
                              Value::text(subgroup)};
  };
  std::vector<Column> schema = {{"id", ValueType::kInteger},     {"year", ValueType::kInteger},
                                {"position", ValueType::kText},  {"bin", ValueType::kInteger},
                                {"salary", ValueType::kInteger}, {"percentage", ValueType::kInteger},
                                {"tax", ValueType::kInteger},    {"group", ValueType::kText},
                                {"subgroup", ValueType::kText}};
  return Table("taxes", std::move(schema),
               {row(10, 19, "secr", 1, 5000, 20, 1000, "A", "III"),
                row(11, 19, "mngr", 2, 8000, 25, 2000, "C", "II"),
                row(12, 19, "direct", 3, 10000, 30, 3000, "D", "I"),
                row(10, 18, "secr", 1, 4500, 20, 900, "A", "III"),
                row(11, 18, "mngr", 2, 6000, 25, 1500, "C", "I"),
                row(12, 18, "direct", 3, 8000, 25, 2000, "C", "II")});
}

inline Table integer_table(std::string name, std::vector<std::string> columns,
                           const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<Column> schema;
  for (auto& c : columns) schema.push_back({std::move(c), ValueType::kInteger});
  std::vector<std::vector<Value>> values;
  for (const auto& r : rows) {
    std::vector<Value> cells;
    for (auto v : r) cells.push_back(Value::integer(v));
    values.push_back(std::move(cells));
  }
  return Table(std::move(name), std::move(schema), std::move(values));
}

/// Four rows where <A,B> ~ <A,C> holds but no repeat-free variant does.
inline Table counterexample_table() {
  return integer_table("counterexample", {"A", "B", "C"},
                       {{0, 0, 1}, {1, 1, 0}, {2, 3, 2}, {3, 2, 3}});
}

/// Seven-row table used to dispute a reported OD.
inline Table bug7_table() {
  return integer_table("bug7", {"A", "B", "C", "D"},
                       {{1, 3, 1, 1},
                        {2, 3, 3, 2},
                        {2, 3, 2, 2},
                        {2, 5, 2, 2},
                        {3, 1, 2, 3},
                        {4, 4, 4, 2},
                        {4, 5, 3, 2}});
}

inline AttributeList attrs(const Table& t, std::initializer_list<std::string_view> names) {
  AttributeList out;
  for (auto n : names) out.push_back(t.attribute(n));
  return out;
}

inline AttributeSet attr_set(const Table& t, std::initializer_list<std::string_view> names) {
  return AttributeSet(attrs(t, names));
}

/// Integer table with `arity` columns A, B, ... and values in [0, domain).
inline Table random_table(std::mt19937_64& rng, std::size_t arity, std::size_t rows,
                          int domain = 3) {
  std::uniform_int_distribution<int> value(0, domain - 1);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < arity; ++a) names.push_back(std::string(1, static_cast<char>('A' + a)));
  std::vector<std::vector<std::int64_t>> data(rows, std::vector<std::int64_t>(arity));
  for (auto& r : data) {
    for (auto& v : r) v = value(rng);
  }
  return integer_table("random", std::move(names), data);
}

/// Random table with arity in [1, max_arity] and rows in [0, max_rows].
inline Table random_small_table(std::mt19937_64& rng, std::size_t max_arity, std::size_t max_rows) {
  std::uniform_int_distribution<std::size_t> arity(1, max_arity);
  std::uniform_int_distribution<std::size_t> rows(0, max_rows);
  std::uniform_int_distribution<int> domain(1, 4);
  const std::size_t a = arity(rng);
  const std::size_t r = rows(rng);
  return random_table(rng, a, r, domain(rng));
}

/// List of length in [0, max_len]; repeats allowed when `repeats`.
inline AttributeList random_list(std::mt19937_64& rng, std::size_t arity, std::size_t max_len,
                                 bool repeats = true) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> attr(0, arity - 1);
  AttributeList out;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const Attribute a = attr(rng);
    if (!repeats && AttributeSet(out).contains(a)) continue;
    out.push_back(a);
  }
  return out;
}

}  // namespace odprof::testing
