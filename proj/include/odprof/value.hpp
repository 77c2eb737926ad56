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
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace odprof {

enum class ValueType { kInteger, kReal, kText, kDate };

std::string_view to_string(ValueType type);

/// Calendar date stored as days since 1970-01-01.
struct Date {
  std::int32_t days_since_epoch = 0;

  static Date from_ymd(int year, unsigned month, unsigned day);
  /// ISO rendering, YYYY-MM-DD.
  std::string to_iso() const;

  friend auto operator<=>(const Date&, const Date&) = default;
};

/// A typed cell. Reals are always finite; there is no missing value.
class Value {
 public:
  static Value integer(std::int64_t v) { return Value(v); }
  static Value real(double v);
  static Value text(std::string v) { return Value(std::move(v)); }
  static Value date(Date v) { return Value(v); }

  ValueType type() const { return static_cast<ValueType>(data_.index()); }

  std::int64_t as_integer() const { return std::get<std::int64_t>(data_); }
  double as_real() const { return std::get<double>(data_); }
  const std::string& as_text() const { return std::get<std::string>(data_); }
  Date as_date() const { return std::get<Date>(data_); }

  /// Plain rendering suitable for CSV output and human reports.
  std::string to_string() const;

  friend bool operator==(const Value&, const Value&) = default;

 private:
  using Storage = std::variant<std::int64_t, double, std::string, Date>;

  explicit Value(std::int64_t v) : data_(v) {}
  explicit Value(double v) : data_(v) {}
  explicit Value(std::string v) : data_(std::move(v)) {}
  explicit Value(Date v) : data_(v) {}

  Storage data_;
};

/// Total order within one type: numeric, code-point lexicographic, or
/// chronological. Throws TypeError when the types differ.
std::strong_ordering compare_values(const Value& a, const Value& b);

}  // namespace odprof
