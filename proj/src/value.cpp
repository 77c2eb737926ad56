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

#include "odprof/value.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "odprof/error.hpp"

namespace odprof {

std::string_view to_string(ValueType type) {
  switch (type) {
    case ValueType::kInteger:
      return "integer";
    case ValueType::kReal:
      return "real";
    case ValueType::kText:
      return "text";
    case ValueType::kDate:
      return "date";
  }
  return "unknown";
}

Date Date::from_ymd(int year, unsigned month, unsigned day) {
  const std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                        std::chrono::day{day}};
  if (!ymd.ok()) {
    throw std::invalid_argument("invalid calendar date");
  }
  return Date{static_cast<std::int32_t>(std::chrono::sys_days{ymd}.time_since_epoch().count())};
}

std::string Date::to_iso() const {
  const std::chrono::year_month_day ymd{std::chrono::sys_days{std::chrono::days{days_since_epoch}}};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

Value Value::real(double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("real values must be finite");
  }
  return Value(v);
}

std::string Value::to_string() const {
  switch (type()) {
    case ValueType::kInteger:
      return std::to_string(as_integer());
    case ValueType::kReal: {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", as_real());
      return buf;
    }
    case ValueType::kText:
      return as_text();
    case ValueType::kDate:
      return as_date().to_iso();
  }
  return {};
}

std::strong_ordering compare_values(const Value& a, const Value& b) {
  if (a.type() != b.type()) {
    throw TypeError("cannot compare " + std::string(to_string(a.type())) + " with " +
                    std::string(to_string(b.type())));
  }
  switch (a.type()) {
    case ValueType::kInteger:
      return a.as_integer() <=> b.as_integer();
    case ValueType::kReal: {
      // Finite by construction, so the partial order is total.
      const double x = a.as_real();
      const double y = b.as_real();
      if (x < y) return std::strong_ordering::less;
      if (y < x) return std::strong_ordering::greater;
      return std::strong_ordering::equal;
    }
    case ValueType::kText:
      // Byte order of UTF-8 is code point order.
      return a.as_text().compare(b.as_text()) <=> 0;
    case ValueType::kDate:
      return a.as_date() <=> b.as_date();
  }
  return std::strong_ordering::equal;
}

}  // namespace odprof
