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

#include "odprof/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "odprof/error.hpp"

namespace odprof {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<std::int64_t> parse_integer(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> parse_real(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  const auto [ptr, ec] =
      std::from_chars(s.data(), s.data() + s.size(), v, std::chars_format::general);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

// Reads `min`..`max` digits from s at pos.
std::optional<int> take_digits(std::string_view s, std::size_t& pos, std::size_t min,
                               std::size_t max) {
  std::size_t end = pos;
  while (end < s.size() && end - pos < max && std::isdigit(static_cast<unsigned char>(s[end]))) {
    ++end;
  }
  if (end - pos < min) return std::nullopt;
  int v = 0;
  std::from_chars(s.data() + pos, s.data() + end, v);
  pos = end;
  return v;
}

std::optional<Date> parse_date(std::string_view s, std::string_view format) {
  s = trim(s);
  std::optional<int> year;
  std::optional<int> month;
  std::optional<int> day;
  std::size_t pos = 0;
  std::size_t f = 0;
  while (f < format.size()) {
    if (format.substr(f, 4) == "YYYY") {
      year = take_digits(s, pos, 4, 4);
      if (!year) return std::nullopt;
      f += 4;
    } else if (format.substr(f, 2) == "MM") {
      month = take_digits(s, pos, 1, 2);
      if (!month) return std::nullopt;
      f += 2;
    } else if (format.substr(f, 2) == "DD") {
      day = take_digits(s, pos, 1, 2);
      if (!day) return std::nullopt;
      f += 2;
    } else {
      if (pos >= s.size() || s[pos] != format[f]) return std::nullopt;
      ++pos;
      ++f;
    }
  }
  if (pos != s.size() || !year || !month || !day) return std::nullopt;
  try {
    return Date::from_ymd(*year, static_cast<unsigned>(*month), static_cast<unsigned>(*day));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::optional<Date> parse_any_date(std::string_view s, std::span<const std::string> formats) {
  for (const auto& f : formats) {
    if (auto d = parse_date(s, f)) return d;
  }
  return std::nullopt;
}

bool needs_quotes(std::string_view s, char delimiter) {
  if (s.empty()) return true;
  if (std::isspace(static_cast<unsigned char>(s.front())) ||
      std::isspace(static_cast<unsigned char>(s.back()))) {
    return true;
  }
  return s.find_first_of(std::string{delimiter, '"', '\n', '\r'}) != std::string_view::npos;
}

}  // namespace

ValueType infer_column_type(std::span<const std::string> values,
                            std::span<const std::string> date_formats) {
  if (values.empty()) throw LoadError("cannot infer the type of an empty column");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (trim(values[i]).empty()) throw LoadError("empty cell at value " + std::to_string(i + 1));
  }
  auto all = [&](auto&& pred) { return std::all_of(values.begin(), values.end(), pred); };
  if (all([](const std::string& v) { return parse_integer(v).has_value(); })) {
    return ValueType::kInteger;
  }
  if (all([](const std::string& v) { return parse_real(v).has_value(); })) return ValueType::kReal;
  if (!date_formats.empty() &&
      all([&](const std::string& v) { return parse_any_date(v, date_formats).has_value(); })) {
    return ValueType::kDate;
  }
  return ValueType::kText;
}

Value parse_value(std::string_view raw, ValueType type, std::span<const std::string> date_formats) {
  switch (type) {
    case ValueType::kInteger:
      if (auto v = parse_integer(raw)) return Value::integer(*v);
      break;
    case ValueType::kReal:
      if (auto v = parse_real(raw)) return Value::real(*v);
      break;
    case ValueType::kDate:
      if (auto v = parse_any_date(raw, date_formats)) return Value::date(*v);
      break;
    case ValueType::kText:
      if (!raw.empty()) return Value::text(std::string(raw));
      break;
  }
  throw LoadError("cannot parse '" + std::string(raw) + "' as " + std::string(to_string(type)));
}

std::vector<CsvRecord> read_csv_records(std::istream& in, char delimiter) {
  const std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::vector<CsvRecord> out;
  CsvRecord record{1, {}};
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t line = 1;

  auto end_field = [&] {
    record.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    const bool blank = record.fields.size() == 1 && record.fields[0].empty();
    if (!blank) out.push_back(std::move(record));
    record = CsvRecord{line, {}};
  };

  for (std::size_t i = 0; i < data.size(); ++i) {
    const char c = data[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < data.size() && data[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
    } else if (c == delimiter) {
      end_field();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < data.size() && data[i + 1] == '\n') ++i;
      end_field();
      ++line;
      end_record();
    } else {
      field += c;
      field_started = true;
    }
  }
  if (quoted) throw LoadError("unterminated quoted field starting on line " + std::to_string(record.line));
  if (field_started || !record.fields.empty()) {
    end_field();
    end_record();
  }
  return out;
}

Table load_csv(std::istream& in, const std::string& name, const LoadOptions& opts) {
  std::vector<CsvRecord> records = read_csv_records(in, opts.delimiter);
  if (records.empty()) throw LoadError(name + ": no data");

  std::vector<std::string> header;
  std::size_t first_data = 0;
  if (opts.has_header) {
    header = records.front().fields;
    for (auto& h : header) h = std::string(trim(h));
    first_data = 1;
  } else {
    for (std::size_t i = 0; i < records.front().fields.size(); ++i) {
      header.push_back("c" + std::to_string(i + 1));
    }
  }
  const std::size_t arity = header.size();
  for (std::size_t i = 0; i < arity; ++i) {
    if (header[i].empty()) throw LoadError(name + ": empty column name at position " + std::to_string(i + 1));
  }
  for (const auto& [col, type] : opts.type_overrides) {
    if (std::find(header.begin(), header.end(), col) == header.end()) {
      throw LoadError(name + ": type override names unknown column '" + col + "'");
    }
  }

  for (std::size_t r = first_data; r < records.size(); ++r) {
    const CsvRecord& rec = records[r];
    if (rec.fields.size() != arity) {
      throw LoadError(name + ": line " + std::to_string(rec.line) + " has " +
                      std::to_string(rec.fields.size()) + " fields, expected " +
                      std::to_string(arity));
    }
    for (std::size_t c = 0; c < arity; ++c) {
      if (trim(rec.fields[c]).empty()) {
        throw LoadError(name + ": empty cell on line " + std::to_string(rec.line) + ", column '" +
                        header[c] + "'");
      }
    }
  }

  std::vector<Column> schema;
  const std::size_t row_count = records.size() - first_data;
  std::vector<std::vector<Value>> rows(row_count);
  for (auto& row : rows) row.reserve(arity);
  for (std::size_t c = 0; c < arity; ++c) {
    std::vector<std::string> raw;
    raw.reserve(row_count);
    for (std::size_t r = first_data; r < records.size(); ++r) raw.push_back(records[r].fields[c]);

    ValueType type = ValueType::kText;
    if (auto it = opts.type_overrides.find(header[c]); it != opts.type_overrides.end()) {
      type = it->second;
    } else if (!raw.empty()) {
      type = infer_column_type(raw, opts.date_formats);
    }
    schema.push_back({header[c], type});
    for (std::size_t r = 0; r < row_count; ++r) {
      try {
        rows[r].push_back(parse_value(raw[r], type, opts.date_formats));
      } catch (const LoadError& e) {
        throw LoadError(name + ": line " + std::to_string(records[r + first_data].line) +
                        ", column '" + header[c] + "': " + e.what());
      }
    }
  }
  try {
    return Table(name, std::move(schema), std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw LoadError(name + ": " + e.what());
  }
}

Table load_csv(const std::filesystem::path& path, const LoadOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open " + path.string());
  return load_csv(in, path.stem().string(), opts);
}

void write_csv(std::ostream& out, const Table& table, char delimiter) {
  auto emit = [&](const std::string& s) {
    if (!needs_quotes(s, delimiter)) {
      out << s;
      return;
    }
    out << '"';
    for (char c : s) {
      if (c == '"') out << '"';
      out << c;
    }
    out << '"';
  };
  for (std::size_t a = 0; a < table.arity(); ++a) {
    if (a > 0) out << delimiter;
    emit(table.attribute_name(a));
  }
  out << '\n';
  for (const Tuple& t : table.rows()) {
    for (std::size_t a = 0; a < table.arity(); ++a) {
      if (a > 0) out << delimiter;
      emit(t[a].to_string());
    }
    out << '\n';
  }
}

}  // namespace odprof
