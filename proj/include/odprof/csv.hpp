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

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "odprof/table.hpp"
#include "odprof/value.hpp"

namespace odprof {

struct LoadOptions {
  char delimiter = ',';
  bool has_header = true;
  /// Column name to forced type.
  std::map<std::string, ValueType> type_overrides;
  /// Accepted date layouts, tried in order. Tokens: YYYY, MM, DD.
  std::vector<std::string> date_formats = {"YYYY-MM-DD", "DD/MM/YYYY"};
};

/// Integer if every cell parses as a signed integer, else Real if every cell
/// is a finite decimal, else Date under one of `date_formats`, else Text.
/// Throws LoadError on an empty cell or an empty column.
ValueType infer_column_type(std::span<const std::string> values,
                            std::span<const std::string> date_formats = {});

/// Parses one cell as `type`; throws LoadError on failure.
Value parse_value(std::string_view raw, ValueType type, std::span<const std::string> date_formats);

struct CsvRecord {
  /// 1-based line on which the record starts.
  std::size_t line;
  std::vector<std::string> fields;
};

/// RFC 4180 style records: quoted fields may hold delimiters, doubled quotes
/// and newlines. Blank lines are skipped.
std::vector<CsvRecord> read_csv_records(std::istream& in, char delimiter);

Table load_csv(std::istream& in, const std::string& name, const LoadOptions& opts = {});
Table load_csv(const std::filesystem::path& path, const LoadOptions& opts = {});

/// Header plus rows; quoting applied where needed.
void write_csv(std::ostream& out, const Table& table, char delimiter = ',');

}  // namespace odprof
