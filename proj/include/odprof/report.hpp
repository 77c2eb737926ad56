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
#include <string>
#include <vector>

#include "json.hpp"
#include "odprof/checker.hpp"
#include "odprof/dependency.hpp"
#include "odprof/notation.hpp"
#include "odprof/table.hpp"

namespace odprof {

inline constexpr int kReportSchemaVersion = 1;

struct ReportEntry {
  Statement statement;
  bool holds = true;
};

/// Machine-readable result of one CLI invocation.
///
/// Everything except `elapsed_ms` lands in the "stable" section, which is
/// byte-identical for identical inputs and configuration.
struct Report {
  std::string command;
  std::string engine;
  std::vector<ReportEntry> dependencies;
  WitnessList witnesses;
  bool has_witnesses = false;
  /// Command-specific extras (counts, diff sections).
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  double elapsed_ms = 0.0;
};

nlohmann::ordered_json table_metadata(const Table& table);
nlohmann::ordered_json statement_json(const Table& table, const Statement& s);
nlohmann::ordered_json witness_json(const Table& table, const Witness& w);

nlohmann::ordered_json to_json(const Table& table, const Report& report);

/// 1-based tuple label as printed in human output, e.g. "t3".
std::string row_label(RowId r);

}  // namespace odprof
