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

#include <string>
#include <string_view>
#include <variant>

#include "odprof/dependency.hpp"
#include "odprof/table.hpp"

// Text syntax for dependencies:
//   lists       a,b,c          (possibly empty)
//   OD          X -> Y
//   OCD         X ~ Y
//   equivalence X <-> Y
//   canonical   {a,b}: [] -> c    {a}: b ~ c    {}: [] -> c

namespace odprof {

using Statement = std::variant<ListOD, CanonicalDependency>;

std::string render(const Table& table, const AttributeList& list);
std::string render(const Table& table, AttributeSet set);
std::string render(const Table& table, const ListOD& od);
std::string render(const Table& table, const CanonicalDependency& d);
std::string render(const Table& table, const Statement& s);

/// Resolves comma-separated names against the table schema.
AttributeList parse_list(const Table& table, std::string_view text);
ListOD parse_od(const Table& table, std::string_view text);
ListOD parse_ocd(const Table& table, std::string_view text);
CanonicalDependency parse_canonical(const Table& table, std::string_view text);
/// A table with no rows whose Text columns are the names used in `od_text`,
/// in order of first appearance. Lets statements be parsed without data.
Table schema_from_statement(std::string_view od_text);

/// Any of the above forms, recognized by syntax.
Statement parse_statement(const Table& table, std::string_view text);

}  // namespace odprof
