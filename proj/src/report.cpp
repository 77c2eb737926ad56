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

#include "odprof/report.hpp"

namespace odprof {

namespace {

nlohmann::ordered_json names(const Table& table, std::span<const Attribute> attrs) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (Attribute a : attrs) out.push_back(table.attribute_name(a));
  return out;
}

std::string_view kind_name(const ListOD& od) {
  switch (od.kind()) {
    case ListOD::Kind::kOrders:
      return "od";
    case ListOD::Kind::kOrderEquivalent:
      return "order_equivalence";
    case ListOD::Kind::kOrderCompatible:
      return "ocd";
  }
  return "od";
}

}  // namespace

std::string row_label(RowId r) { return "t" + std::to_string(r + 1); }

nlohmann::ordered_json table_metadata(const Table& table) {
  nlohmann::ordered_json columns = nlohmann::ordered_json::array();
  for (const Column& c : table.schema()) {
    columns.push_back({{"name", c.name}, {"type", std::string(to_string(c.type))}});
  }
  return {{"name", table.name()}, {"rows", table.size()}, {"columns", std::move(columns)}};
}

nlohmann::ordered_json statement_json(const Table& table, const Statement& s) {
  nlohmann::ordered_json out;
  if (const auto* od = std::get_if<ListOD>(&s)) {
    out["kind"] = kind_name(*od);
    out["text"] = render(table, *od);
    out["lhs"] = names(table, od->lhs().view());
    out["rhs"] = names(table, od->rhs().view());
    return out;
  }
  const auto& d = std::get<CanonicalDependency>(s);
  out["kind"] = d.is_constant() ? "canonical_constant" : "canonical_compatible";
  out["text"] = render(table, d);
  const std::vector<Attribute> context = d.context().members();
  out["context"] = names(table, context);
  if (d.is_constant()) {
    out["attributes"] = names(table, std::vector<Attribute>{d.first()});
  } else {
    out["attributes"] = names(table, std::vector<Attribute>{d.first(), d.second()});
  }
  return out;
}

nlohmann::ordered_json witness_json(const Table& table, const Witness& w) {
  nlohmann::ordered_json out;
  out["kind"] = w.kind == Witness::Kind::kSplit ? "split" : "swap";
  out["rows"] = {w.rows.first, w.rows.second};
  out["labels"] = {row_label(w.rows.first), row_label(w.rows.second)};
  out["lhs"] = names(table, w.lhs.view());
  out["rhs"] = names(table, w.rhs.view());
  if (w.differing) out["differing"] = table.attribute_name(*w.differing);
  return out;
}

nlohmann::ordered_json to_json(const Table& table, const Report& report) {
  nlohmann::ordered_json stable;
  stable["schema_version"] = kReportSchemaVersion;
  stable["command"] = report.command;
  stable["engine"] = report.engine;
  stable["table"] = table_metadata(table);
  nlohmann::ordered_json deps = nlohmann::ordered_json::array();
  for (const auto& entry : report.dependencies) {
    nlohmann::ordered_json d = statement_json(table, entry.statement);
    d["holds"] = entry.holds;
    deps.push_back(std::move(d));
  }
  stable["dependencies"] = std::move(deps);
  if (report.has_witnesses) {
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto& w : report.witnesses.items) items.push_back(witness_json(table, w));
    stable["witnesses"] = {{"total", report.witnesses.total}, {"items", std::move(items)}};
  }
  stable["details"] = report.details;

  nlohmann::ordered_json out;
  out["stable"] = std::move(stable);
  out["volatile"] = {{"elapsed_ms", report.elapsed_ms}};
  return out;
}

}  // namespace odprof
