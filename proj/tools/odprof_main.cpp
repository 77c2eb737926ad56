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

// Command-line front end. Exit codes: 0 holds / nothing found, 1 violated /
// something found, 2 usage or load error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "odprof/checker.hpp"
#include "odprof/csv.hpp"
#include "odprof/discovery_list.hpp"
#include "odprof/discovery_set.hpp"
#include "odprof/error.hpp"
#include "odprof/notation.hpp"
#include "odprof/oracle.hpp"
#include "odprof/report.hpp"

namespace {

using odprof::Report;
using odprof::Table;

constexpr int kExitHolds = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr std::size_t kDefaultWitnessLimit = 20;

struct CommonOptions {
  std::string file;
  bool json = false;
  char delimiter = ',';
  bool no_header = false;
  std::vector<std::string> types;
  std::vector<std::string> date_formats;
  std::optional<std::size_t> limit;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool needs_file) {
  if (needs_file) cmd->add_option("file", opts.file, "CSV input")->required();
  cmd->add_flag("--json", opts.json, "Emit a JSON report");
  cmd->add_option("--delimiter", opts.delimiter, "Field separator");
  cmd->add_flag("--no-header", opts.no_header, "First line is data");
  cmd->add_option("--type", opts.types, "Pin a column type, NAME=integer|real|text|date");
  cmd->add_option("--date-format", opts.date_formats, "Accepted date layout, e.g. YYYY-MM-DD");
}

odprof::ValueType parse_type(const std::string& s) {
  if (s == "integer") return odprof::ValueType::kInteger;
  if (s == "real") return odprof::ValueType::kReal;
  if (s == "text") return odprof::ValueType::kText;
  if (s == "date") return odprof::ValueType::kDate;
  throw odprof::ParseError("unknown type '" + s + "'");
}

Table load(const CommonOptions& opts) {
  odprof::LoadOptions load;
  load.delimiter = opts.delimiter;
  load.has_header = !opts.no_header;
  if (!opts.date_formats.empty()) load.date_formats = opts.date_formats;
  for (const auto& entry : opts.types) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw odprof::ParseError("--type expects NAME=TYPE");
    load.type_overrides[entry.substr(0, eq)] = parse_type(entry.substr(eq + 1));
  }
  return odprof::load_csv(std::filesystem::path(opts.file), load);
}

std::size_t witness_limit(const CommonOptions& opts) {
  if (opts.limit) return *opts.limit;
  if (const char* env = std::getenv("OD_PROF_LIMIT")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw odprof::ParseError("OD_PROF_LIMIT must be a non-negative integer");
    }
  }
  return kDefaultWitnessLimit;
}

void print_report(const Table& table, const Report& report) {
  std::cout << odprof::to_json(table, report).dump(2) << '\n';
}

void print_witnesses(const Table& table, const odprof::WitnessList& list, std::string_view what) {
  std::cout << what << ": " << list.total << " total";
  if (list.items.size() < list.total) std::cout << " (showing " << list.items.size() << ")";
  std::cout << '\n';
  for (const auto& w : list.items) {
    std::cout << "  " << odprof::row_label(w.rows.first) << ", " << odprof::row_label(w.rows.second);
    if (w.differing) std::cout << "  differ on " << table.attribute_name(*w.differing);
    std::cout << '\n';
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int run_check(const CommonOptions& common, const std::string& od_text, const std::string& ocd_text,
              const std::string& canonical_text) {
  const auto start = std::chrono::steady_clock::now();
  const Table table = load(common);
  Report report;
  report.command = "check";
  report.engine = "checker";
  const std::size_t limit = witness_limit(common);
  bool holds = false;
  odprof::Statement statement = odprof::ListOD::orders({}, {});
  if (!canonical_text.empty()) {
    const auto d = odprof::parse_canonical(table, canonical_text);
    statement = d;
    holds = odprof::holds_canonical(table, d);
  } else {
    const odprof::ListOD od = !od_text.empty() ? odprof::parse_od(table, od_text)
                                               : odprof::parse_ocd(table, ocd_text);
    statement = od;
    holds = odprof::satisfies(table, od);
    if (!holds) {
      report.has_witnesses = true;
      const bool is_od = od.kind() == odprof::ListOD::Kind::kOrders;
      auto splits = is_od ? odprof::find_splits(table, od.lhs(), od.rhs(), limit)
                          : odprof::WitnessList{};
      auto swaps = odprof::find_swaps(table, od.lhs(), od.rhs(), limit);
      report.witnesses.total = splits.total + swaps.total;
      for (auto& w : splits.items) report.witnesses.items.push_back(std::move(w));
      for (auto& w : swaps.items) {
        if (report.witnesses.items.size() < limit) report.witnesses.items.push_back(std::move(w));
      }
    }
  }
  report.dependencies.push_back({statement, holds});
  report.elapsed_ms = elapsed_ms(start);
  if (common.json) {
    print_report(table, report);
  } else {
    std::cout << odprof::render(table, statement) << ": " << (holds ? "holds" : "violated") << '\n';
  }
  return holds ? kExitHolds : kExitViolated;
}

int run_witnesses(const CommonOptions& common, const std::string& od_text,
                  const std::string& ocd_text) {
  const auto start = std::chrono::steady_clock::now();
  const Table table = load(common);
  const odprof::ListOD od =
      !od_text.empty() ? odprof::parse_od(table, od_text) : odprof::parse_ocd(table, ocd_text);
  const std::size_t limit = witness_limit(common);
  const bool is_od = od.kind() == odprof::ListOD::Kind::kOrders;
  const auto splits =
      is_od ? odprof::find_splits(table, od.lhs(), od.rhs(), limit) : odprof::WitnessList{};
  const auto swaps = odprof::find_swaps(table, od.lhs(), od.rhs(), limit);
  const bool any = splits.total + swaps.total > 0;

  if (common.json) {
    Report report;
    report.command = "witnesses";
    report.engine = "checker";
    report.dependencies.push_back({od, !any});
    report.has_witnesses = true;
    report.witnesses.total = splits.total + swaps.total;
    report.witnesses.items = splits.items;
    report.witnesses.items.insert(report.witnesses.items.end(), swaps.items.begin(),
                                  swaps.items.end());
    report.details["splits_total"] = splits.total;
    report.details["swaps_total"] = swaps.total;
    report.elapsed_ms = elapsed_ms(start);
    print_report(table, report);
  } else {
    std::cout << odprof::render(table, od) << '\n';
    if (is_od) print_witnesses(table, splits, "splits");
    print_witnesses(table, swaps, "swaps");
  }
  return any ? kExitViolated : kExitHolds;
}

int run_map(const CommonOptions& common, const std::string& od_text, const std::string& ocd_text) {
  const auto start = std::chrono::steady_clock::now();
  const std::string& text = od_text.empty() ? ocd_text : od_text;
  const Table schema = odprof::schema_from_statement(text);
  const odprof::ListOD od =
      !od_text.empty() ? odprof::parse_od(schema, od_text) : odprof::parse_ocd(schema, ocd_text);
  const odprof::DependencySet image =
      od.kind() == odprof::ListOD::Kind::kOrders
          ? odprof::map_od_to_canonical(od.lhs(), od.rhs())
          : odprof::map_ocd_to_canonical(od.lhs(), od.rhs());
  if (common.json) {
    Report report;
    report.command = "map";
    report.engine = "dependencies";
    for (const auto& d : image) report.dependencies.push_back({d, true});
    report.details["source"] = odprof::render(schema, od);
    report.elapsed_ms = elapsed_ms(start);
    print_report(schema, report);
  } else {
    for (const auto& d : image) std::cout << odprof::render(schema, d) << '\n';
  }
  return kExitHolds;
}

odprof::MinimalityPolicy policy_from(const std::vector<std::string>& disabled) {
  odprof::MinimalityPolicy pol;
  for (const auto& rule : disabled) {
    if (rule == "context-subset") pol.context_subset = false;
    else if (rule == "constant-side") pol.constant_side = false;
    else if (rule == "constant-in-context") pol.constant_in_context = false;
    else throw odprof::ParseError("unknown minimality rule '" + rule + "'");
  }
  return pol;
}

int run_discover(const CommonOptions& common, const std::string& engine,
                 std::optional<std::size_t> max_context, std::optional<std::size_t> max_level,
                 bool parallel, const std::vector<std::string>& disabled, bool emit_trivial) {
  const auto start = std::chrono::steady_clock::now();
  const Table table = load(common);
  Report report;
  report.command = "discover";
  report.engine = engine == "list" ? "discovery-list" : "discovery-set";
  if (engine == "list") {
    if (max_context) throw odprof::ParseError("--max-context applies to the set engine");
    const std::size_t level = max_level.value_or(odprof::kDefaultMaxLevel);
    const auto result = odprof::ocddiscover(table, level, parallel);
    for (const auto& ocd : result.ocds) report.dependencies.push_back({ocd, true});
    report.details["max_level"] = level;
    report.details["candidates_generated"] = result.stats.generated;
    report.details["candidates_checked"] = result.stats.checked;
  } else {
    if (max_level) throw odprof::ParseError("--max-level applies to the list engine");
    odprof::DiscoveryConfig cfg;
    cfg.max_context_size = max_context;
    cfg.parallel = parallel;
    cfg.emit_trivial = emit_trivial;
    const auto result = odprof::discover_canonical(table, cfg, policy_from(disabled));
    for (const auto& d : result.dependencies) report.dependencies.push_back({d, true});
    report.details["max_context_size"] = max_context.value_or(table.arity());
    report.details["contexts_visited"] = result.stats.contexts_visited;
    report.details["contexts_skipped"] = result.stats.contexts_skipped;
    report.details["candidates_checked"] = result.stats.candidates_checked;
  }
  report.elapsed_ms = elapsed_ms(start);
  if (common.json) {
    print_report(table, report);
  } else {
    for (const auto& entry : report.dependencies) {
      std::cout << odprof::render(table, entry.statement) << '\n';
    }
  }
  return kExitHolds;
}

int run_explain(const CommonOptions& common, const std::string& canonical_text,
                const std::vector<std::string>& disabled) {
  const Table table = load(common);
  const auto d = odprof::parse_canonical(table, canonical_text);
  const auto pol = policy_from(disabled);
  const auto result = odprof::discover_canonical(table, {}, pol);
  try {
    const auto explanation = odprof::explain_minimality(table, d, result.dependencies, pol);
    std::cout << odprof::render(table, d) << ": " << explanation.text << '\n';
    return kExitHolds;
  } catch (const odprof::UnknownDependencyError& e) {
    std::cout << e.what() << '\n';
    return kExitViolated;
  }
}

int run_diff(const CommonOptions& common, std::size_t bounds, std::size_t max_attrs) {
  const auto start = std::chrono::steady_clock::now();
  const Table table = load(common);
  odprof::EnumerationBounds b;
  b.max_list_len = bounds;
  b.max_attrs = max_attrs;
  const odprof::DiffReport diff = odprof::diff_against_complete(table, b);

  if (common.json) {
    Report report;
    report.command = "diff";
    report.engine = "discovery-list vs oracle/discovery-set";
    nlohmann::ordered_json missed = nlohmann::ordered_json::array();
    for (const auto& m : diff.missed) {
      nlohmann::ordered_json canonical = nlohmann::ordered_json::array();
      for (const auto& d : m.canonical) canonical.push_back(odprof::render(table, d));
      missed.push_back({{"ocd", odprof::render(table, m.ocd)},
                        {"canonical", std::move(canonical)},
                        {"covered_by_set", m.covered_by_set}});
    }
    auto rendered = [&](const std::vector<odprof::ListOD>& list) {
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const auto& od : list) out.push_back(odprof::render(table, od));
      return out;
    };
    report.details["bounds"] = {{"max_list_len", diff.bounds.max_list_len},
                                {"allow_repeats", diff.bounds.allow_repeats},
                                {"max_attrs", diff.bounds.max_attrs}};
    report.details["missed"] = std::move(missed);
    report.details["found_by_both"] = rendered(diff.found_by_both);
    report.details["found_only_by_set"] = rendered(diff.found_only_by_set);
    report.details["list_output_size"] = diff.list_output_size;
    report.details["set_output_size"] = diff.set_output_size;
    report.elapsed_ms = elapsed_ms(start);
    print_report(table, report);
  } else {
    std::cout << "missed by list-based discovery: " << diff.missed.size() << '\n';
    for (const auto& m : diff.missed) {
      std::cout << "  " << odprof::render(table, m.ocd) << "  =>";
      bool first = true;
      for (const auto& d : m.canonical) {
        std::cout << (first ? " " : "; ") << odprof::render(table, d);
        first = false;
      }
      std::cout << (m.covered_by_set ? "  [covered by set-based discovery]" : "  [NOT covered]")
                << '\n';
    }
    std::cout << "found by both: " << diff.found_by_both.size() << '\n';
    for (const auto& od : diff.found_by_both) std::cout << "  " << odprof::render(table, od) << '\n';
  }
  return diff.missed.empty() ? kExitHolds : kExitViolated;
}

int run_oracle(const CommonOptions& common, std::size_t max_len, bool allow_repeats,
               std::size_t max_attrs, const std::string& kind) {
  const auto start = std::chrono::steady_clock::now();
  const Table table = load(common);
  odprof::EnumerationBounds b{max_len, allow_repeats, max_attrs};
  Report report;
  report.command = "oracle";
  report.engine = "oracle";
  std::vector<std::string> lines;
  if (kind == "od") {
    for (const auto& o : odprof::enumerate_valid_list_ods(table, b)) {
      report.dependencies.push_back({o.od, true});
      lines.push_back(odprof::render(table, o.od) + (o.trivial ? "  (trivial)" : ""));
    }
  } else {
    for (const auto& ocd : odprof::enumerate_valid_ocds(table, b)) {
      report.dependencies.push_back({ocd, true});
      lines.push_back(odprof::render(table, ocd));
    }
  }
  report.details["max_list_len"] = max_len;
  report.details["allow_repeats"] = allow_repeats;
  report.elapsed_ms = elapsed_ms(start);
  if (common.json) {
    print_report(table, report);
  } else {
    for (const auto& l : lines) std::cout << l << '\n';
  }
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order dependency checking, discovery and differential testing"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string od_text;
  std::string ocd_text;
  std::string canonical_text;

  auto* check = app.add_subcommand("check", "Decide whether one dependency holds");
  add_common(check, common, true);
  auto* check_kind = check->add_option_group("dependency");
  check_kind->add_option("--od", od_text, "X -> Y");
  check_kind->add_option("--ocd", ocd_text, "X ~ Y");
  check_kind->add_option("--canonical", canonical_text, "CTX: [] -> A or CTX: A ~ B");
  check_kind->require_option(1);

  auto* witnesses = app.add_subcommand("witnesses", "List split and swap witnesses");
  add_common(witnesses, common, true);
  auto* witness_kind = witnesses->add_option_group("dependency");
  witness_kind->add_option("--od", od_text, "X -> Y");
  witness_kind->add_option("--ocd", ocd_text, "X ~ Y");
  witness_kind->require_option(1);
  witnesses->add_option("--limit", common.limit, "Witness cap (default $OD_PROF_LIMIT or 20)");

  auto* map = app.add_subcommand("map", "Canonical image of a list-based dependency");
  add_common(map, common, false);
  auto* map_kind = map->add_option_group("dependency");
  map_kind->add_option("--od", od_text, "X -> Y");
  map_kind->add_option("--ocd", ocd_text, "X ~ Y");
  map_kind->require_option(1);

  std::string engine = "set";
  std::optional<std::size_t> max_context;
  std::optional<std::size_t> max_level;
  bool parallel = false;
  bool emit_trivial = false;
  std::vector<std::string> disabled_rules;
  auto* discover = app.add_subcommand("discover", "Discover dependencies");
  add_common(discover, common, true);
  discover->add_option("--engine", engine, "set or list")->check(CLI::IsMember({"set", "list"}));
  discover->add_option("--max-context", max_context, "Largest context (set engine)");
  discover->add_option("--max-level", max_level, "Largest |lhs|+|rhs| (list engine)");
  discover->add_flag("--parallel", parallel, "Check candidates of a level concurrently");
  discover->add_flag("--emit-trivial", emit_trivial, "Also report trivial statements");
  discover->add_option("--disable-rule", disabled_rules,
                       "context-subset, constant-side or constant-in-context");

  auto* explain = app.add_subcommand("explain", "Why a canonical dependency is (not) reported");
  add_common(explain, common, true);
  explain->add_option("--canonical", canonical_text, "CTX: [] -> A or CTX: A ~ B")->required();
  explain->add_option("--disable-rule", disabled_rules, "Minimality rule to switch off");

  std::size_t bounds = 2;
  std::size_t max_attrs = odprof::EnumerationBounds{}.max_attrs;
  auto* diff = app.add_subcommand("diff", "List-based discovery against the complete oracle");
  add_common(diff, common, true);
  diff->add_option("--bounds", bounds, "Longest list per side")->check(CLI::PositiveNumber);
  diff->add_option("--max-attrs", max_attrs, "Schema width guard");

  std::size_t max_len = 2;
  bool allow_repeats = false;
  std::string oracle_kind = "ocd";
  auto* oracle = app.add_subcommand("oracle", "Enumerate every valid dependency within bounds");
  add_common(oracle, common, true);
  oracle->add_option("--max-len", max_len, "Longest list per side")->required();
  oracle->add_flag("--allow-repeats", allow_repeats, "Allow attributes shared by both sides");
  oracle->add_option("--max-attrs", max_attrs, "Schema width guard");
  oracle->add_option("--kind", oracle_kind, "ocd or od")->check(CLI::IsMember({"ocd", "od"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) return run_check(common, od_text, ocd_text, canonical_text);
    if (*witnesses) return run_witnesses(common, od_text, ocd_text);
    if (*map) return run_map(common, od_text, ocd_text);
    if (*discover) {
      return run_discover(common, engine, max_context, max_level, parallel, disabled_rules,
                          emit_trivial);
    }
    if (*explain) return run_explain(common, canonical_text, disabled_rules);
    if (*diff) return run_diff(common, bounds, max_attrs);
    if (*oracle) return run_oracle(common, max_len, allow_repeats, max_attrs, oracle_kind);
  } catch (const odprof::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
