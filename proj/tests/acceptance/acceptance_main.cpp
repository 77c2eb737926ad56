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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Time limits are wall-clock and pinned below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "odprof/checker.hpp"
#include "odprof/dependency.hpp"
#include "odprof/discovery_list.hpp"
#include "odprof/discovery_set.hpp"
#include "odprof/error.hpp"
#include "odprof/notation.hpp"
#include "odprof/oracle.hpp"
#include "properties.hpp"

namespace {

using namespace odprof;
using testing::attr_set;
using testing::attrs;

constexpr double kOneSecondMs = 1000.0;
constexpr double kFiveSecondsMs = 5000.0;
constexpr double kSixtySecondsMs = 60000.0;
constexpr double kNoLimitMs = 0.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_ms;
  std::function<Outcome()> body;
};

Outcome taxes_ods() {
  const Table t = testing::taxes_table();
  Outcome o;
  auto od = [&](std::initializer_list<std::string_view> x, std::initializer_list<std::string_view> y) {
    return satisfies_od(t, attrs(t, x), attrs(t, y));
  };
  o.require(od({"salary"}, {"tax"}), "salary -> tax");
  o.require(od({"salary"}, {"percentage"}), "salary -> percentage");
  o.require(od({"salary"}, {"group", "subgroup"}), "salary -> group,subgroup");
  o.require(od({"year", "salary"}, {"year", "bin"}), "year,salary -> year,bin");
  o.require(!od({"salary"}, {"subgroup", "group"}), "salary -> subgroup,group should fail");
  return o;
}

Outcome taxes_witnesses() {
  const Table t = testing::taxes_table();
  Outcome o;
  std::vector<std::pair<RowId, RowId>> splits;
  for (const auto& w : find_splits(t, attrs(t, {"position"}), attrs(t, {"salary"})).items) {
    splits.push_back(w.rows);
  }
  o.require(splits == std::vector<std::pair<RowId, RowId>>{{0, 3}, {1, 4}, {2, 5}},
            "splits of position/salary differ from {(t1,t4),(t2,t5),(t3,t6)}");
  const auto swaps = find_swaps(t, attrs(t, {"salary"}), attrs(t, {"subgroup"})).items;
  o.require(std::any_of(swaps.begin(), swaps.end(),
                        [](const Witness& w) { return w.rows == std::pair<RowId, RowId>{0, 1}; }),
            "swap (t1,t2) missing");
  return o;
}

Outcome taxes_canonical() {
  const Table t = testing::taxes_table();
  Outcome o;
  auto check = [&](const char* text) { return holds_canonical(t, parse_canonical(t, text)); };
  o.require(check("{position}: [] -> bin"), "{position}: [] -> bin");
  o.require(check("{year}: bin ~ salary"), "{year}: bin ~ salary");
  o.require(!check("{year}: bin ~ subgroup"), "{year}: bin ~ subgroup should fail");
  o.require(!check("{position}: [] -> salary"), "{position}: [] -> salary should fail");
  return o;
}

Outcome counterexample() {
  const Table t = testing::counterexample_table();
  Outcome o;
  auto ocd = [&](std::initializer_list<std::string_view> x, std::initializer_list<std::string_view> y) {
    return order_compatible(t, attrs(t, x), attrs(t, y));
  };
  o.require(ocd({"A", "B"}, {"A", "C"}), "A,B ~ A,C");
  o.require(!ocd({"B"}, {"C"}), "B ~ C should fail");
  o.require(!ocd({"A", "B"}, {"C"}), "A,B ~ C should fail");
  o.require(!ocd({"B"}, {"A", "C"}), "B ~ A,C should fail");
  return o;
}

const MissedOcd* find_missed(const DiffReport& r, const ListOD& ocd) {
  const ListOD flipped = ListOD::compatible(ocd.rhs(), ocd.lhs());
  for (const auto& m : r.missed) {
    if (m.ocd == ocd || m.ocd == flipped) return &m;
  }
  return nullptr;
}

Outcome incompleteness() {
  Outcome o;
  const Table t3 = testing::counterexample_table();
  const DiffReport r3 = diff_against_complete(t3, {.max_list_len = 2});
  const MissedOcd* m = find_missed(r3, ListOD::compatible(attrs(t3, {"A", "B"}), attrs(t3, {"A", "C"})));
  o.require(m != nullptr, "A,B ~ A,C not reported missed on the counterexample");
  if (m != nullptr) {
    o.require(m->canonical == DependencySet{parse_canonical(t3, "{A}: B ~ C")},
              "A,B ~ A,C not cross-referenced to {A}: B ~ C");
    o.require(m->covered_by_set, "{A}: B ~ C not covered by set-based discovery");
    o.require(holds_canonical(t3, parse_canonical(t3, "{A}: B ~ C")), "{A}: B ~ C does not hold");
  }
  const Table t1 = testing::taxes_table();
  const DiffReport r1 = diff_against_complete(t1, {.max_list_len = 2, .max_attrs = 9});
  o.require(find_missed(r1, ListOD::compatible(attrs(t1, {"year", "salary"}),
                                               attrs(t1, {"year", "bin"}))) != nullptr,
            "year,salary ~ year,bin not reported missed on the tax table");
  return o;
}

Outcome bug7_discovery() {
  const Table t = testing::bug7_table();
  Outcome o;
  DependencySet expected;
  for (const char* text : {"{D}: A ~ C", "{C}: A ~ D", "{A}: [] -> D", "{B}: A ~ D", "{B}: C ~ D",
                           "{B}: A ~ C", "{B,C}: [] -> D", "{B,C}: [] -> A", "{C,D}: A ~ B"}) {
    expected.insert(parse_canonical(t, text));
  }
  const DependencySet found = discover_canonical(t).dependencies;
  o.require(found == expected, "default output differs from the nine expected statements");

  const CanonicalDependency disputed = parse_canonical(t, "{A,B}: [] -> C");
  o.require(!testing::brute_canonical(t, disputed, attrs(t, {"A", "B"})),
            "{A,B}: [] -> C unexpectedly holds");
  o.require(!found.contains(disputed), "{A,B}: [] -> C emitted");
  try {
    explain_minimality(t, disputed, found);
    o.require(false, "explain_minimality accepted {A,B}: [] -> C");
  } catch (const UnknownDependencyError& e) {
    o.require(std::string(e.what()).find("t2 and t3") != std::string::npos,
              std::string("explanation does not cite t2/t3: ") + e.what());
  }

  for (const auto& d : enumerate_canonical(t.arity(), t.arity())) {
    const bool holds = testing::brute_canonical(t, d, AttributeList(d.context().members()));
    o.require(derive(found, d).has_value() == holds, "oracle disagrees on " + render(t, d));
  }
  return o;
}

Outcome mapping_example() {
  const Table t = schema_from_statement("A,B -> C,D");
  DependencySet expected;
  for (const char* text : {"{A,B}: [] -> C", "{A,B}: [] -> D", "{}: A ~ C", "{A}: B ~ C",
                           "{C}: A ~ D", "{A,C}: B ~ D"}) {
    expected.insert(parse_canonical(t, text));
  }
  Outcome o;
  o.require(map_od_to_canonical(attrs(t, {"A", "B"}), attrs(t, {"C", "D"})) == expected,
            "image of A,B -> C,D differs from the six expected statements");
  return o;
}

Outcome properties() {
  Outcome o;
  const std::pair<const char*, testing::PropertyOutcome> results[] = {
      {"decomposition", testing::decomposition_property(101)},
      {"od-implies-fd", testing::od_implies_fd_property(102)},
      {"mapping", testing::mapping_property(103)},
      {"permutation", testing::permutation_property(104)},
      {"weak-order", testing::weak_order_property(105)},
      {"prefix", testing::prefix_property(106)},
      {"completeness", testing::completeness_property(107)},
  };
  std::string counts;
  for (const auto& [name, r] : results) {
    o.require(r.passed(200), std::string(name) + " failed on " + r.first_failure + " (" +
                                 std::to_string(r.cases) + " cases)");
    counts += std::string(counts.empty() ? "" : ", ") + name + "=" + std::to_string(r.cases);
  }
  if (o.pass) o.detail = counts;
  return o;
}

// Every column equal to the row number: every list pair is compatible, so
// list-based expansion never prunes and visits its whole candidate space.
Table all_compatible(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) names.push_back(std::string(1, static_cast<char>('A' + a)));
  std::vector<std::vector<std::int64_t>> rows;
  for (std::int64_t i = 0; i < 3; ++i) rows.emplace_back(n, i);
  return testing::integer_table("all-compatible", names, rows);
}

// Set-based discovery stays within the 2^n context lattice. The list-based
// candidate count per lattice node must rise with n, and its distinct
// candidates must reach n!.
Outcome search_space() {
  Outcome o;
  std::vector<double> per_context;
  std::string log;
  std::size_t factorial = 2;
  for (std::size_t n = 3; n <= 5; ++n) {
    const Table t = all_compatible(n);
    const std::size_t lattice = std::size_t{1} << n;
    const DiscoveryStats pruned = discover_canonical(t).stats;
    const DiscoveryStats full = discover_canonical(t, {}, MinimalityPolicy::none()).stats;
    const ListDiscoveryStats list = ocddiscover(t, n).stats;
    o.require(pruned.contexts_visited <= lattice && full.contexts_visited <= lattice,
              "set-based discovery visited more than 2^" + std::to_string(n) + " contexts");
    per_context.push_back(static_cast<double>(list.generated) / static_cast<double>(lattice));
    factorial *= n;
    o.require(list.checked >= factorial,
              "list candidates below n! at n=" + std::to_string(n));
    log += (log.empty() ? "" : "; ") + std::string("n=") + std::to_string(n) +
           " contexts=" + std::to_string(full.contexts_visited) + "/" + std::to_string(lattice) +
           " list generated=" + std::to_string(list.generated) +
           " distinct=" + std::to_string(list.checked);
  }
  o.require(per_context[0] < per_context[1] && per_context[1] < per_context[2],
            "list candidates per lattice node not increasing: " + log);
  if (o.pass) o.detail = log;
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "tax table order dependencies", kOneSecondMs, taxes_ods},
      {2, "split and swap witnesses", kNoLimitMs, taxes_witnesses},
      {3, "canonical checks on the tax table", kNoLimitMs, taxes_canonical},
      {4, "shared-prefix counterexample", kNoLimitMs, counterexample},
      {5, "list-based incompleteness diff", kFiveSecondsMs, incompleteness},
      {6, "seven-row table discovery", kNoLimitMs, bug7_discovery},
      {7, "OD to canonical mapping", kNoLimitMs, mapping_example},
      {8, "property suites", kSixtySecondsMs, properties},
      {9, "search-space growth", kNoLimitMs, search_space},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_ms > 0 && ms >= c.limit_ms) {
      o.require(false, "took " + std::to_string(ms) + " ms, limit " + std::to_string(c.limit_ms));
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s  criterion %d: %s (%.1f ms)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, ms,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
