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

#include "odprof/discovery_list.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "odprof/checker.hpp"
#include "odprof/discovery_set.hpp"
#include "odprof/error.hpp"

namespace odprof {

namespace {

// Shorter first, then lexicographic.
bool representative_less(const ListOD& x, const ListOD& y) {
  const std::size_t lx = x.lhs().size() + x.rhs().size();
  const std::size_t ly = y.lhs().size() + y.rhs().size();
  if (lx != ly) return lx < ly;
  return x < y;
}

std::vector<char> check_all(const Table& table, const std::vector<ListCandidate>& level,
                            bool parallel) {
  std::vector<char> ok(level.size(), 0);
  auto work = [&](std::size_t i) {
    ok[i] = order_compatible(table, level[i].lhs, level[i].rhs) ? 1 : 0;
  };
  if (!parallel || level.size() < 2) {
    for (std::size_t i = 0; i < level.size(); ++i) work(i);
    return ok;
  }
  const std::size_t workers =
      std::min<std::size_t>(level.size(), std::max(2U, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        for (std::size_t i = next++; i < level.size(); i = next++) work(i);
      });
    }
  }
  return ok;
}

}  // namespace

std::vector<ListCandidate> generate_level1(std::size_t arity) {
  std::vector<ListCandidate> out;
  for (Attribute a = 0; a < arity; ++a) {
    for (Attribute b = a + 1; b < arity; ++b) out.push_back({AttributeList{a}, AttributeList{b}});
  }
  return out;
}

std::vector<ListCandidate> expand(const ListCandidate& c, std::size_t arity) {
  const AttributeSet lhs(c.lhs);
  const AttributeSet rhs(c.rhs);
  if (c.lhs.has_repeats() || c.rhs.has_repeats() || lhs.intersects(rhs)) {
    throw std::logic_error("list candidates never repeat an attribute");
  }
  const AttributeSet used = lhs.united(rhs);
  std::vector<ListCandidate> out;
  for (Attribute a = 0; a < arity; ++a) {
    if (used.contains(a)) continue;
    AttributeList longer_lhs = c.lhs;
    longer_lhs.push_back(a);
    AttributeList longer_rhs = c.rhs;
    longer_rhs.push_back(a);
    out.push_back({std::move(longer_lhs), c.rhs});
    out.push_back({c.lhs, std::move(longer_rhs)});
  }
  return out;
}

ListDiscoveryResult ocddiscover(const Table& table, std::size_t max_level, bool parallel) {
  ListDiscoveryResult result;
  if (table.arity() < 2) return result;
  if (max_level > 2 * table.arity()) {
    throw BoundsError("max level " + std::to_string(max_level) + " exceeds guard " +
                      std::to_string(2 * table.arity()));
  }
  std::vector<ListCandidate> level = generate_level1(table.arity());
  result.stats.generated = level.size();
  for (std::size_t depth = 2; depth <= max_level && !level.empty(); ++depth) {
    ++result.stats.levels;
    result.stats.checked += level.size();
    const std::vector<char> ok = check_all(table, level, parallel);
    std::set<ListCandidate> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (!ok[i]) continue;
      result.ocds.push_back(level[i].as_ocd());
      if (depth == max_level) continue;
      for (auto& child : expand(level[i], table.arity())) {
        ++result.stats.generated;
        next.insert(std::move(child));
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::sort(result.ocds.begin(), result.ocds.end());
  return result;
}

DiffReport diff_against_complete(const Table& table, EnumerationBounds b) {
  b.allow_repeats = true;
  check_bounds(table, b);

  const std::vector<ListOD> valid = enumerate_valid_ocds(table, b);
  const std::size_t max_level = std::min(2 * b.max_list_len, 2 * table.arity());
  const ListDiscoveryResult listed = ocddiscover(table, max_level);
  const DiscoveryResult discovered = discover_canonical(table);

  std::set<std::pair<AttributeList, AttributeList>> reachable;
  for (const auto& ocd : listed.ocds) {
    reachable.emplace(ocd.lhs(), ocd.rhs());
    reachable.emplace(ocd.rhs(), ocd.lhs());
  }

  struct Group {
    DependencySet canonical;
    std::vector<ListOD> members;
  };
  std::map<std::vector<CanonicalDependency>, Group> groups;
  for (const auto& ocd : valid) {
    DependencySet image = map_ocd_to_canonical(ocd.lhs(), ocd.rhs());
    std::vector<CanonicalDependency> key(image.begin(), image.end());
    Group& g = groups[key];
    g.canonical = std::move(image);
    g.members.push_back(ocd);
  }

  DiffReport report;
  report.bounds = b;
  report.list_output_size = listed.ocds.size();
  report.set_output_size = discovered.dependencies.size();
  for (auto& [key, g] : groups) {
    std::sort(g.members.begin(), g.members.end(), representative_less);
    const bool reached = std::any_of(g.members.begin(), g.members.end(), [&](const ListOD& m) {
      return reachable.contains({m.lhs(), m.rhs()});
    });
    const bool covered = std::all_of(g.canonical.begin(), g.canonical.end(), [&](const auto& d) {
      return derive(discovered.dependencies, d).has_value();
    });
    if (reached) {
      if (covered) report.found_by_both.push_back(g.members.front());
      continue;
    }
    report.missed.push_back(MissedOcd{g.members.front(), g.canonical, covered});
    if (covered) report.found_only_by_set.push_back(g.members.front());
  }
  std::sort(report.missed.begin(), report.missed.end(),
            [](const MissedOcd& x, const MissedOcd& y) { return representative_less(x.ocd, y.ocd); });
  std::sort(report.found_by_both.begin(), report.found_by_both.end(), representative_less);
  std::sort(report.found_only_by_set.begin(), report.found_only_by_set.end(), representative_less);
  return report;
}

}  // namespace odprof
