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

#include "odprof/discovery_set.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "odprof/checker.hpp"
#include "odprof/error.hpp"
#include "odprof/notation.hpp"
#include "odprof/partition.hpp"

namespace odprof {

namespace {

// What is known about one visited context.
struct ContextInfo {
  Partition partition;
  // Attributes outside the context that are constant in every class.
  AttributeSet constants;
  // compatible[a * arity + b] for a < b outside the context.
  std::vector<char> compatible;
};

struct LevelOutput {
  bool skipped = false;
  std::optional<ContextInfo> info;
  std::vector<CanonicalDependency> emitted;
  std::size_t checked = 0;
};

using Level = std::unordered_map<std::uint64_t, ContextInfo>;

class LatticeWalker {
 public:
  LatticeWalker(const Table& table, const DiscoveryConfig& cfg, const MinimalityPolicy& pol)
      : table_(table), cfg_(cfg), pol_(pol), arity_(table.arity()) {}

  DiscoveryResult run() {
    DiscoveryResult result;
    const std::size_t max_context = std::min(cfg_.max_context_size.value_or(arity_), arity_);

    Partition root = partition(table_, AttributeSet{});
    if (cfg_.stripped_partitions) root = root.strip();
    Level previous;
    {
      LevelOutput out = visit(AttributeSet{}, Level{}, &root);
      collect(out, previous, AttributeSet{}, result);
    }

    for (std::size_t size = 1; size <= max_context && !previous.empty(); ++size) {
      std::vector<AttributeSet> contexts = next_contexts(previous);
      std::vector<LevelOutput> outputs(contexts.size());
      auto work = [&](std::size_t i) { outputs[i] = visit(contexts[i], previous, nullptr); };
      if (cfg_.parallel && contexts.size() > 1) {
        run_parallel(contexts.size(), work);
      } else {
        for (std::size_t i = 0; i < contexts.size(); ++i) work(i);
      }
      Level current;
      for (std::size_t i = 0; i < contexts.size(); ++i) {
        collect(outputs[i], current, contexts[i], result);
      }
      // Only the immediately preceding level is needed from here on.
      previous = std::move(current);
    }
    return result;
  }

 private:
  // Supersets of the previous level by one larger attribute, each once.
  std::vector<AttributeSet> next_contexts(const Level& previous) const {
    std::vector<AttributeSet> out;
    for (const auto& [mask, info] : previous) {
      const AttributeSet base = AttributeSet::from_mask(mask);
      const Attribute start =
          base.empty() ? 0 : static_cast<Attribute>(std::bit_width(base.mask()));
      for (Attribute a = start; a < arity_; ++a) out.push_back(base.with(a));
    }
    std::sort(out.begin(), out.end(),
              [](AttributeSet x, AttributeSet y) { return compare_sets(x, y) < 0; });
    return out;
  }

  LevelOutput visit(AttributeSet context, const Level& previous, const Partition* root) const {
    LevelOutput out;
    const std::vector<Attribute> members = context.members();

    // Every immediate subset must have been visited; a missing one was
    // skipped, and whatever made it skippable applies here too.
    std::vector<const ContextInfo*> parents;
    for (Attribute c : members) {
      auto it = previous.find(context.without(c).mask());
      if (it == previous.end()) {
        out.skipped = true;
        return out;
      }
      parents.push_back(&it->second);
    }
    if (pol_.constant_in_context) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (parents[i]->constants.contains(members[i])) {
          out.skipped = true;
          return out;
        }
      }
    }

    ContextInfo info{root != nullptr ? *root
                                     : refine(parents.back()->partition, table_, members.back()),
                     AttributeSet{}, std::vector<char>(arity_ * arity_, 0)};

    for (Attribute a = 0; a < arity_; ++a) {
      if (context.contains(a)) continue;
      ++out.checked;
      if (!constant_within(table_, info.partition, a)) continue;
      info.constants = info.constants.with(a);
      bool minimal = true;
      if (pol_.context_subset) {
        for (const ContextInfo* p : parents) minimal = minimal && !p->constants.contains(a);
      }
      if (minimal) out.emitted.push_back(CanonicalDependency::constant(context, a));
    }

    for (Attribute a = 0; a < arity_; ++a) {
      if (context.contains(a)) continue;
      for (Attribute b = a + 1; b < arity_; ++b) {
        if (context.contains(b)) continue;
        ++out.checked;
        const bool constant_side = info.constants.contains(a) || info.constants.contains(b);
        if (!constant_side && !compatible_within(table_, info.partition, a, b)) continue;
        info.compatible[a * arity_ + b] = 1;
        if (pol_.constant_side && constant_side) continue;
        bool minimal = true;
        if (pol_.context_subset) {
          for (const ContextInfo* p : parents) minimal = minimal && !p->compatible[a * arity_ + b];
        }
        if (minimal) out.emitted.push_back(CanonicalDependency::compatible(context, a, b));
      }
    }

    if (cfg_.emit_trivial) {
      for (Attribute a : members) {
        out.emitted.push_back(CanonicalDependency::trivial_constant(context, a));
        for (Attribute b = 0; b < arity_; ++b) {
          if (b != a && !(context.contains(b) && b < a)) {
            out.emitted.push_back(CanonicalDependency::trivial_compatible(context, a, b));
          }
        }
      }
    }

    out.info = std::move(info);
    return out;
  }

  static void collect(LevelOutput& out, Level& level, AttributeSet context, DiscoveryResult& result) {
    if (out.skipped) {
      ++result.stats.contexts_skipped;
      return;
    }
    ++result.stats.contexts_visited;
    result.stats.candidates_checked += out.checked;
    for (const auto& d : out.emitted) result.dependencies.insert(d);
    level.emplace(context.mask(), std::move(*out.info));
  }

  template <typename Fn>
  static void run_parallel(std::size_t count, Fn& work) {
    const std::size_t workers =
        std::min<std::size_t>(count, std::max(2U, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) work(i);
      });
    }
  }

  const Table& table_;
  const DiscoveryConfig& cfg_;
  const MinimalityPolicy& pol_;
  std::size_t arity_;
};

class Deriver {
 public:
  Deriver(const DependencySet& result, const MinimalityPolicy& pol) : result_(result), pol_(pol) {}

  std::optional<Derivation> derive(const CanonicalDependency& d) {
    if (auto it = memo_.find(d); it != memo_.end()) return it->second;
    std::optional<Derivation> out = compute(d);
    memo_.emplace(d, out);
    return out;
  }

 private:
  std::optional<Derivation> compute(const CanonicalDependency& d) {
    if (d.is_trivial()) return Derivation{Derivation::Rule::kTrivial, std::nullopt, std::nullopt};
    if (result_.contains(d)) return Derivation{Derivation::Rule::kReported, std::nullopt, std::nullopt};
    const AttributeSet context = d.context();

    if (pol_.context_subset) {
      for (Attribute c : context.members()) {
        const CanonicalDependency smaller = d.in_context(context.without(c));
        if (auto sub = derive(smaller)) {
          const bool chain = sub->rule == Derivation::Rule::kContextSubset;
          return Derivation{Derivation::Rule::kContextSubset, chain ? sub->via : smaller,
                            std::nullopt};
        }
      }
    }

    if (pol_.constant_side && !d.is_constant()) {
      for (AttributeSet sub : subsets_by_size(context)) {
        for (Attribute side : {d.first(), d.second()}) {
          const CanonicalDependency c = CanonicalDependency::constant(sub, side);
          if (derive(c)) return Derivation{Derivation::Rule::kConstantSide, c, std::nullopt};
        }
      }
    }

    if (pol_.constant_in_context) {
      for (Attribute b : context.members()) {
        const AttributeSet reduced = context.without(b);
        const CanonicalDependency reduction = CanonicalDependency::constant(reduced, b);
        if (!derive(reduction)) continue;
        const CanonicalDependency smaller = d.in_context(reduced);
        if (derive(smaller)) {
          return Derivation{Derivation::Rule::kConstantInContext, smaller, reduction};
        }
      }
    }
    return std::nullopt;
  }

  static std::vector<AttributeSet> subsets_by_size(AttributeSet set) {
    std::vector<AttributeSet> out;
    const std::uint64_t full = set.mask();
    for (std::uint64_t m = full;; m = (m - 1) & full) {
      out.push_back(AttributeSet::from_mask(m));
      if (m == 0) break;
    }
    std::sort(out.begin(), out.end(),
              [](AttributeSet x, AttributeSet y) { return compare_sets(x, y) < 0; });
    return out;
  }

  const DependencySet& result_;
  const MinimalityPolicy& pol_;
  std::map<CanonicalDependency, std::optional<Derivation>> memo_;
};

// First row pair inside one context class that violates `d`.
std::optional<std::pair<RowId, RowId>> violation(const Table& table, const CanonicalDependency& d) {
  const Partition p = partition(table, d.context());
  for (const auto& cls : p.classes()) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = 0; j < cls.size(); ++j) {
        const RowId s = cls[i];
        const RowId t = cls[j];
        if (d.is_constant()) {
          if (s < t && table.rank(s, d.first()) != table.rank(t, d.first())) return {{s, t}};
        } else if (table.rank(s, d.first()) < table.rank(t, d.first()) &&
                   table.rank(t, d.second()) < table.rank(s, d.second())) {
          return {{s, t}};
        }
      }
    }
  }
  return std::nullopt;
}

std::string label(RowId r) { return "t" + std::to_string(r + 1); }

}  // namespace

DiscoveryResult discover_canonical(const Table& table, const DiscoveryConfig& cfg,
                                   const MinimalityPolicy& pol) {
  if (cfg.max_context_size && *cfg.max_context_size > table.arity()) {
    throw BoundsError("max context size " + std::to_string(*cfg.max_context_size) +
                      " exceeds schema arity " + std::to_string(table.arity()));
  }
  return LatticeWalker(table, cfg, pol).run();
}

std::string_view to_string(Derivation::Rule rule) {
  switch (rule) {
    case Derivation::Rule::kReported:
      return "reported";
    case Derivation::Rule::kTrivial:
      return "trivial";
    case Derivation::Rule::kContextSubset:
      return "context-subset";
    case Derivation::Rule::kConstantSide:
      return "constant-side";
    case Derivation::Rule::kConstantInContext:
      return "constant-in-context";
  }
  return "unknown";
}

std::optional<Derivation> derive(const DependencySet& result, const CanonicalDependency& d,
                                 const MinimalityPolicy& pol) {
  return Deriver(result, pol).derive(d);
}

Explanation explain_minimality(const Table& table, const CanonicalDependency& d,
                               const DependencySet& result, const MinimalityPolicy& pol) {
  if (auto pair = violation(table, d)) {
    const auto [s, t] = *pair;
    std::string why;
    if (d.is_constant()) {
      why = label(s) + " and " + label(t) + " agree on " + render(table, d.context()) +
            " but differ on " + table.attribute_name(d.first());
    } else {
      why = label(s) + " and " + label(t) + " share a class of " + render(table, d.context()) +
            " and swap " + table.attribute_name(d.first()) + " against " +
            table.attribute_name(d.second());
    }
    throw UnknownDependencyError(render(table, d) + " does not hold: " + why);
  }
  std::optional<Derivation> derivation = derive(result, d, pol);
  if (!derivation) {
    throw std::logic_error(render(table, d) + " holds but is not derivable from the result");
  }
  Explanation out{derivation->rule == Derivation::Rule::kReported, *derivation, {}};
  switch (derivation->rule) {
    case Derivation::Rule::kReported:
      out.text = "minimal";
      break;
    case Derivation::Rule::kTrivial:
      out.text = "trivial: a body attribute lies in the context";
      break;
    case Derivation::Rule::kContextSubset:
    case Derivation::Rule::kConstantSide:
      out.text = "subsumed by " + render(table, *derivation->via) + " (" +
                 std::string(to_string(derivation->rule)) + " rule)";
      break;
    case Derivation::Rule::kConstantInContext:
      out.text = "context reduces to " + render(table, derivation->via->context()) + " since " +
                 render(table, *derivation->reduction) + "; equivalent to " +
                 render(table, *derivation->via) + " (constant-in-context rule)";
      break;
  }
  return out;
}

}  // namespace odprof
