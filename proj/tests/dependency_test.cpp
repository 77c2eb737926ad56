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

#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "odprof/checker.hpp"
#include "odprof/dependency.hpp"

namespace odprof {
namespace {

using testing::attr_set;
using testing::attrs;

constexpr Attribute kA = 0, kB = 1, kC = 2, kD = 3;

CanonicalDependency constant(AttributeSet ctx, Attribute a) {
  return CanonicalDependency::constant(ctx, a);
}
CanonicalDependency compatible(AttributeSet ctx, Attribute a, Attribute b) {
  return CanonicalDependency::compatible(ctx, a, b);
}

TEST(CanonicalDependencyTest, RejectsTrivialStatements) {
  EXPECT_THROW(CanonicalDependency::constant({kA}, kA), std::invalid_argument);
  EXPECT_THROW(CanonicalDependency::compatible({}, kA, kA), std::invalid_argument);
  EXPECT_THROW(CanonicalDependency::compatible({kA}, kA, kB), std::invalid_argument);
  EXPECT_TRUE(CanonicalDependency::trivial_constant({kA}, kA).is_trivial());
}

TEST(CanonicalDependencyTest, CompatibilityIsUnordered) {
  EXPECT_EQ(compatible({kC}, kB, kA), compatible({kC}, kA, kB));
  EXPECT_EQ(compatible({}, kD, kA).first(), kA);
}

TEST(CanonicalDependencyTest, OrderIsContextSizeThenMembersThenBody) {
  DependencySet s{compatible({kB, kC}, kA, kD), constant({kD}, kA), compatible({}, kA, kB),
                  constant({kA}, kD), constant({}, kC)};
  std::vector<CanonicalDependency> got(s.begin(), s.end());
  std::vector<CanonicalDependency> want{constant({}, kC), compatible({}, kA, kB),
                                        constant({kA}, kD), constant({kD}, kA),
                                        compatible({kB, kC}, kA, kD)};
  EXPECT_EQ(got, want);
}

TEST(ListODTest, CompatibilityExposesEquivalence) {
  const ListOD ocd = ListOD::compatible({kA, kB}, {kC});
  const ListOD eq = ocd.as_equivalence();
  EXPECT_EQ(eq.kind(), ListOD::Kind::kOrderEquivalent);
  EXPECT_EQ(eq.lhs(), (AttributeList{kA, kB, kC}));
  EXPECT_EQ(eq.rhs(), (AttributeList{kC, kA, kB}));
}

TEST(FdAsOdTest, PrefixesLhsOntoRhs) {
  const Table t = testing::taxes_table();
  EXPECT_EQ(fd_as_od(attrs(t, {"salary"}), attrs(t, {"tax"})),
            ListOD::orders(attrs(t, {"salary"}), attrs(t, {"salary", "tax"})));
  EXPECT_EQ(fd_as_od({}, {kA}), ListOD::orders({}, {kA}));
  EXPECT_EQ(fd_as_od(attrs(t, {"position"}), attrs(t, {"salary"})).rhs(),
            attrs(t, {"position", "salary"}));
}

TEST(MapFdTest, Examples) {
  EXPECT_EQ(map_fd_to_canonical({kA, kB}, {kC, kD}),
            (DependencySet{constant({kA, kB}, kC), constant({kA, kB}, kD)}));
  EXPECT_TRUE(map_fd_to_canonical({kA}, {kA}).empty());
  EXPECT_EQ(map_fd_to_canonical({}, {kD}), (DependencySet{constant({}, kD)}));
}

TEST(MapOcdTest, Examples) {
  EXPECT_EQ(map_ocd_to_canonical({kA, kB}, {kC, kD}),
            (DependencySet{compatible({}, kA, kC), compatible({kA}, kB, kC),
                           compatible({kC}, kA, kD), compatible({kA, kC}, kB, kD)}));
  // (1,1) is A~A, (1,2) has A in context, (2,1) has A in context.
  EXPECT_EQ(map_ocd_to_canonical({kA, kB}, {kA, kC}), (DependencySet{compatible({kA}, kB, kC)}));
  EXPECT_TRUE(map_ocd_to_canonical({kA}, {kA}).empty());
}

TEST(MapOcdTest, SharedPrefixImageMatchesListCheckOnCounterexample) {
  const Table t = testing::counterexample_table();
  const auto image = map_ocd_to_canonical({kA, kB}, {kA, kC});
  bool all = true;
  for (const auto& d : image) all = all && holds_canonical(t, d);
  EXPECT_EQ(all, order_compatible(t, {kA, kB}, {kA, kC}));
  EXPECT_TRUE(all);
}

TEST(MapOdTest, WorkedExampleGivesSixStatements) {
  const DependencySet want{constant({kA, kB}, kC),  constant({kA, kB}, kD),
                           compatible({}, kA, kC),  compatible({kA}, kB, kC),
                           compatible({kC}, kA, kD), compatible({kA, kC}, kB, kD)};
  EXPECT_EQ(map_od_to_canonical({kA, kB}, {kC, kD}), want);
}

TEST(MapOdTest, IdenticalListsMapToNothing) {
  EXPECT_TRUE(map_od_to_canonical({kB, kA, kC}, {kB, kA, kC}).empty());
  EXPECT_TRUE(map_od_to_canonical({}, {}).empty());
}

TEST(MapOdTest, YearSalaryToYearBin) {
  const Table t = testing::taxes_table();
  const auto image = map_od_to_canonical(attrs(t, {"year", "salary"}), attrs(t, {"year", "bin"}));
  const Attribute year = t.attribute("year");
  const Attribute salary = t.attribute("salary");
  const Attribute bin = t.attribute("bin");
  EXPECT_EQ(image, (DependencySet{constant({year, salary}, bin), compatible({year}, salary, bin)}));
  for (const auto& d : image) EXPECT_TRUE(holds_canonical(t, d));
  EXPECT_TRUE(satisfies_od(t, attrs(t, {"year", "salary"}), attrs(t, {"year", "bin"})));
}

// Mapping equivalence, size bound and harmlessness of omitted statements.
TEST(MapOdTest, RandomTablesAgreeWithPairwiseChecker) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const Table t = testing::random_small_table(rng, 4, 8);
    const AttributeList x = testing::random_list(rng, t.arity(), 2);
    const AttributeList y = testing::random_list(rng, t.arity(), 2);
    const DependencySet image = map_od_to_canonical(x, y);
    ASSERT_LE(image.size(), y.size() + x.size() * y.size());
    bool all = true;
    for (const auto& d : image) all = all && holds_canonical(t, d);
    ASSERT_EQ(all, testing::brute_od(t, x, y)) << "trial " << trial;

    // Every (i, j) statement the mapping omitted is trivially true.
    AttributeSet lhs_prefix;
    for (std::size_t i = 0; i < x.size(); ++i) {
      AttributeSet ctx = lhs_prefix;
      for (std::size_t j = 0; j < y.size(); ++j) {
        auto d = CanonicalDependency::trivial_compatible(ctx, x[i], y[j]);
        if (d.is_trivial()) {
          AttributeList a = AttributeList(ctx.members());
          AttributeList b = a;
          a.push_back(x[i]);
          b.push_back(y[j]);
          ASSERT_TRUE(testing::brute_ocd(t, a, b));
        }
        ctx = ctx.with(y[j]);
      }
      lhs_prefix = lhs_prefix.with(x[i]);
    }
  }
}

}  // namespace
}  // namespace odprof
