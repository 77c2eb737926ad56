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
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

const std::string kCli = ODPROF_CLI;
const std::string kData = ODPROF_DATA_DIR;

struct CliRun {
  int status;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string command = kCli + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const char* file) { return kData + "/" + file; }

bool has(const CliRun& r, const std::string& text) { return r.out.find(text) != std::string::npos; }

TEST(CliTest, CheckExitCodes) {
  EXPECT_EQ(run("check --od 'salary -> group,subgroup' " + data("taxes.csv")).status, 0);
  EXPECT_EQ(run("check --od 'salary -> subgroup,group' " + data("taxes.csv")).status, 1);
  EXPECT_EQ(run("check --od 'B -> A,C' " + data("bug7.csv")).status, 1);
  EXPECT_EQ(run("check --ocd 'A,B ~ A,C' " + data("counterexample.csv")).status, 0);
  EXPECT_EQ(run("check --canonical '{position}: [] -> bin' " + data("taxes.csv")).status, 0);
  EXPECT_EQ(run("check --canonical '{year}: bin ~ subgroup' " + data("taxes.csv")).status, 1);
}

TEST(CliTest, UsageAndLoadErrorsExitTwo) {
  EXPECT_EQ(run("check --od 'salary -> nope' " + data("taxes.csv")).status, 2);
  EXPECT_EQ(run("check " + data("taxes.csv")).status, 2);
  EXPECT_EQ(run("check --od 'A -> B' " + data("missing.csv")).status, 2);
  EXPECT_EQ(run("oracle --max-len 2 " + data("taxes.csv")).status, 2);
  EXPECT_EQ(run("discover --max-context 9 " + data("bug7.csv")).status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
}

TEST(CliTest, MapNeedsNoTable) {
  const CliRun r = run("map --od 'A,B -> C,D'");
  EXPECT_EQ(r.status, 0);
  for (const char* line : {"{A,B}: [] -> C", "{A,B}: [] -> D", "{}: A ~ C", "{A}: B ~ C",
                           "{C}: A ~ D", "{A,C}: B ~ D"}) {
    EXPECT_TRUE(has(r, line)) << line << "\n" << r.out;
  }
}

TEST(CliTest, WitnessesHonourLimit) {
  const CliRun r = run("witnesses --od 'position -> salary' --limit 1 " + data("taxes.csv"));
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(has(r, "3 total (showing 1)")) << r.out;
  const CliRun json = run("witnesses --od 'position -> salary' --json " + data("taxes.csv"));
  EXPECT_TRUE(has(json, "\"splits_total\": 3")) << json.out;
  const CliRun capped = run("witnesses --ocd 'salary ~ subgroup' --json " + data("taxes.csv"));
  EXPECT_TRUE(has(capped, "\"t1\",")) << capped.out;
}

TEST(CliTest, WitnessLimitFromEnvironment) {
  const std::string command = "OD_PROF_LIMIT=2 " + kCli + " witnesses --ocd 'salary ~ subgroup' " +
                              data("taxes.csv");
  FILE* pipe = popen(command.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  EXPECT_NE(out.find("(showing 2)"), std::string::npos) << out;
}

TEST(CliTest, DiscoverBug7) {
  const CliRun r = run("discover " + data("bug7.csv"));
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r, "{C,D}: A ~ B")) << r.out;
  EXPECT_FALSE(has(r, "{A,B}: [] -> C")) << r.out;
  const CliRun list = run("discover --engine list --max-level 4 " + data("counterexample.csv"));
  EXPECT_EQ(list.status, 0);
  EXPECT_FALSE(has(list, "A,B ~ A,C")) << list.out;
}

TEST(CliTest, ExplainBug7) {
  const CliRun missing = run("explain --canonical '{A,B}: [] -> C' " + data("bug7.csv"));
  EXPECT_EQ(missing.status, 1);
  EXPECT_TRUE(has(missing, "t2 and t3")) << missing.out;
  const CliRun side = run("explain --canonical '{A}: B ~ D' " + data("bug7.csv"));
  EXPECT_EQ(side.status, 0);
  EXPECT_TRUE(has(side, "{A}: [] -> D")) << side.out;
  EXPECT_TRUE(has(run("explain --canonical '{B}: A ~ C' " + data("bug7.csv")), "minimal"));
}

TEST(CliTest, DiffReportsMissedSharedPrefix) {
  const CliRun r = run("diff " + data("counterexample.csv"));
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(has(r, "{A}: B ~ C")) << r.out;
  const CliRun taxes = run("diff --max-attrs 9 " + data("taxes.csv"));
  EXPECT_EQ(taxes.status, 1);
  EXPECT_TRUE(has(taxes, "{year}: bin ~ salary")) << taxes.out;
}

TEST(CliTest, StableJsonIsReproducible) {
  const std::string args = "discover --json " + data("bug7.csv");
  auto stable = [](const std::string& s) { return s.substr(0, s.find("\"volatile\"")); };
  EXPECT_EQ(stable(run(args).out), stable(run(args).out));
}

}  // namespace
