// Copyright 2026 The sigma3 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "gtest/gtest.h"
#include "json.hpp"
#include "report.hpp"
#include "sigma3/errors.hpp"

namespace sigma3::cli {
namespace {

int run_binary(const std::string& args) {
  const std::string cmd = std::string(SIGMA3_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string data(const std::string& name) { return std::string(SIGMA3_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Report, VerdictsAndCounts) {
  Report r("demo");
  r.check_eq("same", "a", "1", "1");
  r.check_eq("different", "a", "1", "2");
  r.check("true", "b", true);
  r.info("note", "c", "x");
  EXPECT_EQ(r.count(Verdict::kPass), 2u);
  EXPECT_EQ(r.count(Verdict::kFail), 1u);
  EXPECT_EQ(r.count(Verdict::kInfo), 1u);
  EXPECT_FALSE(r.passed());
  Report outer("all");
  outer.merge(r);
  EXPECT_EQ(outer.records().front().name, "demo: same");
}

TEST(Report, JsonSchema) {
  Report r("demo");
  r.check("ok", "claim", true);
  r.timing("step", 0.5);
  RunConfig c;
  c.seed = 99;
  const auto j = r.to_json(c);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "demo");
  EXPECT_EQ(j["seed"], 99);
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["records"].size(), 1u);
  EXPECT_EQ(j["records"][0]["anchor"], "claim");
  EXPECT_DOUBLE_EQ(j["timings"]["step"].get<double>(), 0.5);
  EXPECT_FALSE(version().empty());
}

TEST(Commands, TheoremAndAqiSmall) {
  RunConfig c;
  c.n_min = 1;
  c.n_max = 2;
  EXPECT_TRUE(verify_gn(c).passed());
  EXPECT_TRUE(aqi(c).passed());
}

TEST(Commands, OrderCapReportsFailure) {
  RunConfig c;
  c.n_min = c.n_max = 2;
  c.max_order_log3 = 5;
  const Report r = verify_gn(c);
  EXPECT_FALSE(r.passed());
}

TEST(Commands, SmallClassGroupScan) {
  RunConfig c;
  c.threads = 2;
  const std::string csv = ::testing::TempDir() + "/scan.csv";
  c.csv_path = csv;
  const Report r = classgroup(c, -5000, -1, "3,3");
  EXPECT_TRUE(r.passed());
  const std::string text = slurp(csv);
  EXPECT_EQ(text.rfind("d,h,invariants,sylow3-invariants,matches-list-1,matches-list-2\n", 0), 0u);
  EXPECT_NE(text.find("-4027,"), std::string::npos);
  std::remove(csv.c_str());
}

TEST(Commands, PQuotientFromText) {
  const Report r = pquotient(RunConfig{}, "gens: a, b\na^3\nb^3\na^-1 b^-1 a b\n", 3, nullptr);
  EXPECT_TRUE(r.passed());
  EXPECT_THROW(pquotient(RunConfig{}, "a^3\n", 3, nullptr), ParseError);
}

TEST(Commands, DescendRejectsBadConstraint) {
  EXPECT_THROW(descend(RunConfig{}, "whole: 3,3\nmax: 3,9\n", nullptr), ParseError);
}

TEST(Commands, Sl2UnknownCheck) { EXPECT_THROW(sl2(RunConfig{}, "nonsense"), std::invalid_argument); }

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run_binary("--version"), 0);
  EXPECT_EQ(run_binary("verify-theorem1 --n 1-2"), 0);
  EXPECT_EQ(run_binary("aqi --n 2"), 0);
  EXPECT_EQ(run_binary("sl2 --check identities --precision 4"), 0);
  EXPECT_EQ(run_binary("sl2 --check series --precision 4"), 1);
  EXPECT_EQ(run_binary("pquotient --presentation-file " + data("g1.pres") + " --max-class 4"), 0);
  EXPECT_EQ(run_binary("verify-theorem1 --n 0"), 2);
  EXPECT_EQ(run_binary("verify-theorem1 --n 3-1"), 2);
  EXPECT_EQ(run_binary("sl2 --check bogus"), 2);
  EXPECT_EQ(run_binary("pquotient --presentation-file /nonexistent/file"), 2);
  EXPECT_EQ(run_binary("descend --constraint " + data("g1.pres")), 2);
  EXPECT_EQ(run_binary("no-such-command"), 2);
  EXPECT_EQ(run_binary(""), 2);
}

TEST(Binary, DescendWithCustomConstraint) {
  // Groups of order 27 with abelianization [3,3] whose index-3 subgroups are all [3,3].
  EXPECT_EQ(run_binary("descend --constraint " + data("extraspecial.constraint")), 0);
}

TEST(Binary, JsonOutput) {
  const std::string path = ::testing::TempDir() + "/aqi.json";
  ASSERT_EQ(run_binary("aqi --n 1 --json " + path), 0);
  const auto j = nlohmann::json::parse(slurp(path));
  EXPECT_EQ(j["command"], "aqi");
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["config"]["n_min"], 1);
  std::remove(path.c_str());
}

}  // namespace
}  // namespace sigma3::cli
