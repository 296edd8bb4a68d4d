// Copyright 2026 The CausalBid Authors. All Rights Reserved.
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

#include <cmath>
#include <stdexcept>

#include "gtest/gtest.h"
#include "causalbid/harness/aggregate.h"
#include "causalbid/harness/config.h"
#include "causalbid/harness/runner.h"
#include "causalbid/harness/suites.h"

namespace causalbid {
namespace {

ExperimentConfig Config(const std::string& policy, std::int64_t horizon) {
  ExperimentConfig c;
  c.horizon = horizon;
  c.runs = 3;
  c.seed = 11;
  c.write_csv = false;
  PolicyConfig p;
  p.name = policy;
  c.policies = {p};
  return c;
}

TEST(ConfigTest, ParsesAndRejects) {
  const ExperimentConfig c = ParseConfig(R"({
    "policies": [{"name": "linucb", "alpha": 0.5}, {"name": "master"}],
    "environment": {"kind": "custom", "dim": 3, "hob": {"family": "uniform"},
                    "baseline": "two_level", "contexts": "positive"},
    "T": 40000, "runs": 4, "seed": 9})");
  EXPECT_EQ(c.horizon, 40000);
  EXPECT_EQ(c.policies.size(), 2u);
  EXPECT_EQ(c.policies[0].alpha, 0.5);
  EXPECT_EQ(c.environment.hob.family, "uniform");
  EXPECT_EQ(ParseConfig(ConfigToJson(c)).horizon, 40000);
  EXPECT_THROW(ParseConfig(R"({"horizon": 100, "colour": 1})"), std::invalid_argument);
  EXPECT_THROW(ParseConfig(R"({"policy": {"name": "greedy"}})"), std::invalid_argument);
  EXPECT_THROW(ParseConfig(R"({"horizon": 3})"), std::invalid_argument);
  EXPECT_THROW(ParseConfig(R"({"runs": "ten"})"), std::invalid_argument);
  EXPECT_THROW(ParseConfig("{"), std::invalid_argument);
}

TEST(AggregateTest, HandComputed) {
  const std::vector<double> one = {3.0};
  EXPECT_EQ(Summarize(one).mean, 3.0);
  EXPECT_EQ(Summarize(one).std, 0.0);
  const std::vector<double> two = {1.0, 3.0};
  EXPECT_DOUBLE_EQ(Summarize(two).mean, 2.0);
  EXPECT_DOUBLE_EQ(Summarize(two).std, std::sqrt(2.0));

  RunResult a, b;
  for (int t = 1; t <= 4; ++t) {
    a.rounds.push_back({t, 0, false, {}, 0, Branch::kNone, 1.0, 1.0 * t, 0});
    b.rounds.push_back({t, 0, false, {}, 0, Branch::kNone, 3.0, 3.0 * t, 0});
  }
  const std::vector<std::int64_t> at = {2, 4};
  const auto cp = CumulativeRegretAt({a, b}, at);
  EXPECT_DOUBLE_EQ(cp[0].mean, 4.0);
  EXPECT_DOUBLE_EQ(cp[0].std, std::sqrt(8.0));
  EXPECT_DOUBLE_EQ(cp[1].mean, 8.0);
  const auto same = CumulativeRegretAt({a, a}, at);
  EXPECT_EQ(same[1].std, 0.0);
  EXPECT_THROW(CumulativeRegretAt({}, at), std::invalid_argument);
}

TEST(AggregateTest, CheckpointRounds) {
  const std::vector<std::int64_t> expected = {500,  1000,  2500,  5000,  10000, 15000,
                                              20000, 25000, 30000, 35000, 40000, 45000,
                                              50000};
  const std::vector<std::int64_t> got = CheckpointRounds(50000);
  EXPECT_EQ(got.front(), 500);
  EXPECT_EQ(got.back(), 50000);
  EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  EXPECT_EQ(CheckpointRounds(4).back(), 4);
}

class PolicyRunTest : public ::testing::TestWithParam<std::string> {};

TEST_P(PolicyRunTest, RegretAccountingIdentity) {
  const RunResult r = RunOnce(Config(GetParam(), 6000), PolicyConfig{GetParam()}, 0);
  ASSERT_EQ(r.rounds.size(), 6000u);
  double cum = 0.0;
  for (const RoundRecord& rec : r.rounds) {
    cum += rec.inst_regret;
    EXPECT_EQ(rec.cum_regret, cum);
    EXPECT_GE(rec.inst_regret, -1e-12);
    EXPECT_GE(rec.bid, 0.0);
    EXPECT_LE(rec.bid, 1.0);
    EXPECT_EQ(rec.won, rec.payment.has_value());
  }
}

TEST_P(PolicyRunTest, SeedDeterminesRunAndThreadsDoNot) {
  ExperimentConfig c = Config(GetParam(), 5000);
  c.threads = 1;
  const auto serial = RunExperiment(c, c.policies[0]);
  c.threads = 3;
  const auto parallel = RunExperiment(c, c.policies[0]);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].run, static_cast<int>(i));
    EXPECT_EQ(serial[i].final_regret(), parallel[i].final_regret());
    EXPECT_EQ(serial[i].rounds.back().bid, parallel[i].rounds.back().bid);
  }
  if (GetParam() != "oracle") {
    EXPECT_NE(serial[0].final_regret(), serial[1].final_regret());
  }
}

INSTANTIATE_TEST_SUITE_P(AllPolicies, PolicyRunTest,
                         ::testing::Values("linucb", "linucb_tes", "master", "oracle"));

TEST(RunnerTest, OracleHasZeroRegret) {
  const RunResult r = RunOnce(Config("oracle", 2000), PolicyConfig{"oracle"}, 0);
  EXPECT_NEAR(r.final_regret(), 0.0, 1e-12);
}

TEST(RunnerTest, PoliciesFaceTheSameMarket) {
  const ExperimentConfig c = Config("linucb", 500);
  const RunResult a = RunOnce(c, PolicyConfig{"linucb"}, 1);
  const RunResult b = RunOnce(c, PolicyConfig{"oracle"}, 1);
  int both_won = 0;
  for (std::size_t i = 0; i < a.rounds.size(); ++i) {
    if (a.rounds[i].won && b.rounds[i].won) {
      EXPECT_EQ(*a.rounds[i].payment, *b.rounds[i].payment);
      ++both_won;
    }
  }
  EXPECT_GT(both_won, 0);
}

TEST(RunnerTest, LowerBoundEnvironmentRuns) {
  ExperimentConfig c = Config("linucb_tes", 4000);
  c.environment.kind = "lower_bound";
  c.environment.dim = 3;
  const RunResult r = RunOnce(c, c.policies[0], 0);
  EXPECT_EQ(r.rounds.size(), 4000u);
}

TEST(SuitesTest, NamesAndErrors) {
  const auto& names = SuiteNames();
  for (const char* required : {"cdf_coverage", "ipw_bias", "wls_coverage", "ucb_selection",
                               "elimination", "separation", "figure2"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), required), names.end()) << required;
  }
  EXPECT_THROW(RunSuite("nope", 1), std::invalid_argument);
}

TEST(SuitesTest, SeparationSuiteIsMachineReadable) {
  const SuiteReport report = RunSuite("separation", 1);
  EXPECT_TRUE(report.pass());
  const std::string text = FormatReport(report);
  EXPECT_NE(text.find("suite=separation check=T=10000 status=PASS"), std::string::npos);
  EXPECT_NE(text.find("min_gap="), std::string::npos);
}

}  // namespace
}  // namespace causalbid
