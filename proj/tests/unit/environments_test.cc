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

#include "causalbid/environments.h"

#include <cmath>
#include <stdexcept>

#include "gtest/gtest.h"

namespace causalbid {
namespace {

TEST(SyntheticEnvironmentTest, DrawsRespectModel) {
  Rng build(1, 0), rng(1, 1);
  SyntheticEnvironment env(PeriodicSpec(), build);
  EXPECT_EQ(env.dim(), 11);
  EXPECT_NEAR(env.true_theta().norm(), 1.0, 1e-12);
  EXPECT_NEAR(env.beta().norm(), 1.0, 1e-12);
  for (std::int64_t t = 1; t <= 2000; ++t) {
    const Draw d = env.Step(t, rng);
    EXPECT_NEAR(d.x.norm(), 1.0, 1e-12);
    const double lift = d.v1 - d.v0;
    EXPECT_TRUE(lift == 0.0 || std::abs(lift - 1.0) < 1e-15) << lift;
    const double z = 2.0 + std::sin(M_PI / 125.0 * t) +
                     std::cos(env.beta().dot(d.x.vector()));
    EXPECT_NEAR(d.v0, 1.0 / (1.0 + std::exp(-z)), 1e-12);
    EXPECT_GE(d.hob, 0.0);
    EXPECT_LE(d.hob, 1.0);
  }
  EXPECT_EQ(env.clip_stats().rounds, 2000);
}

TEST(SyntheticEnvironmentTest, MarginalValueIsClippedLinear) {
  Rng build(2, 0), rng(2, 1);
  SyntheticEnvironment env(PeriodicSpec(), build);
  for (int i = 0; i < 100; ++i) {
    const Draw d = env.Step(i + 1, rng);
    const double expected = std::clamp(env.true_theta().dot(d.x.vector()), 0.0, 1.0);
    EXPECT_DOUBLE_EQ(env.MarginalValue(d.x), expected);
  }
}

TEST(SyntheticEnvironmentTest, TwoLevelBaselineAndPositiveContexts) {
  SyntheticSpec spec;
  spec.dim = 3;
  spec.hob.family = "uniform";
  spec.baseline = Baseline::kTwoLevel;
  spec.contexts = ContextLaw::kPositive;
  Rng build(3, 0), rng(3, 1);
  SyntheticEnvironment env(spec, build);
  for (std::int64_t t = 1; t <= 500; ++t) {
    const Draw d = env.Step(t, rng);
    EXPECT_EQ(d.v0, std::sin(spec.frequency * t) >= 0.0 ? 0.6 : 0.2);
    EXPECT_TRUE((d.x.vector().array() >= 0.0).all());
    const double mean = env.true_theta().dot(d.x.vector());
    EXPECT_GE(mean, 0.0);
    EXPECT_LE(mean, 1.0);
  }
  EXPECT_EQ(env.clip_stats().mean_clipped, 0);
}

TEST(SyntheticEnvironmentTest, OptionalV1Cap) {
  SyntheticSpec spec = PeriodicSpec();
  spec.clip_v1 = true;
  Rng build(4, 0), rng(4, 1);
  SyntheticEnvironment env(spec, build);
  for (int t = 1; t <= 2000; ++t) EXPECT_LE(env.Step(t, rng).v1, 1.0);
  EXPECT_GT(env.clip_stats().v1_clipped, 0);
}

TEST(SyntheticEnvironmentTest, SeedDeterminesMarket) {
  Rng b1(9, 0), b2(9, 0), r1(9, 1), r2(9, 1);
  SyntheticEnvironment e1(PeriodicSpec(), b1), e2(PeriodicSpec(), b2);
  EXPECT_EQ(e1.true_theta(), e2.true_theta());
  for (int t = 1; t <= 50; ++t) {
    const Draw a = e1.Step(t, r1), b = e2.Step(t, r2);
    EXPECT_EQ(a.hob, b.hob);
    EXPECT_EQ(a.v1, b.v1);
    EXPECT_EQ(a.x.vector(), b.x.vector());
  }
}

TEST(LowerBoundEnvironmentTest, Construction) {
  Rng rng(5);
  LowerBoundEnvironment env(5, 40000, rng);
  EXPECT_EQ(env.sub_horizon(), 10000);
  EXPECT_DOUBLE_EQ(env.delta(), 0.25 / 100.0);
  EXPECT_EQ(env.true_theta()(0), 0.5);
  for (Eigen::Index i = 1; i < 5; ++i) {
    const double u = env.true_theta()(i);
    EXPECT_TRUE(u == 0.0 || std::abs(u - 4.0 * env.delta()) < 1e-15);
  }
  const Context x = env.ContextAt(10001);
  EXPECT_EQ(x.vector()(0), 0.5);
  EXPECT_EQ(x.vector()(2), 0.5);
  EXPECT_EQ(env.ContextAt(40000).vector()(4), 0.5);
  Rng draws(6);
  for (int t = 1; t <= 100; ++t) EXPECT_EQ(env.Step(t, draws).v0, 0.0);
  EXPECT_THROW(LowerBoundEnvironment(5, 20, rng), std::invalid_argument);
}

TEST(LowerBoundEnvironmentTest, ScalarInstance) {
  Rng rng(7);
  LowerBoundEnvironment env(1, 10000, rng);
  const double t0 = env.true_theta()(0);
  EXPECT_TRUE(t0 == 0.25 || std::abs(t0 - 0.25 - 2.0 * env.delta()) < 1e-15);
  EXPECT_EQ(env.ContextAt(17).vector()(0), 1.0);
}

}  // namespace
}  // namespace causalbid
