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

#include "causalbid/practical_policy.h"

#include <cmath>
#include <stdexcept>

#include "gtest/gtest.h"
#include "causalbid/environments.h"
#include "causalbid/master_policy.h"

namespace causalbid {
namespace {

Context Unit(Eigen::Index d) {
  return Context(Eigen::VectorXd::Constant(d, 1.0 / std::sqrt(static_cast<double>(d))));
}

TEST(TesPolicyTest, InitializationFeedsCountsThenExplores) {
  constexpr std::int64_t kT = 10000;
  Rng build(1, 0), env_rng(1, 1), rng(1, 2);
  SyntheticEnvironment env(PeriodicSpec(), build);
  TesPolicy tes(kT, env.dim(), env.hob().local_params());
  EXPECT_EQ(tes.init_rounds(), InitBlockLength(kT));
  for (std::int64_t t = 1; t <= tes.init_rounds(); ++t) {
    const Draw d = env.Step(t, env_rng);
    const BidChoice c = tes.Choose(t, d.x, rng);
    EXPECT_EQ(c.bid, 1.0);
    EXPECT_EQ(c.branch, Branch::kInit);
    tes.Update(t, d.x, c.bid, RunAuction(d.hob, d.v1, d.v0, c.bid));
  }
  EXPECT_EQ(tes.book().hob().rounds(), tes.init_rounds());
  EXPECT_EQ(tes.book().value().count(), 0);
  const Draw d = env.Step(tes.init_rounds() + 1, env_rng);
  const BidChoice c = tes.Choose(tes.init_rounds() + 1, d.x, rng);
  EXPECT_EQ(c.branch, Branch::kExplore);
  EXPECT_TRUE(c.bid == 0.0 || c.bid == 1.0);
}

TEST(TesPolicyTest, EveryLearningRoundIsAbsorbedInsideInterval) {
  constexpr std::int64_t kT = 20000;
  Rng build(2, 0), env_rng(2, 1), rng(2, 2);
  SyntheticEnvironment env(PeriodicSpec(), build);
  TesOptions options;
  options.confidence = ConfidenceOptions{1e-3, 0.5};
  TesPolicy tes(kT, env.dim(), env.hob().local_params(), options);
  int exploits = 0;
  for (std::int64_t t = 1; t <= kT; ++t) {
    const Draw d = env.Step(t, env_rng);
    const BidChoice c = tes.Choose(t, d.x, rng);
    if (c.branch == Branch::kExploit) {
      ++exploits;
      const std::size_t j = BidGrid(kT).IndexOf(c.bid);
      ASSERT_TRUE(tes.last_selection().has_value());
      EXPECT_TRUE(tes.last_selection()->Contains(j));
    }
    tes.Update(t, d.x, c.bid, RunAuction(d.hob, d.v1, d.v0, c.bid));
  }
  EXPECT_GT(exploits, 0);
  EXPECT_EQ(tes.book().value().count(), kT - tes.init_rounds());
  EXPECT_EQ(tes.book().hob().rounds(), kT);
}

TEST(TesPolicyTest, ProtocolViolationThrows) {
  TesPolicy tes(10000, 2, HobParams{0.25, 0.25});
  Rng rng(3);
  const BidChoice c = tes.Choose(1, Unit(2), rng);
  EXPECT_THROW(tes.Update(1, Unit(2), c.bid - 0.5, AuctionFeedback::Lost(0.0)),
               std::logic_error);
}

TEST(LinUcbPolicyTest, FreshStateBidsOne) {
  LinUcbPolicy policy(4);
  Rng rng(1);
  EXPECT_DOUBLE_EQ(policy.Choose(1, Unit(4), rng).bid, 1.0);
}

TEST(LinUcbPolicyTest, LostRoundsDoNotChangeState) {
  LinUcbPolicy policy(2);
  Rng rng(1);
  policy.Choose(1, Unit(2), rng);
  policy.Update(1, Unit(2), 1.0, AuctionFeedback::Lost(0.7));
  EXPECT_EQ(policy.count(), 0);
  EXPECT_TRUE(policy.design().isApprox(Eigen::MatrixXd::Identity(2, 2)));
  policy.Choose(2, Unit(2), rng);
  policy.Update(2, Unit(2), 1.0, AuctionFeedback::Won(0.3, 0.7));
  EXPECT_EQ(policy.count(), 1);
}

TEST(LinUcbPolicyTest, RegressesOnWinningOutcomes) {
  // v0 = 0.8 and no lift: the outcome regression converges to 0.8 although
  // the true marginal value is 0.
  Rng rng(5), draws(6);
  LinUcbPolicy policy(1);
  const Context x(Eigen::VectorXd::Ones(1));
  for (int t = 1; t <= 5000; ++t) {
    const BidChoice c = policy.Choose(t, x, rng);
    const double m = draws.Uniform();
    policy.Update(t, x, c.bid, RunAuction(m, 0.8, 0.8, c.bid));
  }
  EXPECT_NEAR(policy.ThetaHat()(0), 0.8, 0.02);
  EXPECT_GT(policy.Choose(5001, x, rng).bid, 0.75);
}

}  // namespace
}  // namespace causalbid
