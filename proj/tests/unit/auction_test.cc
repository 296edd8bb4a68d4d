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

#include "causalbid/auction.h"

#include <stdexcept>

#include "gtest/gtest.h"
#include "causalbid/rng.h"

namespace causalbid {
namespace {

TEST(AuctionTest, TiesWinAndPayHob) {
  const AuctionFeedback fb = RunAuction(0.4, 1.2, 0.7, 0.4);
  ASSERT_TRUE(fb.won());
  EXPECT_EQ(*fb.payment(), 0.4);
  EXPECT_EQ(fb.observed_outcome(), 1.2);
  EXPECT_DOUBLE_EQ(RealizedPayoff(fb), 0.8);
}

TEST(AuctionTest, LossRevealsOnlyBaseline) {
  const AuctionFeedback fb = RunAuction(0.41, 1.2, 0.7, 0.4);
  EXPECT_FALSE(fb.won());
  EXPECT_FALSE(fb.payment().has_value());
  EXPECT_EQ(fb.observed_outcome(), 0.7);
  EXPECT_EQ(RealizedPayoff(fb), 0.7);
}

TEST(AuctionTest, RejectsOutOfRangeInputs) {
  EXPECT_THROW(RunAuction(1.1, 0.0, 0.0, 0.5), std::invalid_argument);
  EXPECT_THROW(RunAuction(0.5, 0.0, 0.0, -0.1), std::invalid_argument);
  EXPECT_THROW(RunAuction(0.5, kOutcomeCeiling + 0.1, 0.0, 0.5),
               std::invalid_argument);
  EXPECT_THROW(RunAuction(0.5, 0.0, -1.0, 0.5), std::invalid_argument);
}

TEST(AuctionTest, OneSidedInferenceMatchesCounterfactual) {
  Rng rng(3);
  for (int i = 0; i < 20000; ++i) {
    const double m = rng.Uniform();
    const double placed = rng.Uniform();
    const double lower = placed * rng.Uniform();
    const AuctionFeedback fb = RunAuction(m, 1.0, 0.0, placed);
    EXPECT_EQ(InferWinIndicator(fb, placed, lower), lower >= m);
  }
  EXPECT_THROW(InferWinIndicator(AuctionFeedback::Lost(0.0), 0.2, 0.3),
               std::invalid_argument);
}

TEST(AuctionTest, ContextIsProjectedOntoUnitBall) {
  Eigen::VectorXd v(2);
  v << 3.0, 4.0;
  EXPECT_NEAR(Context(v).norm(), 1.0, 1e-15);
  v << 0.3, 0.4;
  EXPECT_NEAR(Context(v).norm(), 0.5, 1e-15);
}

TEST(HobParamsTest, Validate) {
  EXPECT_NO_THROW((HobParams{0.2, 0.5}.Validate()));
  EXPECT_THROW((HobParams{0.0, 0.5}.Validate()), std::invalid_argument);
  EXPECT_THROW((HobParams{0.2, 1.0}.Validate()), std::invalid_argument);
}

}  // namespace
}  // namespace causalbid
