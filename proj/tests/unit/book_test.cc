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

#include "causalbid/book.h"

#include <cmath>

#include "gtest/gtest.h"

namespace causalbid {
namespace {

Context Unit3() {
  Eigen::VectorXd x(3);
  x << 0.6, 0.0, 0.8;
  return Context(x);
}

TEST(EstimationBookTest, AbsorbFeedsBothEstimators) {
  const BidGrid grid(100);
  EstimationBook book(grid, 3);
  book.Absorb(Unit3(), grid.last(), AuctionFeedback::Won(0.25, 1.0), true, 0.5,
              0.0, 100);
  EXPECT_EQ(book.hob().rounds(), 1);
  EXPECT_EQ(book.value().count(), 1);
  // Explore sample 2 v1 = 2 with weight 1/16.
  EXPECT_NEAR(book.value().response()(0), 0.6 * 2.0 / 16.0, 1e-15);
}

TEST(EstimationBookTest, PropensityIsClipped) {
  const BidGrid grid(100);
  EstimationBook book(grid, 3);
  // g_hat = 1 would be invalid; clipping maps it to 1 - 1/20.
  book.Absorb(Unit3(), 5, AuctionFeedback::Lost(1.0), false, 1.0, 0.2, 100);
  const double g = 0.95;
  const double w = (g * (1 - g)) * (g * (1 - g));
  EXPECT_NEAR(book.value().response()(0), 0.6 * (-1.0 / (1 - g)) * w, 1e-12);
  EXPECT_NEAR(book.value().sum_u_sq(), 0.04, 1e-15);
}

TEST(EstimationBookTest, SnapshotScalesWidths) {
  const BidGrid grid(100);
  EstimationBook book(grid, 3);
  for (int i = 0; i < 50; ++i) {
    book.Absorb(Unit3(), grid.last(), AuctionFeedback::Won(0.01 * i, 1.0), true,
                0.5, 0.0, 100);
  }
  const BookSnapshot a = book.Snapshot(Unit3(), 100);
  const BookSnapshot b = book.Snapshot(Unit3(), 100, 0.25);
  EXPECT_EQ(a.cdf, b.cdf);
  EXPECT_EQ(a.value_estimate, b.value_estimate);
  EXPECT_NEAR(b.gamma_norm, 0.25 * a.gamma_norm, 1e-12);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    EXPECT_NEAR(b.cdf_width[j], 0.25 * a.cdf_width[j], 1e-15);
  }
}

TEST(ConfidenceOptionsTest, DefaultThresholdIsUcbConstant) {
  const HobParams p{0.25, 0.25};
  EXPECT_DOUBLE_EQ(ConfidenceOptions{}.Threshold(p), 0.25 * 0.75 / 64.0);
  EXPECT_DOUBLE_EQ((ConfidenceOptions{1.0, 0.3}.Threshold(p)), 0.3);
}

}  // namespace
}  // namespace causalbid
