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

#include "causalbid/beta.h"

#include <cmath>
#include <stdexcept>

#include "gtest/gtest.h"

namespace causalbid {
namespace {

// Composite Simpson rule for the density, independent of the continued
// fraction.
double SimpsonCdf(double a, double b, double x) {
  constexpr int kPanels = 20000;
  const double h = x / kPanels;
  double s = BetaPdf(a, b, 0.0) + BetaPdf(a, b, x);
  for (int i = 1; i < kPanels; ++i) {
    s += (i % 2 ? 4.0 : 2.0) * BetaPdf(a, b, i * h);
  }
  return s * h / 3.0;
}

TEST(BetaTest, MatchesQuadrature) {
  for (const auto& [a, b] : {std::pair{5.0, 7.0}, {1.0, 1.0}, {2.5, 1.5}, {6.0, 3.0}}) {
    for (double x : {0.05, 0.2, 0.41, 0.5, 0.77, 0.95}) {
      EXPECT_NEAR(BetaCdf(a, b, x), SimpsonCdf(a, b, x), 1e-10)
          << a << "," << b << " at " << x;
    }
  }
}

TEST(BetaTest, ClosedForms) {
  for (double x : {0.1, 0.3, 0.9}) {
    EXPECT_NEAR(BetaCdf(1.0, 1.0, x), x, 1e-14);
    EXPECT_NEAR(BetaCdf(3.0, 1.0, x), x * x * x, 1e-14);
    EXPECT_NEAR(BetaCdf(1.0, 2.0, x), 1.0 - (1.0 - x) * (1.0 - x), 1e-14);
  }
  EXPECT_NEAR(LogBeta(2.0, 3.0), std::log(1.0 / 12.0), 1e-14);
}

TEST(BetaTest, Reflection) {
  for (double x : {0.15, 0.5, 0.62}) {
    EXPECT_NEAR(BetaCdf(5.0, 7.0, x), 1.0 - BetaCdf(7.0, 5.0, 1.0 - x), 1e-13);
  }
}

TEST(BetaTest, RejectsInvalidArguments) {
  EXPECT_THROW(BetaCdf(0.0, 1.0, 0.5), std::domain_error);
  EXPECT_THROW(BetaCdf(1.0, 1.0, 1.5), std::domain_error);
  EXPECT_THROW(BetaPdf(1.0, -1.0, 0.5), std::domain_error);
  EXPECT_EQ(BetaCdf(2.0, 2.0, 0.0), 0.0);
  EXPECT_EQ(BetaCdf(2.0, 2.0, 1.0), 1.0);
}

}  // namespace
}  // namespace causalbid
