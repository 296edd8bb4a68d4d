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

#include "causalbid/rewards.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "gtest/gtest.h"
#include "causalbid/hob_models.h"
#include "causalbid/rng.h"

namespace causalbid {
namespace {

TEST(RewardsTest, ExpectedRewardMatchesMonteCarlo) {
  const BetaHob hob(5.0, 7.0);
  Rng rng(14);
  constexpr int kN = 400000;
  const double v = 0.55, b = 0.45;
  double sum = 0.0;
  for (int i = 0; i < kN; ++i) {
    const double m = hob.Sample(rng);
    // E[(v - m) 1{m <= b}] = G(b)(v - b) + int_0^b G by parts.
    if (m <= b) sum += v - m;
  }
  EXPECT_NEAR(ExpectedReward(hob, v, b), sum / kN, 4e-3);
  EXPECT_THROW(ExpectedReward(hob, v, 1.2), std::invalid_argument);
}

TEST(RewardsTest, TruthfulBidIsOptimal) {
  Rng rng(2);
  std::vector<std::unique_ptr<HobModel>> models;
  models.push_back(std::make_unique<UniformHob>());
  models.push_back(std::make_unique<BetaHob>(5.0, 7.0));
  models.push_back(std::make_unique<AtomMixHob>(0.05));
  models.push_back(RandomLocallyBoundedHob(rng, 0.2, 0.5));
  for (const auto& hob : models) {
    for (int i = 0; i < 20; ++i) {
      const double v = -0.2 + 1.4 * rng.Uniform();
      const OracleBid brute = OracleBest(*hob, v);
      const OracleBid truthful = TruthfulOracle(*hob, v);
      EXPECT_DOUBLE_EQ(truthful.bid, std::clamp(v, 0.0, 1.0));
      EXPECT_GE(truthful.reward, brute.reward - 1e-12) << hob->name();
      EXPECT_LE(truthful.reward - brute.reward, 1e-6) << hob->name();
    }
  }
}

TEST(RewardsTest, SeparationExamples) {
  for (std::int64_t t : {100, 10000, 1000000}) {
    const SeparationResult r = SeparationCheck(t);
    EXPECT_DOUBLE_EQ(r.delta, 0.25 / std::sqrt(static_cast<double>(t)));
    EXPECT_GE(r.min_gap, r.delta / 2.0 - 1e-9) << t;
    EXPECT_GE(r.argmin_bid, 0.25 - 1e-12);
    EXPECT_LE(r.argmin_bid, 0.25 + 2.0 * r.delta + 1e-12);
  }
  EXPECT_THROW(SeparationCheck(10), std::invalid_argument);
}

TEST(RewardsTest, SeparationIndependentSweep) {
  // Closed-form rewards of the atom-mix instance, swept independently.
  const std::int64_t t = 10000;
  const double delta = 0.25 / std::sqrt(static_cast<double>(t));
  const AtomMixHob hob(delta);
  const double mu1 = 0.25, mu2 = 0.25 + 2.0 * delta;
  auto r = [&](double v, double b) {
    return hob.Cdf(b) * (v - b) + hob.CdfIntegral(b);
  };
  const double best1 = r(mu1, mu1), best2 = r(mu2, mu2);
  double worst = INFINITY;
  for (int i = 0; i <= 100000; ++i) {
    const double b = mu1 + (mu2 - mu1) * i / 100000.0;
    worst = std::min(worst, best1 - r(mu1, b) + best2 - r(mu2, b));
  }
  EXPECT_GE(worst, delta / 2.0 - 1e-9);
  EXPECT_NEAR(SeparationCheck(t).min_gap, worst, 1e-7);
}

}  // namespace
}  // namespace causalbid
