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

#include "causalbid/hob_models.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "causalbid/beta.h"

namespace causalbid {
namespace {

std::vector<std::unique_ptr<HobModel>> Models() {
  std::vector<std::unique_ptr<HobModel>> out;
  out.push_back(std::make_unique<UniformHob>());
  out.push_back(std::make_unique<BetaHob>(5.0, 7.0));
  out.push_back(std::make_unique<AtomMixHob>(0.05));
  Rng rng(5);
  out.push_back(RandomLocallyBoundedHob(rng, 0.2, 0.5));
  return out;
}

// Trapezoid rule on a fine grid; atoms only cause O(h) error.
double TrapezoidIntegral(const HobModel& hob, double b) {
  constexpr int kSteps = 200000;
  const double h = b / kSteps;
  double s = 0.5 * (hob.Cdf(0.0) + hob.Cdf(b));
  for (int i = 1; i < kSteps; ++i) s += hob.Cdf(i * h);
  return s * h;
}

TEST(HobModelsTest, IntegralMatchesQuadrature) {
  for (const auto& hob : Models()) {
    for (double b : {0.0, 0.13, 0.3, 0.5, 0.87, 1.0}) {
      EXPECT_NEAR(hob->CdfIntegral(b), TrapezoidIntegral(*hob, b), 2e-5)
          << hob->name() << " at " << b;
    }
  }
}

TEST(HobModelsTest, CdfShape) {
  for (const auto& hob : Models()) {
    EXPECT_EQ(hob->Cdf(-0.1), 0.0) << hob->name();
    EXPECT_EQ(hob->Cdf(1.0), 1.0) << hob->name();
    double prev = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      const double g = hob->Cdf(i / 1000.0);
      EXPECT_GE(g, prev - 1e-15);
      prev = g;
    }
  }
}

TEST(HobModelsTest, SamplesFollowCdf) {
  for (const auto& hob : Models()) {
    Rng rng(17);
    constexpr int kN = 100000;
    std::vector<double> s(kN);
    for (double& m : s) m = hob->Sample(rng);
    std::sort(s.begin(), s.end());
    double ks = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double b = i / 100.0;
      const double emp = static_cast<double>(std::upper_bound(s.begin(), s.end(), b) - s.begin()) / kN;
      ks = std::max(ks, std::abs(emp - hob->Cdf(b)));
    }
    // Kolmogorov bound at level 1e-6 is about 1.95 / sqrt(n).
    EXPECT_LT(ks, 1.95 / std::sqrt(static_cast<double>(kN))) << hob->name();
  }
}

TEST(HobModelsTest, DeclaredLocalityHolds) {
  for (const auto& hob : Models()) {
    const HobParams p = hob->local_params();
    EXPECT_LE(ScanLocalBound(*hob, p.omega), p.lambda + 1e-9) << hob->name();
  }
}

TEST(HobModelsTest, RandomLocallyBoundedRespectsLambda) {
  Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    const double omega = 0.1 + 0.3 * rng.Uniform();
    const double lambda = std::min(0.95, omega + 0.05 + 0.3 * rng.Uniform());
    const auto hob = RandomLocallyBoundedHob(rng, omega, lambda);
    EXPECT_LE(ScanLocalBound(*hob, omega), lambda + 1e-9);
  }
}

TEST(HobModelsTest, BetaLocalityUsesPeakDensity) {
  const BetaHob hob(5.0, 7.0, 0.15);
  const double mode = 4.0 / 10.0;
  EXPECT_NEAR(hob.max_density(), BetaPdf(5.0, 7.0, mode), 1e-9);
  EXPECT_NEAR(hob.local_params().lambda, 0.15 * BetaPdf(5.0, 7.0, mode), 1e-9);
  EXPECT_THROW(BetaHob(0.5, 2.0), std::invalid_argument);
}

TEST(HobModelsTest, AtomMixClosedForm) {
  const AtomMixHob hob(0.05);
  EXPECT_DOUBLE_EQ(hob.atom(), 0.3);
  EXPECT_NEAR(hob.Cdf(std::nextafter(0.3, 0.0)), 0.15, 1e-12);
  EXPECT_NEAR(hob.Cdf(0.3), 0.65, 1e-12);
  EXPECT_NEAR(hob.local_params().lambda, 0.55, 1e-12);
  EXPECT_THROW(AtomMixHob(0.0), std::invalid_argument);
}

TEST(HobModelsTest, FactoryFamilies) {
  HobSpec spec;
  EXPECT_EQ(MakeHobModel(spec)->name(), "beta(5,7)");
  spec.family = "uniform";
  EXPECT_EQ(MakeHobModel(spec)->local_params().omega, 0.25);
  spec.family = "atom_mix";
  EXPECT_EQ(MakeHobModel(spec)->name(), "atom_mix");
  spec.family = "pareto";
  EXPECT_THROW(MakeHobModel(spec), std::invalid_argument);
}

}  // namespace
}  // namespace causalbid
