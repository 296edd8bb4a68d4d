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

#include "causalbid/rng.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"

namespace causalbid {
namespace {

TEST(RngTest, SplitMixReferenceValues) {
  // First outputs of the reference SplitMix64 generator seeded with 0.
  EXPECT_EQ(SplitMix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(SplitMix64(0x9e3779b97f4a7c15ULL), 0x6e789e6aa1b965f4ULL);
}

TEST(RngTest, SeedAndStreamDetermineSequence) {
  Rng a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  int diff_stream = 0, diff_seed = 0;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t x = a.NextWord();
    EXPECT_EQ(x, b.NextWord());
    diff_stream += x != c.NextWord();
    diff_seed += x != d.NextWord();
  }
  EXPECT_GT(diff_stream, 95);
  EXPECT_GT(diff_seed, 95);
}

TEST(RngTest, SplitIsDeterministic) {
  const Rng parent(9, 1);
  Rng a = parent.Split(5), b = parent.Split(5), c = parent.Split(6);
  EXPECT_EQ(a.NextWord(), b.NextWord());
  EXPECT_NE(a.NextWord(), c.NextWord());
}

TEST(RngTest, VariateMoments) {
  Rng rng(11);
  constexpr int kN = 200000;
  double su = 0, su2 = 0, sn = 0, sn2 = 0, sb = 0, sg = 0, sbern = 0;
  for (int i = 0; i < kN; ++i) {
    const double u = rng.Uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    su += u;
    su2 += u * u;
    const double n = rng.Normal();
    sn += n;
    sn2 += n * n;
    sb += rng.Beta(5.0, 7.0);
    sg += rng.Gamma(0.5);
    sbern += rng.Bernoulli(0.3);
  }
  EXPECT_NEAR(su / kN, 0.5, 0.005);
  EXPECT_NEAR(su2 / kN - 0.25, 1.0 / 12.0, 0.003);
  EXPECT_NEAR(sn / kN, 0.0, 0.01);
  EXPECT_NEAR(sn2 / kN, 1.0, 0.015);
  EXPECT_NEAR(sb / kN, 5.0 / 12.0, 0.003);
  EXPECT_NEAR(sg / kN, 0.5, 0.01);
  EXPECT_NEAR(sbern / kN, 0.3, 0.005);
}

}  // namespace
}  // namespace causalbid
