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
#include <stdexcept>
#include <vector>

#include "causalbid/grid.h"

namespace causalbid {

namespace {

constexpr double kSweepStep = 1e-4;
constexpr double kRefineStep = 1e-6;

void Consider(const HobModel& hob, double v, double b, OracleBid& best) {
  const double r = ExpectedReward(hob, v, b);
  if (r > best.reward || (r == best.reward && b < best.bid)) {
    best.bid = b;
    best.reward = r;
  }
}

}  // namespace

double ExpectedReward(const HobModel& hob, double v, double b) {
  if (!(b >= 0.0 && b <= 1.0)) {
    throw std::invalid_argument("ExpectedReward: bid outside [0, 1]");
  }
  return hob.Cdf(b) * (v - b) + hob.CdfIntegral(b);
}

OracleBid OracleBest(const HobModel& hob, double v) {
  OracleBid best{0.0, ExpectedReward(hob, v, 0.0)};
  const int steps = static_cast<int>(std::lround(1.0 / kSweepStep));
  for (int i = 1; i <= steps; ++i) {
    Consider(hob, v, std::min(1.0, i * kSweepStep), best);
  }
  const double center = best.bid;
  const int half = static_cast<int>(std::lround(kSweepStep / kRefineStep));
  for (int i = -half; i <= half; ++i) {
    const double b = center + i * kRefineStep;
    if (b >= 0.0 && b <= 1.0) Consider(hob, v, b, best);
  }
  for (double a : hob.Atoms()) Consider(hob, v, a, best);
  return best;
}

OracleBid TruthfulOracle(const HobModel& hob, double v) {
  const double b = std::clamp(v, 0.0, 1.0);
  return {b, ExpectedReward(hob, v, b)};
}

SeparationResult SeparationCheck(std::int64_t horizon) {
  if (horizon < 16) {
    throw std::invalid_argument("SeparationCheck: horizon must be >= 16");
  }
  SeparationResult out;
  out.delta = 0.25 / std::sqrt(static_cast<double>(horizon));
  const AtomMixHob hob(out.delta);
  const double mu1 = 0.25;
  const double mu2 = 0.25 + 2.0 * out.delta;
  const double best1 = ExpectedReward(hob, mu1, mu1);
  const double best2 = ExpectedReward(hob, mu2, mu2);
  auto gap = [&](double b) {
    return (best1 - ExpectedReward(hob, mu1, b)) +
           (best2 - ExpectedReward(hob, mu2, b));
  };

  std::vector<double> candidates;
  constexpr int kSweep = 20000;
  for (int i = 0; i <= kSweep; ++i) {
    candidates.push_back(mu1 + (mu2 - mu1) * i / kSweep);
  }
  candidates.push_back(hob.atom());
  candidates.push_back(std::nextafter(hob.atom(), 0.0));
  const BidGrid grid(horizon);
  for (double b : grid.points()) {
    if (b >= mu1 && b <= mu2) candidates.push_back(b);
  }

  out.min_gap = gap(mu1);
  out.argmin_bid = mu1;
  for (double b : candidates) {
    const double g = gap(b);
    if (g < out.min_gap) {
      out.min_gap = g;
      out.argmin_bid = b;
    }
  }
  out.gap_at_mu1 = best2 - ExpectedReward(hob, mu2, mu1);
  out.gap_at_mu2 = best1 - ExpectedReward(hob, mu1, mu2);
  return out;
}

}  // namespace causalbid
