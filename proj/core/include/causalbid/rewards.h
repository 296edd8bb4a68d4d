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


#ifndef CAUSALBID_REWARDS_H_
#define CAUSALBID_REWARDS_H_

#include <cstdint>

#include "causalbid/hob_models.h"

namespace causalbid {

// Baseline-centered expected payoff of bidding b with marginal value v:
// G(b) (v - b) + integral of G over [0, b]. Requires b in [0, 1].
double ExpectedReward(const HobModel& hob, double v, double b);

struct OracleBid {
  double bid = 0.0;
  double reward = 0.0;
};

// Best bid by brute force: a 1e-4 sweep of [0, 1], local refinement to 1e-6
// around the best sweep point, and every atom of G as an extra candidate.
// Ties go to the lower bid.
OracleBid OracleBest(const HobModel& hob, double v);

// Truthful bid clamp(v, 0, 1), which is optimal in a second-price auction
// for any G. Used for per-round regret; OracleBest is its brute-force check.
OracleBid TruthfulOracle(const HobModel& hob, double v);

// Two-point instance pair sharing the atom-mix HOB with its atom at
// 1/4 + delta, delta = 1/(4 sqrt(T)); values mu1 = 1/4 and mu2 = 1/4 + 2 delta.
struct SeparationResult {
  double delta = 0.0;
  double min_gap = 0.0;   // min over bids of the summed suboptimality
  double argmin_bid = 0.0;
  double gap_at_mu1 = 0.0;
  double gap_at_mu2 = 0.0;
};

// Minimizes [r1(mu1) - r1(b)] + [r2(mu2) - r2(b)] over b in [mu1, mu2]: the
// bid grid points of horizon T inside the interval, a fine sweep, and both
// sides of the atom. Requires T >= 16.
SeparationResult SeparationCheck(std::int64_t horizon);

}  // namespace causalbid

#endif  // CAUSALBID_REWARDS_H_
