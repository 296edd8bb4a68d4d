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

#ifndef CAUSALBID_POLICY_H_
#define CAUSALBID_POLICY_H_

#include <cstdint>
#include <string_view>

#include "causalbid/auction.h"
#include "causalbid/rng.h"

namespace causalbid {

// How a round's bid was produced. kNone is used by policies without a
// branch structure (LinUCB, the oracle).
enum class Branch { kNone, kInit, kExplore, kAssign, kExploit };

std::string_view BranchName(Branch branch);

struct BidChoice {
  double bid = 0.0;
  Branch branch = Branch::kNone;
  // Level that produced the bid (master routine only, 1-based; 0 otherwise).
  int level = 0;
};

// A bidding policy. Rounds are 1-based. Each round calls Choose once and then
// Update once with the feedback of the returned bid; implementations throw
// std::logic_error when the protocol is violated. One instance serves one
// simulation run.
class Policy {
 public:
  virtual ~Policy() = default;

  virtual std::string_view name() const = 0;
  // Returned bids always lie in [0, 1].
  virtual BidChoice Choose(std::int64_t t, const Context& x, Rng& rng) = 0;
  virtual void Update(std::int64_t t, const Context& x, double bid,
                      const AuctionFeedback& feedback) = 0;
};

}  // namespace causalbid

#endif  // CAUSALBID_POLICY_H_
