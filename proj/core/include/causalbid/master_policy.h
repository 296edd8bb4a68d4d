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


#ifndef CAUSALBID_MASTER_POLICY_H_
#define CAUSALBID_MASTER_POLICY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "causalbid/book.h"
#include "causalbid/grid.h"
#include "causalbid/policy.h"

namespace causalbid {

// Everything choose() decided, handed back to update().
struct MasterDecision {
  std::int64_t round = 0;
  Branch branch = Branch::kNone;
  int level = 0;  // 1-based; 0 during initialization
  std::size_t bid_index = 0;
  double bid = 0.0;
  // Level-book CDF estimate and width at the chosen bid, read before the
  // round's feedback exists.
  double g_hat = 0.0;
  double u = 0.0;
  // Levels whose books were read, in order.
  std::vector<int> levels_read;
  // Active bid indices at each level read.
  std::vector<std::vector<std::size_t>> active_sets;
};

// Rate-optimal leveled bidder. Initialization spends (L + 1) T0 rounds
// bidding 1: block 0 estimates the initial bucket probabilities, block l
// seeds level l's HOB counts. Afterwards each round walks the levels,
// exploring, assigning the round to a level, exploiting, or eliminating bids
// and descending. Each learning round updates at most one level's books.
class MasterPolicy final : public Policy {
 public:
  MasterPolicy(std::int64_t horizon, Eigen::Index dim, HobParams params,
               ConfidenceOptions options = {});

  std::string_view name() const override { return "master"; }
  BidChoice Choose(std::int64_t t, const Context& x, Rng& rng) override;
  // Throws std::logic_error unless (t, bid) match the pending decision.
  void Update(std::int64_t t, const Context& x, double bid,
              const AuctionFeedback& feedback) override;

  MasterDecision Decide(std::int64_t t, const Context& x, Rng& rng);
  void Apply(const MasterDecision& decision, const Context& x,
             const AuctionFeedback& feedback);

  int levels() const { return levels_; }
  std::int64_t block_length() const { return block_length_; }
  std::int64_t init_rounds() const { return (levels_ + 1) * block_length_; }
  const BidGrid& grid() const { return grid_; }
  // Level books, 1-based.
  const EstimationBook& book(int level) const { return books_.at(level - 1); }
  std::int64_t absorbed(int level) const { return absorbed_.at(level - 1); }
  std::int64_t exploit_rounds() const { return exploit_rounds_; }
  // (round, level) of every exploration round.
  const std::vector<std::pair<std::int64_t, int>>& explore_log() const {
    return explore_log_;
  }
  const std::optional<MasterDecision>& last_decision() const {
    return last_;
  }

 private:
  std::int64_t horizon_;
  BidGrid grid_;
  HobParams params_;
  ConfidenceOptions options_;
  int levels_;
  std::int64_t block_length_;
  std::vector<double> init_samples_;
  std::vector<EstimationBook> books_;
  std::vector<std::int64_t> absorbed_;
  std::int64_t exploit_rounds_ = 0;
  std::vector<std::pair<std::int64_t, int>> explore_log_;
  std::optional<MasterDecision> pending_;
  std::optional<MasterDecision> last_;
};

// L = ceil(log2 sqrt(T)) and T0 = ceil(sqrt(T) ln T).
int LevelCount(std::int64_t horizon);
std::int64_t InitBlockLength(std::int64_t horizon);

}  // namespace causalbid

#endif  // CAUSALBID_MASTER_POLICY_H_
