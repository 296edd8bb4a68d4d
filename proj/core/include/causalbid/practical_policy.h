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


#ifndef CAUSALBID_PRACTICAL_POLICY_H_
#define CAUSALBID_PRACTICAL_POLICY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "Eigen/Core"
#include "causalbid/book.h"
#include "causalbid/grid.h"
#include "causalbid/policy.h"

namespace causalbid {

struct TesOptions {
  double eta = 1.0;  // weight of the width bonus
  ConfidenceOptions confidence;
};

// Single-book UCB bidder. T0 = ceil(sqrt(T) ln T) initialization rounds bid
// 1 and feed both the initial bucket probabilities and the HOB counts; every
// later round, explored or not, is absorbed.
class TesPolicy final : public Policy {
 public:
  TesPolicy(std::int64_t horizon, Eigen::Index dim, HobParams params,
            TesOptions options = {});

  std::string_view name() const override { return "linucb_tes"; }
  BidChoice Choose(std::int64_t t, const Context& x, Rng& rng) override;
  void Update(std::int64_t t, const Context& x, double bid,
              const AuctionFeedback& feedback) override;

  const EstimationBook& book() const { return book_; }
  std::int64_t init_rounds() const { return init_rounds_; }
  std::int64_t explore_rounds() const { return explore_rounds_; }
  // Interval and index chosen in the last learning round.
  const std::optional<UcbSelection>& last_selection() const {
    return last_selection_;
  }

 private:
  struct Pending {
    std::int64_t round = 0;
    Branch branch = Branch::kNone;
    std::size_t bid_index = 0;
    double g_hat = 0.0;
    double u = 0.0;
  };

  std::int64_t horizon_;
  BidGrid grid_;
  HobParams params_;
  TesOptions options_;
  std::int64_t init_rounds_;
  std::vector<double> init_samples_;
  EstimationBook book_;
  std::int64_t explore_rounds_ = 0;
  std::optional<Pending> pending_;
  std::optional<UcbSelection> last_selection_;
};

// Outcome-regression baseline: ridge regression of v1 on x over won rounds
// only, bidding clip(theta_hat^T x + alpha ||x||_{A^-1}, 0, 1).
class LinUcbPolicy final : public Policy {
 public:
  explicit LinUcbPolicy(Eigen::Index dim, double alpha = 1.0);

  std::string_view name() const override { return "linucb"; }
  BidChoice Choose(std::int64_t t, const Context& x, Rng& rng) override;
  void Update(std::int64_t t, const Context& x, double bid,
              const AuctionFeedback& feedback) override;

  Eigen::VectorXd ThetaHat() const;
  std::int64_t count() const { return count_; }
  const Eigen::MatrixXd& design() const { return a_; }

 private:
  double alpha_;
  Eigen::MatrixXd a_;
  Eigen::VectorXd z_;
  std::int64_t count_ = 0;
};

}  // namespace causalbid

#endif  // CAUSALBID_PRACTICAL_POLICY_H_
