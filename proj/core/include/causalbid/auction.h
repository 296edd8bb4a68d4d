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

#ifndef CAUSALBID_AUCTION_H_
#define CAUSALBID_AUCTION_H_

#include <optional>

#include "Eigen/Core"

namespace causalbid {

// Outcomes live in [0, kOutcomeCeiling]. The ceiling is 2 rather than 1
// because the periodic benchmark market sets v1 = v0 + Bernoulli(.) with v0
// close to 1.
inline constexpr double kOutcomeCeiling = 2.0;

// Feature vector with Euclidean norm at most 1. Longer inputs are scaled onto
// the unit sphere at construction.
class Context {
 public:
  Context() = default;
  explicit Context(Eigen::VectorXd x);

  const Eigen::VectorXd& vector() const { return x_; }
  Eigen::Index dim() const { return x_.size(); }
  double norm() const { return x_.norm(); }

 private:
  Eigen::VectorXd x_;
};

// What the bidder sees after one second-price auction.
class AuctionFeedback {
 public:
  static AuctionFeedback Won(double payment, double outcome);
  static AuctionFeedback Lost(double outcome);

  bool won() const { return payment_.has_value(); }
  // Present iff won; equals the highest other bid.
  const std::optional<double>& payment() const { return payment_; }
  // v1 when won, v0 when lost.
  double observed_outcome() const { return outcome_; }

 private:
  AuctionFeedback(std::optional<double> payment, double outcome)
      : payment_(payment), outcome_(outcome) {}

  std::optional<double> payment_;
  double outcome_ = 0.0;
};

// Locality parameters of a HOB distribution: |b1 - b2| <= omega implies
// |G(b1) - G(b2)| <= lambda. Both must lie in (0, 1).
struct HobParams {
  double omega = 0.0;
  double lambda = 0.0;

  void Validate() const;
};

// Second-price rule: the bid wins iff bid >= hob (ties win) and then pays the
// HOB. Throws std::invalid_argument on inputs outside their ranges.
AuctionFeedback RunAuction(double hob, double v1, double v0, double bid);

// Observed outcome minus payment when won, observed outcome otherwise.
double RealizedPayoff(const AuctionFeedback& feedback);

// One-sided inference: the indicator 1[lower_bid >= m] recovered from the
// feedback of a bid placed at `placed_bid >= lower_bid`.
bool InferWinIndicator(const AuctionFeedback& feedback, double placed_bid,
                       double lower_bid);

}  // namespace causalbid

#endif  // CAUSALBID_AUCTION_H_
