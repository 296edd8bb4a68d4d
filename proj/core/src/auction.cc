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

#include "causalbid/auction.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace causalbid {

namespace {

void CheckRange(double value, double lo, double hi, const char* what) {
  if (!(value >= lo && value <= hi)) {
    throw std::invalid_argument(std::string(what) + " out of range: " +
                                std::to_string(value));
  }
}

}  // namespace

Context::Context(Eigen::VectorXd x) : x_(std::move(x)) {
  if (!x_.allFinite()) throw std::invalid_argument("Context: non-finite entry");
  const double n = x_.norm();
  if (n > 1.0) x_ /= n;
}

AuctionFeedback AuctionFeedback::Won(double payment, double outcome) {
  CheckRange(payment, 0.0, 1.0, "payment");
  CheckRange(outcome, 0.0, kOutcomeCeiling, "outcome");
  return AuctionFeedback(payment, outcome);
}

AuctionFeedback AuctionFeedback::Lost(double outcome) {
  CheckRange(outcome, 0.0, kOutcomeCeiling, "outcome");
  return AuctionFeedback(std::nullopt, outcome);
}

void HobParams::Validate() const {
  if (!(omega > 0.0 && omega < 1.0)) {
    throw std::invalid_argument("HobParams: omega must lie in (0, 1)");
  }
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw std::invalid_argument("HobParams: lambda must lie in (0, 1)");
  }
}

AuctionFeedback RunAuction(double hob, double v1, double v0, double bid) {
  CheckRange(hob, 0.0, 1.0, "hob");
  CheckRange(bid, 0.0, 1.0, "bid");
  CheckRange(v1, 0.0, kOutcomeCeiling, "v1");
  CheckRange(v0, 0.0, kOutcomeCeiling, "v0");
  if (bid >= hob) return AuctionFeedback::Won(hob, v1);
  return AuctionFeedback::Lost(v0);
}

double RealizedPayoff(const AuctionFeedback& feedback) {
  if (feedback.won()) return feedback.observed_outcome() - *feedback.payment();
  return feedback.observed_outcome();
}

bool InferWinIndicator(const AuctionFeedback& feedback, double placed_bid,
                       double lower_bid) {
  if (lower_bid > placed_bid) {
    throw std::invalid_argument(
        "InferWinIndicator: lower_bid must not exceed placed_bid");
  }
  if (!feedback.won()) return false;
  return lower_bid >= *feedback.payment();
}

}  // namespace causalbid
