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


#ifndef CAUSALBID_BOOK_H_
#define CAUSALBID_BOOK_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "causalbid/auction.h"
#include "causalbid/grid.h"
#include "causalbid/hob_stats.h"
#include "causalbid/ucb_engine.h"
#include "causalbid/value_estimator.h"

namespace causalbid {

// Width multipliers and thresholds shared by the UCB bidders. The defaults
// are the analysed constants.
struct ConfidenceOptions {
  // Multiplies every UCB width, including the leveled prefactor and floor.
  // The accumulated sum of u^2 inside gamma is never scaled.
  double scale = 1.0;
  // Exploration threshold; values <= 0 select C(lambda, omega).
  double explore_threshold = 0.0;

  double Threshold(const HobParams& params) const {
    return explore_threshold > 0.0 ? explore_threshold : UcbConstant(params);
  }
};

// Per-round read-only view of a book: CDF estimates, integrals and widths on
// the full grid, plus the value estimate and its confidence radius at x.
struct BookSnapshot {
  std::vector<double> cdf;
  std::vector<double> integral;
  std::vector<double> cdf_width;
  double value_estimate = 0.0;
  double gamma_norm = 0.0;

  UcbInputs inputs() const {
    return {value_estimate, gamma_norm, cdf, integral, cdf_width};
  }
};

// HOB statistics and value regression fed by the same rounds.
class EstimationBook {
 public:
  EstimationBook(const BidGrid& grid, Eigen::Index dim);

  const HobStats& hob() const { return hob_; }
  const RidgeState& value() const { return value_; }
  HobStats& mutable_hob() { return hob_; }

  BookSnapshot Snapshot(const Context& x, std::int64_t horizon,
                        double scale = 1.0) const;

  // Absorbs one learning round: an IPW sample (explore branch when
  // `explore`, otherwise with the clipped propensity `g_hat`) weighted by the
  // variance proxy, the CDF width `u` at the chosen bid, and the HOB feedback.
  void Absorb(const Context& x, std::size_t bid_index,
              const AuctionFeedback& feedback, bool explore, double g_hat,
              double u, std::int64_t horizon);

 private:
  HobStats hob_;
  RidgeState value_;
};

}  // namespace causalbid

#endif  // CAUSALBID_BOOK_H_
