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


#include "causalbid/book.h"

namespace causalbid {

EstimationBook::EstimationBook(const BidGrid& grid, Eigen::Index dim)
    : hob_(grid), value_(dim) {}

BookSnapshot EstimationBook::Snapshot(const Context& x, std::int64_t horizon,
                                      double scale) const {
  BookSnapshot s;
  s.cdf = hob_.CdfEstimates();
  s.integral = hob_.IntegralEstimates();
  s.cdf_width = hob_.CdfWidths(horizon);
  if (scale != 1.0) {
    for (double& u : s.cdf_width) u *= scale;
  }
  s.value_estimate = value_.ThetaHat().dot(x.vector());
  s.gamma_norm = scale * value_.ValueConfWidth(x.vector(), horizon);
  return s;
}

void EstimationBook::Absorb(const Context& x, std::size_t bid_index,
                            const AuctionFeedback& feedback, bool explore,
                            double g_hat, double u, std::int64_t horizon) {
  const double g = explore ? g_hat : ClipPropensity(g_hat, horizon);
  const double e = Ipw(feedback, g, explore);
  const double sigma = VarianceProxy(g, explore);
  value_.Absorb(x.vector(), e, sigma, u);
  hob_.Ingest(bid_index, feedback);
}

}  // namespace causalbid
