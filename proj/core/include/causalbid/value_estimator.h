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

#ifndef CAUSALBID_VALUE_ESTIMATOR_H_
#define CAUSALBID_VALUE_ESTIMATOR_H_

#include <cstdint>

#include "Eigen/Core"
#include "causalbid/auction.h"

namespace causalbid {

// Inverse-propensity-weighted estimate of the treatment effect v1 - v0 from a
// single one-sided observation.
//   explore:  2 1[won] v1 - 2 1[lost] v0     (bid 0 or 1 with prob 1/2 each)
//   else:     1[won] v1 / g - 1[lost] v0 / (1 - g)
// `g_hat` must be strictly inside (0, 1) when not exploring (see
// ClipPropensity); otherwise std::invalid_argument.
double Ipw(const AuctionFeedback& feedback, double g_hat, bool explore);

// Variance proxy matching Ipw: 4 when exploring, 1 / (g (1 - g)) otherwise.
// Never below 4.
double VarianceProxy(double g_hat, bool explore);

// Clips an estimated win probability to [eps, 1 - eps] with
// eps = 1 / (2 sqrt(T)).
double ClipPropensity(double g_hat, std::int64_t horizon);

// Weighted ridge accumulator for the linear treatment-effect model:
//   A = I + sum sigma^-2 x x^T,   z = sum sigma^-2 x e,   theta = A^-1 z.
// The confidence radius is gamma ||x||_{A^-1} with
//   gamma = 1 + 14 ln T + 4 sqrt(sum u^2).
class RidgeState {
 public:
  explicit RidgeState(Eigen::Index dim);

  Eigen::Index dim() const { return z_.size(); }
  const Eigen::MatrixXd& design() const { return a_; }
  const Eigen::VectorXd& response() const { return z_; }
  double sum_u_sq() const { return sum_u_sq_; }
  std::int64_t count() const { return count_; }

  // Requires sigma >= 4 (or +inf, which adds nothing) and u in [0, 1].
  void Absorb(const Eigen::VectorXd& x, double e_tilde, double sigma, double u);

  Eigen::VectorXd ThetaHat() const;
  double Gamma(std::int64_t horizon) const;
  // ||x||_{A^-1} = sqrt(x^T A^-1 x).
  double MahalanobisNorm(const Eigen::VectorXd& x) const;
  double ValueConfWidth(const Eigen::VectorXd& x, std::int64_t horizon) const;

 private:
  Eigen::MatrixXd a_;
  Eigen::VectorXd z_;
  double sum_u_sq_ = 0.0;
  std::int64_t count_ = 0;
};

}  // namespace causalbid

#endif  // CAUSALBID_VALUE_ESTIMATOR_H_
