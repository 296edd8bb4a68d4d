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

#include "causalbid/value_estimator.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "Eigen/Cholesky"

namespace causalbid {

namespace {

void RequireOpenPropensity(double g_hat) {
  if (!(g_hat > 0.0 && g_hat < 1.0)) {
    throw std::invalid_argument(
        "propensity must lie strictly inside (0, 1); clip it first");
  }
}

}  // namespace

double Ipw(const AuctionFeedback& feedback, double g_hat, bool explore) {
  const double v = feedback.observed_outcome();
  if (explore) return feedback.won() ? 2.0 * v : -2.0 * v;
  RequireOpenPropensity(g_hat);
  return feedback.won() ? v / g_hat : -v / (1.0 - g_hat);
}

double VarianceProxy(double g_hat, bool explore) {
  if (explore) return 4.0;
  RequireOpenPropensity(g_hat);
  return 1.0 / (g_hat * (1.0 - g_hat));
}

double ClipPropensity(double g_hat, std::int64_t horizon) {
  const double eps = 0.5 / std::sqrt(static_cast<double>(horizon));
  return std::clamp(g_hat, eps, 1.0 - eps);
}

RidgeState::RidgeState(Eigen::Index dim)
    : a_(Eigen::MatrixXd::Identity(dim, dim)), z_(Eigen::VectorXd::Zero(dim)) {
  if (dim < 1) throw std::invalid_argument("RidgeState: dimension must be >= 1");
}

void RidgeState::Absorb(const Eigen::VectorXd& x, double e_tilde, double sigma,
                        double u) {
  if (x.size() != dim()) {
    throw std::invalid_argument("RidgeState::Absorb: dimension mismatch");
  }
  // 1/(g(1-g)) evaluates a hair below 4 at g = 0.5 in floating point.
  if (!(sigma >= 4.0 - 1e-9)) {
    throw std::invalid_argument("RidgeState::Absorb: sigma must be >= 4");
  }
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::invalid_argument("RidgeState::Absorb: u must lie in [0, 1]");
  }
  const double weight = std::isinf(sigma) ? 0.0 : 1.0 / (sigma * sigma);
  a_.selfadjointView<Eigen::Lower>().rankUpdate(x, weight);
  a_.triangularView<Eigen::StrictlyUpper>() = a_.transpose();
  z_ += weight * e_tilde * x;
  sum_u_sq_ += u * u;
  ++count_;
}

Eigen::VectorXd RidgeState::ThetaHat() const {
  Eigen::LLT<Eigen::MatrixXd> llt(a_);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("RidgeState: design matrix is not positive definite");
  }
  return llt.solve(z_);
}

double RidgeState::Gamma(std::int64_t horizon) const {
  return 1.0 + 14.0 * std::log(static_cast<double>(horizon)) +
         4.0 * std::sqrt(sum_u_sq_);
}

double RidgeState::MahalanobisNorm(const Eigen::VectorXd& x) const {
  Eigen::LLT<Eigen::MatrixXd> llt(a_);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("RidgeState: design matrix is not positive definite");
  }
  // x^T A^-1 x = ||L^-1 x||^2.
  const Eigen::VectorXd y = llt.matrixL().solve(x);
  return y.norm();
}

double RidgeState::ValueConfWidth(const Eigen::VectorXd& x,
                                  std::int64_t horizon) const {
  return Gamma(horizon) * MahalanobisNorm(x);
}

}  // namespace causalbid
