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


#include "causalbid/practical_policy.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "Eigen/Cholesky"
#include "causalbid/master_policy.h"
#include "causalbid/ucb_engine.h"

namespace causalbid {

TesPolicy::TesPolicy(std::int64_t horizon, Eigen::Index dim, HobParams params,
                     TesOptions options)
    : horizon_(horizon),
      grid_(horizon),
      params_(params),
      options_(options),
      init_rounds_(InitBlockLength(horizon)),
      book_(grid_, dim) {
  params_.Validate();
  if (!(options_.eta >= 0.0)) {
    throw std::invalid_argument("TesPolicy: eta must be >= 0");
  }
  if (!(options_.confidence.scale > 0.0)) {
    throw std::invalid_argument("TesPolicy: confidence scale must be > 0");
  }
}

BidChoice TesPolicy::Choose(std::int64_t t, const Context& x, Rng& rng) {
  if (pending_) throw std::logic_error("TesPolicy: update() not called");
  Pending p;
  p.round = t;
  if (t <= init_rounds_) {
    p.branch = Branch::kInit;
    p.bid_index = grid_.last();
    pending_ = p;
    return {1.0, Branch::kInit, 0};
  }

  const BookSnapshot snap =
      book_.Snapshot(x, horizon_, options_.confidence.scale);
  const UcbSelection sel = SelectInterval(snap.cdf, snap.integral,
                                          snap.value_estimate, params_, grid_);
  last_selection_ = sel;
  const double test = snap.gamma_norm + 4.0 * snap.cdf_width[grid_.last()];
  if (test > options_.confidence.Threshold(params_)) {
    p.branch = Branch::kExplore;
    p.bid_index = rng.Bernoulli(0.5) ? grid_.last() : 0;
  } else {
    std::vector<std::size_t> subset;
    for (std::size_t j = sel.left; j <= sel.right; ++j) subset.push_back(j);
    const std::vector<UcbEntry> table = ComputeTable(
        snap.inputs(), subset, params_, horizon_, WidthForm::kPractical);
    std::size_t best = 0;
    double best_score = 0.0;
    for (std::size_t i = 0; i < table.size(); ++i) {
      const double score =
          table[i].reward(sel.q) + options_.eta * table[i].width(sel.q);
      if (i == 0 || score > best_score) {
        best = i;
        best_score = score;
      }
    }
    p.branch = Branch::kExploit;
    p.bid_index = table[best].index;
  }
  p.g_hat = snap.cdf[p.bid_index];
  p.u = book_.hob().CdfWidth(p.bid_index, horizon_);
  pending_ = p;
  return {grid_.point(p.bid_index), p.branch, 0};
}

void TesPolicy::Update(std::int64_t t, const Context& x, double bid,
                       const AuctionFeedback& feedback) {
  if (!pending_ || pending_->round != t ||
      grid_.point(pending_->bid_index) != bid) {
    throw std::logic_error("TesPolicy: update does not match choose()");
  }
  const Pending p = *pending_;
  pending_.reset();
  if (p.branch == Branch::kInit) {
    if (!feedback.won()) throw std::logic_error("TesPolicy: bid 1 lost");
    init_samples_.push_back(*feedback.payment());
    book_.mutable_hob().Ingest(p.bid_index, feedback);
    if (t == init_rounds_) {
      book_.mutable_hob().SetInitialProbabilities(
          InitEstimate(init_samples_, grid_));
    }
    return;
  }
  const bool explore = p.branch == Branch::kExplore;
  if (explore) ++explore_rounds_;
  book_.Absorb(x, p.bid_index, feedback, explore, p.g_hat, p.u, horizon_);
}

LinUcbPolicy::LinUcbPolicy(Eigen::Index dim, double alpha)
    : alpha_(alpha),
      a_(Eigen::MatrixXd::Identity(dim, dim)),
      z_(Eigen::VectorXd::Zero(dim)) {
  if (dim < 1) throw std::invalid_argument("LinUcbPolicy: dim must be >= 1");
  if (!(alpha >= 0.0)) throw std::invalid_argument("LinUcbPolicy: alpha < 0");
}

Eigen::VectorXd LinUcbPolicy::ThetaHat() const { return a_.llt().solve(z_); }

BidChoice LinUcbPolicy::Choose(std::int64_t /*t*/, const Context& x,
                               Rng& /*rng*/) {
  const Eigen::LLT<Eigen::MatrixXd> llt(a_);
  const Eigen::VectorXd& v = x.vector();
  const double mean = llt.solve(z_).dot(v);
  const double bonus = std::sqrt(std::max(0.0, v.dot(llt.solve(v))));
  return {std::clamp(mean + alpha_ * bonus, 0.0, 1.0), Branch::kNone, 0};
}

void LinUcbPolicy::Update(std::int64_t /*t*/, const Context& x,
                          double /*bid*/, const AuctionFeedback& feedback) {
  if (!feedback.won()) return;
  const Eigen::VectorXd& v = x.vector();
  a_.selfadjointView<Eigen::Lower>().rankUpdate(v);
  a_ = a_.selfadjointView<Eigen::Lower>();
  z_ += v * feedback.observed_outcome();
  ++count_;
}

}  // namespace causalbid
