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


#include "causalbid/master_policy.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "causalbid/ucb_engine.h"

namespace causalbid {

namespace {

// Index of the largest value, ties to the lowest index.
template <typename F>
std::size_t ArgMax(const std::vector<UcbEntry>& table, F value) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (value(table[i]) > value(table[best])) best = i;
  }
  return best;
}

}  // namespace

int LevelCount(std::int64_t horizon) {
  int levels = 0;
  // Smallest L with 4^L >= T, i.e. 2^L >= sqrt(T).
  while (std::pow(4.0, levels) < static_cast<double>(horizon)) ++levels;
  return std::max(levels, 1);
}

std::int64_t InitBlockLength(std::int64_t horizon) {
  const auto t = static_cast<double>(horizon);
  return static_cast<std::int64_t>(std::ceil(std::sqrt(t) * std::log(t)));
}

MasterPolicy::MasterPolicy(std::int64_t horizon, Eigen::Index dim,
                           HobParams params, ConfidenceOptions options)
    : horizon_(horizon),
      grid_(horizon),
      params_(params),
      options_(options),
      levels_(LevelCount(horizon)),
      block_length_(InitBlockLength(horizon)) {
  params_.Validate();
  if (dim < 1) throw std::invalid_argument("MasterPolicy: dim must be >= 1");
  if (!(options_.scale > 0.0)) {
    throw std::invalid_argument("MasterPolicy: confidence scale must be > 0");
  }
  books_.reserve(levels_);
  for (int l = 0; l < levels_; ++l) books_.emplace_back(grid_, dim);
  absorbed_.assign(levels_, 0);
}

MasterDecision MasterPolicy::Decide(std::int64_t t, const Context& x,
                                    Rng& rng) {
  if (pending_) throw std::logic_error("MasterPolicy: update() not called");
  MasterDecision d;
  d.round = t;
  if (t <= init_rounds()) {
    d.branch = Branch::kInit;
    d.bid_index = grid_.last();
    d.bid = 1.0;
    pending_ = d;
    return d;
  }

  const double threshold = options_.Threshold(params_);
  const double floor = 1.0 / std::sqrt(static_cast<double>(horizon_));
  std::vector<std::size_t> subset(grid_.size());
  for (std::size_t j = 0; j < subset.size(); ++j) subset[j] = j;

  for (int level = 1; level <= levels_; ++level) {
    const EstimationBook& book = books_[level - 1];
    d.levels_read.push_back(level);
    d.active_sets.push_back(subset);
    const BookSnapshot snap = book.Snapshot(x, horizon_);
    std::vector<UcbEntry> table = ComputeTable(
        snap.inputs(), subset, params_, horizon_, WidthForm::kLeveled);
    if (options_.scale != 1.0) {
      for (UcbEntry& e : table) {
        e.width0 *= options_.scale;
        e.width1 *= options_.scale;
      }
    }
    const UcbSelection sel = SelectInterval(snap.cdf, snap.integral,
                                            snap.value_estimate, params_, grid_);
    const int q = sel.q;
    auto finish = [&](Branch branch, std::size_t index) {
      d.branch = branch;
      d.level = level;
      d.bid_index = index;
      d.bid = grid_.point(index);
      d.g_hat = snap.cdf[index];
      d.u = book.hob().CdfWidth(index, horizon_);
      pending_ = d;
      return d;
    };

    double max_width = 0.0;
    for (const UcbEntry& e : table) {
      max_width = std::max({max_width, e.width0, e.width1});
    }
    if (max_width > threshold) {
      return finish(Branch::kExplore, rng.Bernoulli(0.5) ? grid_.last() : 0);
    }

    const double scale = std::ldexp(1.0, -level);
    const std::size_t widest =
        ArgMax(table, [q](const UcbEntry& e) { return e.width(q); });
    if (table[widest].width(q) > scale) {
      return finish(Branch::kAssign, table[widest].index);
    }

    const std::size_t best =
        ArgMax(table, [q](const UcbEntry& e) { return e.reward(q); });
    if (level == levels_ || table[widest].width(q) <= floor) {
      return finish(Branch::kExploit, table[best].index);
    }

    const double cut = table[best].reward(q) - 2.0 * scale;
    std::vector<std::size_t> next;
    for (const UcbEntry& e : table) {
      if (e.reward(q) >= cut && sel.Contains(e.index)) next.push_back(e.index);
    }
    if (next.empty()) next.push_back(table[best].index);
    subset = std::move(next);
  }
  throw std::logic_error("MasterPolicy: level loop fell through");
}

BidChoice MasterPolicy::Choose(std::int64_t t, const Context& x, Rng& rng) {
  const MasterDecision d = Decide(t, x, rng);
  return {d.bid, d.branch, d.level};
}

void MasterPolicy::Apply(const MasterDecision& decision, const Context& x,
                         const AuctionFeedback& feedback) {
  if (!pending_ || pending_->round != decision.round ||
      pending_->bid_index != decision.bid_index ||
      pending_->branch != decision.branch ||
      pending_->level != decision.level) {
    throw std::logic_error("MasterPolicy: decision does not match choose()");
  }
  const std::int64_t t = decision.round;
  switch (decision.branch) {
    case Branch::kInit: {
      if (!feedback.won()) {
        throw std::logic_error("MasterPolicy: initialization bid 1 lost");
      }
      const std::int64_t block = (t - 1) / block_length_;
      if (block == 0) {
        init_samples_.push_back(*feedback.payment());
        if (t == block_length_) {
          const std::vector<double> p0 = InitEstimate(init_samples_, grid_);
          for (EstimationBook& b : books_) b.mutable_hob().SetInitialProbabilities(p0);
        }
      } else {
        books_[block - 1].mutable_hob().Ingest(grid_.last(), feedback);
      }
      break;
    }
    case Branch::kExplore:
      explore_log_.emplace_back(t, decision.level);
      [[fallthrough]];
    case Branch::kAssign:
      books_[decision.level - 1].Absorb(
          x, decision.bid_index, feedback, decision.branch == Branch::kExplore,
          decision.g_hat, decision.u, horizon_);
      ++absorbed_[decision.level - 1];
      break;
    case Branch::kExploit:
      ++exploit_rounds_;
      break;
    case Branch::kNone:
      throw std::logic_error("MasterPolicy: decision without a branch");
  }
  last_ = std::move(pending_);
  pending_.reset();
}

void MasterPolicy::Update(std::int64_t t, const Context& x, double bid,
                          const AuctionFeedback& feedback) {
  if (!pending_ || pending_->round != t || pending_->bid != bid) {
    throw std::logic_error("MasterPolicy: update does not match choose()");
  }
  const MasterDecision d = *pending_;
  Apply(d, x, feedback);
}

}  // namespace causalbid
