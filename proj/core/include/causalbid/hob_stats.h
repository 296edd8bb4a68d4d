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

#ifndef CAUSALBID_HOB_STATS_H_
#define CAUSALBID_HOB_STATS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "causalbid/auction.h"
#include "causalbid/grid.h"

namespace causalbid {

// Raised when a CDF quantity is requested at an index with no observations.
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Interval-splitting estimator of the highest-other-bid CDF on a bid grid.
//
// Bucket j is (point(j-1), point(j)], with bucket 0 = (-inf, 0]. A round that
// bid grid index k observes every bucket j <= k: a win reveals the HOB through
// the payment, and a loss at point(k) rules out all buckets up to k. Hence
// counts()[j] is the number of rounds with bid index >= j, and lower buckets
// always hold more data.
//
//   CdfEstimate(j)      = min(1, sum_{i<=j} c[i] / n[i])
//   IntegralEstimate(j) = spacing * sum_{i<=j} CdfEstimate(i)
//   CdfWidth(j, T)      = min(1, 8 sqrt(sum_{k<=j} (2 ln T / n[k])
//                                        * (p0[k] + 12 ln T / sqrt T))
//                               + 8 ln T / n[j])
class HobStats {
 public:
  explicit HobStats(BidGrid grid);

  const BidGrid& grid() const { return grid_; }
  std::span<const std::int64_t> counts() const { return counts_; }
  std::span<const std::int64_t> bucket_counts() const { return bucket_counts_; }
  std::span<const double> initial_probabilities() const { return p0_; }
  std::int64_t rounds() const { return rounds_; }

  // Absorbs one round that bid grid index `bid_index`. Throws
  // std::invalid_argument for an out-of-range index or a win whose payment
  // exceeds the placed bid.
  void Ingest(std::size_t bid_index, const AuctionFeedback& feedback);

  // Installs held-out initial bucket probabilities (see InitEstimate).
  void SetInitialProbabilities(std::vector<double> p0);

  // True when every index <= j has at least one observation.
  bool HasData(std::size_t j) const;

  double CdfEstimate(std::size_t j) const;
  double IntegralEstimate(std::size_t j) const;
  double CdfWidth(std::size_t j, std::int64_t horizon) const;

  // The same quantities for every grid index in one pass.
  std::vector<double> CdfEstimates() const;
  std::vector<double> IntegralEstimates() const;
  std::vector<double> CdfWidths(std::int64_t horizon) const;

 private:
  void RequireData(std::size_t j) const;

  BidGrid grid_;
  std::vector<std::int64_t> counts_;
  std::vector<std::int64_t> bucket_counts_;
  std::vector<double> p0_;
  std::int64_t rounds_ = 0;
};

// Bucket frequencies of fully observed HOB samples (initialization rounds bid
// 1 and always win). Throws std::invalid_argument on an empty sample list or a
// sample outside [0, 1].
std::vector<double> InitEstimate(std::span<const double> samples,
                                 const BidGrid& grid);

}  // namespace causalbid

#endif  // CAUSALBID_HOB_STATS_H_
