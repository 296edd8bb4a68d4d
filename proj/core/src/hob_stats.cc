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

#include "causalbid/hob_stats.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace causalbid {

HobStats::HobStats(BidGrid grid)
    : grid_(std::move(grid)),
      counts_(grid_.size(), 0),
      bucket_counts_(grid_.size(), 0),
      p0_(grid_.size(), 0.0) {}

void HobStats::Ingest(std::size_t bid_index, const AuctionFeedback& feedback) {
  if (bid_index >= grid_.size()) {
    throw std::invalid_argument("HobStats::Ingest: bid index out of range");
  }
  if (feedback.won()) {
    const double m = *feedback.payment();
    if (m > grid_.point(bid_index) + 1e-12) {
      throw std::invalid_argument(
          "HobStats::Ingest: payment exceeds the placed bid");
    }
    const std::size_t bucket = std::min(grid_.BucketOf(m), bid_index);
    ++bucket_counts_[bucket];
  }
  for (std::size_t j = 0; j <= bid_index; ++j) ++counts_[j];
  ++rounds_;
}

void HobStats::SetInitialProbabilities(std::vector<double> p0) {
  if (p0.size() != grid_.size()) {
    throw std::invalid_argument(
        "HobStats: initial probabilities must match the grid size");
  }
  double total = 0.0;
  for (double p : p0) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("HobStats: initial probability outside [0,1]");
    }
    total += p;
  }
  if (total > 1.0 + 1e-12) {
    throw std::invalid_argument("HobStats: initial probabilities sum above 1");
  }
  p0_ = std::move(p0);
}

bool HobStats::HasData(std::size_t j) const {
  // counts_ is non-increasing, so checking index j covers every i <= j.
  return j < counts_.size() && counts_[j] > 0;
}

void HobStats::RequireData(std::size_t j) const {
  if (j >= counts_.size()) {
    throw std::out_of_range("HobStats: grid index out of range");
  }
  if (!HasData(j)) {
    throw InsufficientDataError("HobStats: no observations at grid index " +
                                std::to_string(j));
  }
}

double HobStats::CdfEstimate(std::size_t j) const {
  RequireData(j);
  double sum = 0.0;
  for (std::size_t i = 0; i <= j; ++i) {
    sum += static_cast<double>(bucket_counts_[i]) /
           static_cast<double>(counts_[i]);
  }
  return std::min(1.0, sum);
}

double HobStats::IntegralEstimate(std::size_t j) const {
  RequireData(j);
  double raw = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i <= j; ++i) {
    raw += static_cast<double>(bucket_counts_[i]) /
           static_cast<double>(counts_[i]);
    total += std::min(1.0, raw);
  }
  return grid_.spacing() * total;
}

double HobStats::CdfWidth(std::size_t j, std::int64_t horizon) const {
  RequireData(j);
  const double log_t = std::log(static_cast<double>(horizon));
  const double floor_term = 12.0 * log_t / std::sqrt(static_cast<double>(horizon));
  double inner = 0.0;
  for (std::size_t k = 0; k <= j; ++k) {
    inner += 2.0 * log_t / static_cast<double>(counts_[k]) * (p0_[k] + floor_term);
  }
  const double width =
      8.0 * std::sqrt(inner) + 8.0 * log_t / static_cast<double>(counts_[j]);
  return std::min(1.0, width);
}

std::vector<double> HobStats::CdfEstimates() const {
  RequireData(grid_.last());
  std::vector<double> out(grid_.size());
  double raw = 0.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    raw += static_cast<double>(bucket_counts_[i]) /
           static_cast<double>(counts_[i]);
    out[i] = std::min(1.0, raw);
  }
  return out;
}

std::vector<double> HobStats::IntegralEstimates() const {
  std::vector<double> out = CdfEstimates();
  double total = 0.0;
  for (double& v : out) {
    total += v;
    v = grid_.spacing() * total;
  }
  return out;
}

std::vector<double> HobStats::CdfWidths(std::int64_t horizon) const {
  RequireData(grid_.last());
  const double log_t = std::log(static_cast<double>(horizon));
  const double floor_term = 12.0 * log_t / std::sqrt(static_cast<double>(horizon));
  std::vector<double> out(grid_.size());
  double inner = 0.0;
  for (std::size_t j = 0; j < out.size(); ++j) {
    const auto n = static_cast<double>(counts_[j]);
    inner += 2.0 * log_t / n * (p0_[j] + floor_term);
    out[j] = std::min(1.0, 8.0 * std::sqrt(inner) + 8.0 * log_t / n);
  }
  return out;
}

std::vector<double> InitEstimate(std::span<const double> samples,
                                 const BidGrid& grid) {
  if (samples.empty()) {
    throw std::invalid_argument("InitEstimate: empty sample list");
  }
  std::vector<double> p0(grid.size(), 0.0);
  for (double m : samples) {
    if (!(m >= 0.0 && m <= 1.0)) {
      throw std::invalid_argument("InitEstimate: sample outside [0, 1]");
    }
    p0[grid.BucketOf(m)] += 1.0;
  }
  const auto n = static_cast<double>(samples.size());
  for (double& p : p0) p /= n;
  return p0;
}

}  // namespace causalbid
