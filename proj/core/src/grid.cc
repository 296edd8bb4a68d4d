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

#include "causalbid/grid.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace causalbid {

namespace {

// ceil(sqrt(T)) computed in integers so perfect squares are exact.
std::int64_t CeilSqrt(std::int64_t t) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(t)));
  while (r * r < t) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= t) --r;
  return r;
}

}  // namespace

BidGrid::BidGrid(std::int64_t horizon) : horizon_(horizon) {
  if (horizon < 4) {
    throw std::invalid_argument("BidGrid: horizon must be >= 4, got " +
                                std::to_string(horizon));
  }
  const std::int64_t intervals = CeilSqrt(horizon);
  spacing_ = 1.0 / static_cast<double>(intervals);
  points_.resize(static_cast<std::size_t>(intervals) + 1);
  for (std::int64_t j = 0; j <= intervals; ++j) {
    points_[static_cast<std::size_t>(j)] =
        static_cast<double>(j) / static_cast<double>(intervals);
  }
}

std::size_t BidGrid::BucketOf(double m) const {
  if (m <= 0.0) return 0;
  if (m >= 1.0) return last();
  auto k = static_cast<std::size_t>(std::ceil(m / spacing_));
  k = std::min(k, last());
  // Correct for rounding so that point(k-1) < m <= point(k).
  while (k > 0 && points_[k - 1] >= m) --k;
  while (k < last() && points_[k] < m) ++k;
  return k;
}

std::size_t BidGrid::NearestIndex(double b) const {
  if (b <= 0.0) return 0;
  if (b >= 1.0) return last();
  const std::size_t hi = BucketOf(b);
  if (hi == 0) return 0;
  const double d_lo = b - points_[hi - 1];
  const double d_hi = points_[hi] - b;
  return d_lo <= d_hi ? hi - 1 : hi;
}

std::size_t BidGrid::IndexOf(double b) const {
  const std::size_t j = NearestIndex(b);
  if (std::abs(points_[j] - b) > 1e-9) {
    throw std::invalid_argument("BidGrid: " + std::to_string(b) +
                                " is not a grid point");
  }
  return j;
}

BidGrid MakeBidGrid(std::int64_t horizon) { return BidGrid(horizon); }

}  // namespace causalbid
