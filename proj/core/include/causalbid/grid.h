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

#ifndef CAUSALBID_GRID_H_
#define CAUSALBID_GRID_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace causalbid {

// Uniform bid grid on [0, 1] with J = ceil(sqrt(T)) + 1 points, so the
// spacing 1/(J-1) never exceeds 1/sqrt(T) and both endpoints are bids.
// Indices are 0-based: point(0) == 0 and point(size() - 1) == 1.
class BidGrid {
 public:
  // Throws std::invalid_argument for T < 4.
  explicit BidGrid(std::int64_t horizon);

  std::int64_t horizon() const { return horizon_; }
  std::size_t size() const { return points_.size(); }
  double spacing() const { return spacing_; }
  double point(std::size_t j) const { return points_[j]; }
  std::span<const double> points() const { return points_; }
  std::size_t last() const { return points_.size() - 1; }

  // Index of the bucket (point(j-1), point(j)] that contains m, with bucket 0
  // being (-inf, 0]. Values above 1 map to the last bucket.
  std::size_t BucketOf(double m) const;

  // Grid index whose point is nearest to b (ties go to the lower index).
  std::size_t NearestIndex(double b) const;

  // Exact index of a grid point; throws std::invalid_argument when b is not
  // within 1e-9 of a grid point.
  std::size_t IndexOf(double b) const;

 private:
  std::int64_t horizon_;
  double spacing_;
  std::vector<double> points_;
};

BidGrid MakeBidGrid(std::int64_t horizon);

}  // namespace causalbid

#endif  // CAUSALBID_GRID_H_
