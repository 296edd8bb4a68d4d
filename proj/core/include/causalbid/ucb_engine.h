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

#ifndef CAUSALBID_UCB_ENGINE_H_
#define CAUSALBID_UCB_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "causalbid/auction.h"
#include "causalbid/grid.h"

namespace causalbid {

// Exploration threshold C(lambda, omega) = omega (1 - lambda) / 64.
double UcbConstant(const HobParams& params);

// Perturbation c = omega / 4 and margin eps = (1 - lambda) / 8 used by the
// formulation selection.
double SelectionPerturbation(const HobParams& params);
double SelectionMargin(const HobParams& params);

// Which confidence-width formula to use.
//   kLeveled:   w0 = 8/(1-lambda) (G gamma_norm + 4u + 2/sqrt(T)), w1 alike
//               with (1 - G) in place of G.
//   kPractical: w0 = G gamma_norm + 4u, w1 = (1 - G) gamma_norm + 4u.
enum class WidthForm { kLeveled, kPractical };

// Per-round snapshot of the estimators, indexed by grid index.
struct UcbInputs {
  double value_estimate = 0.0;  // theta_hat^T x
  double gamma_norm = 0.0;      // gamma ||x||_{A^-1}
  std::span<const double> cdf;       // G_hat(b^j)
  std::span<const double> integral;  // spacing * sum_{i<=j} G_hat(b^i)
  std::span<const double> cdf_width; // u(b^j)
};

// Two reward formulations for one bid: the baseline-centered r0 and the
// winner-centered r1 = r0 - theta_hat^T x, with their widths.
struct UcbEntry {
  std::size_t index = 0;
  double reward0 = 0.0;
  double reward1 = 0.0;
  double width0 = 0.0;
  double width1 = 0.0;

  double reward(int q) const { return q == 0 ? reward0 : reward1; }
  double width(int q) const { return q == 0 ? width0 : width1; }
};

std::vector<UcbEntry> ComputeTable(const UcbInputs& inputs,
                                   std::span<const std::size_t> subset,
                                   const HobParams& params,
                                   std::int64_t horizon, WidthForm form);

// argmax_j cdf[j] (value - b^j) + integral[j]; ties go to the bid closest to
// `value`, then to the lower bid.
std::size_t PerturbedOptimizer(std::span<const double> cdf,
                               std::span<const double> integral, double value,
                               const BidGrid& grid);

// Interval of grid indices [left, right] and formulation index q.
struct UcbSelection {
  std::size_t left = 0;
  std::size_t right = 0;
  int q = 0;
  std::size_t minus = 0;  // b_-
  std::size_t plus = 0;   // b_+

  bool Contains(std::size_t j) const { return j >= left && j <= right; }
};

// S = {b : G(b_-) - c <= G(b) <= G(b_+) + c} u {b_-, b_+},
// left = min S, right = max S, q = 1[G(left) >= margin].
UcbSelection SelectInterval(std::span<const double> cdf,
                            std::span<const double> integral, double v_hat,
                            double perturbation, double margin,
                            const BidGrid& grid);
UcbSelection SelectInterval(std::span<const double> cdf,
                            std::span<const double> integral, double v_hat,
                            const HobParams& params, const BidGrid& grid);

}  // namespace causalbid

#endif  // CAUSALBID_UCB_ENGINE_H_
