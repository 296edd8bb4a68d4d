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

#include "causalbid/ucb_engine.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace causalbid {

namespace {

// Absolute slack for comparisons of CDF values and objectives.
constexpr double kTol = 1e-12;

void CheckSizes(std::span<const double> cdf, std::span<const double> integral,
                const BidGrid& grid) {
  if (cdf.size() != grid.size() || integral.size() != grid.size()) {
    throw std::invalid_argument("UCB engine: per-index inputs must match grid");
  }
}

}  // namespace

double UcbConstant(const HobParams& params) {
  return params.omega * (1.0 - params.lambda) / 64.0;
}

double SelectionPerturbation(const HobParams& params) {
  return params.omega / 4.0;
}

double SelectionMargin(const HobParams& params) {
  return (1.0 - params.lambda) / 8.0;
}

std::vector<UcbEntry> ComputeTable(const UcbInputs& inputs,
                                   std::span<const std::size_t> subset,
                                   const HobParams& params,
                                   std::int64_t horizon, WidthForm form) {
  const double root_t = std::sqrt(static_cast<double>(horizon));
  const double prefactor =
      form == WidthForm::kLeveled ? 8.0 / (1.0 - params.lambda) : 1.0;
  const double floor = form == WidthForm::kLeveled ? 2.0 / root_t : 0.0;
  const double v = inputs.value_estimate;

  std::vector<UcbEntry> table;
  table.reserve(subset.size());
  for (std::size_t j : subset) {
    if (j >= inputs.cdf.size() || j >= inputs.integral.size() ||
        j >= inputs.cdf_width.size()) {
      throw std::out_of_range("ComputeTable: subset index out of range");
    }
    const double g = inputs.cdf[j];
    const double b = static_cast<double>(j) /
                     static_cast<double>(inputs.cdf.size() - 1);
    const double u = inputs.cdf_width[j];
    UcbEntry e;
    e.index = j;
    e.reward0 = g * (v - b) + inputs.integral[j];
    e.reward1 = e.reward0 - v;
    e.width0 = prefactor * (g * inputs.gamma_norm + 4.0 * u + floor);
    e.width1 = prefactor * ((1.0 - g) * inputs.gamma_norm + 4.0 * u + floor);
    table.push_back(e);
  }
  return table;
}

std::size_t PerturbedOptimizer(std::span<const double> cdf,
                               std::span<const double> integral, double value,
                               const BidGrid& grid) {
  CheckSizes(cdf, integral, grid);
  std::size_t best = 0;
  double best_obj = cdf[0] * (value - grid.point(0)) + integral[0];
  for (std::size_t j = 1; j < grid.size(); ++j) {
    const double obj = cdf[j] * (value - grid.point(j)) + integral[j];
    if (obj > best_obj + kTol) {
      best = j;
      best_obj = obj;
    } else if (obj >= best_obj - kTol) {
      // Tie: prefer the bid closest to the perturbed value.
      if (std::abs(grid.point(j) - value) <
          std::abs(grid.point(best) - value) - kTol) {
        best = j;
        best_obj = std::max(best_obj, obj);
      }
    }
  }
  return best;
}

UcbSelection SelectInterval(std::span<const double> cdf,
                            std::span<const double> integral, double v_hat,
                            double perturbation, double margin,
                            const BidGrid& grid) {
  CheckSizes(cdf, integral, grid);
  if (!(perturbation > 0.0)) {
    throw std::invalid_argument("SelectInterval: perturbation must be > 0");
  }
  UcbSelection sel;
  sel.plus = PerturbedOptimizer(cdf, integral, v_hat + perturbation, grid);
  sel.minus = PerturbedOptimizer(cdf, integral, v_hat - perturbation, grid);
  const double lo = cdf[sel.minus] - perturbation;
  const double hi = cdf[sel.plus] + perturbation;
  sel.left = std::min(sel.minus, sel.plus);
  sel.right = std::max(sel.minus, sel.plus);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (cdf[j] >= lo - kTol && cdf[j] <= hi + kTol) {
      sel.left = std::min(sel.left, j);
      sel.right = std::max(sel.right, j);
    }
  }
  sel.q = cdf[sel.left] >= margin ? 1 : 0;
  return sel;
}

UcbSelection SelectInterval(std::span<const double> cdf,
                            std::span<const double> integral, double v_hat,
                            const HobParams& params, const BidGrid& grid) {
  return SelectInterval(cdf, integral, v_hat, SelectionPerturbation(params),
                        SelectionMargin(params), grid);
}

}  // namespace causalbid
