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

#ifndef CAUSALBID_HOB_MODELS_H_
#define CAUSALBID_HOB_MODELS_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "causalbid/auction.h"
#include "causalbid/rng.h"

namespace causalbid {

// Distribution of the highest other bid on [0, 1].
class HobModel {
 public:
  virtual ~HobModel() = default;

  virtual std::string name() const = 0;
  virtual double Sample(Rng& rng) const = 0;
  // G(b) = P(m <= b); right-continuous, G(b) = 0 for b < 0, G(1) = 1.
  virtual double Cdf(double b) const = 0;
  // Integral of G over [0, b] for b in [0, 1].
  virtual double CdfIntegral(double b) const = 0;
  // Locations of point masses in [0, 1].
  virtual std::vector<double> Atoms() const { return {}; }
  // Declared locality parameters.
  virtual HobParams local_params() const = 0;
};

// Unif[0, 1]; lambda = omega.
class UniformHob final : public HobModel {
 public:
  explicit UniformHob(double omega = 0.25);

  std::string name() const override { return "uniform"; }
  double Sample(Rng& rng) const override;
  double Cdf(double b) const override;
  double CdfIntegral(double b) const override;
  HobParams local_params() const override { return params_; }

 private:
  HobParams params_;
};

// Beta(a, b) with a, b >= 1 (bounded density); lambda = omega * max density.
class BetaHob final : public HobModel {
 public:
  BetaHob(double a, double b, double omega = 0.15);

  std::string name() const override;
  double Sample(Rng& rng) const override;
  double Cdf(double x) const override;
  double CdfIntegral(double x) const override;
  HobParams local_params() const override { return params_; }
  double max_density() const { return max_density_; }

 private:
  double a_;
  double b_;
  double max_density_;
  HobParams params_;
};

// (1/2) Unif[0, 1] + (1/2) point mass at 1/4 + delta, delta in (0, 3/4).
// lambda = 1/2 + omega/2.
class AtomMixHob final : public HobModel {
 public:
  explicit AtomMixHob(double delta, double omega = 0.1);

  std::string name() const override { return "atom_mix"; }
  double Sample(Rng& rng) const override;
  double Cdf(double b) const override;
  double CdfIntegral(double b) const override;
  std::vector<double> Atoms() const override { return {atom_}; }
  HobParams local_params() const override { return params_; }
  double atom() const { return atom_; }

 private:
  double atom_;
  HobParams params_;
};

// Mixture of a piecewise-constant density on equal cells and point masses.
// Used to draw random locally-bounded CDFs for property checks.
class PiecewiseHob final : public HobModel {
 public:
  // `cell_mass[k]` is the mass spread uniformly over cell k of equal width;
  // atoms carry `atom_mass[i]` at `atom_at[i]`. Total mass must be 1.
  PiecewiseHob(std::vector<double> cell_mass, std::vector<double> atom_at,
               std::vector<double> atom_mass, HobParams declared);

  std::string name() const override { return "piecewise"; }
  double Sample(Rng& rng) const override;
  double Cdf(double b) const override;
  double CdfIntegral(double b) const override;
  std::vector<double> Atoms() const override { return atom_at_; }
  HobParams local_params() const override { return params_; }

 private:
  std::vector<double> cell_mass_;
  std::vector<double> atom_at_;
  std::vector<double> atom_mass_;
  HobParams params_;
};

// Random (omega, lambda)-locally-bounded distribution: random cell masses and
// up to two atoms, mixed with Unif[0, 1] until every window of width omega
// holds at most lambda. Requires omega < lambda < 1.
std::unique_ptr<PiecewiseHob> RandomLocallyBoundedHob(Rng& rng, double omega,
                                                      double lambda);

// sup over b of G(b + omega) - G(b), scanned on a grid of the given step.
// This is the smallest lambda for which G is (omega, lambda)-locally bounded,
// up to the scan resolution.
double ScanLocalBound(const HobModel& hob, double omega, double step = 1e-4);

// Builds a HOB model from a family name: "uniform", "beta" (shape_a,
// shape_b), "atom_mix" (delta). Throws std::invalid_argument otherwise.
struct HobSpec {
  std::string family = "beta";
  double shape_a = 5.0;
  double shape_b = 7.0;
  double delta = 0.05;
  double omega = 0.0;  // 0 selects the family default
};
std::unique_ptr<HobModel> MakeHobModel(const HobSpec& spec);

}  // namespace causalbid

#endif  // CAUSALBID_HOB_MODELS_H_
