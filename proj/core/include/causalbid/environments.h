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


#ifndef CAUSALBID_ENVIRONMENTS_H_
#define CAUSALBID_ENVIRONMENTS_H_

#include <cstdint>
#include <memory>
#include <string>

#include "Eigen/Core"
#include "causalbid/auction.h"
#include "causalbid/hob_models.h"
#include "causalbid/rng.h"

namespace causalbid {

// One round of hidden market state.
struct Draw {
  Context x;
  double hob = 0.0;
  double v1 = 0.0;
  double v0 = 0.0;
};

// Counters for the guards applied while drawing outcomes.
struct ClipStats {
  std::int64_t rounds = 0;
  std::int64_t mean_clipped = 0;  // theta^T x outside [0, 1]
  std::int64_t v1_clipped = 0;    // v1 capped at 1 (only with clip_v1)
};

// A stochastic market whose contexts do not depend on the bidder's history.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual std::string name() const = 0;
  virtual Eigen::Index dim() const = 0;
  virtual const HobModel& hob() const = 0;
  virtual const Eigen::VectorXd& true_theta() const = 0;
  // Rounds are 1-based.
  virtual Draw Step(std::int64_t t, Rng& rng) = 0;
  // E[v1 - v0 | x].
  virtual double MarginalValue(const Context& x) const;
  const ClipStats& clip_stats() const { return clip_stats_; }

 protected:
  ClipStats clip_stats_;
};

enum class Baseline { kPeriodic, kTwoLevel, kConstant, kZero };
enum class ContextLaw { kGaussian, kPositive };

struct SyntheticSpec {
  Eigen::Index dim = 11;
  HobSpec hob;
  Baseline baseline = Baseline::kPeriodic;
  ContextLaw contexts = ContextLaw::kGaussian;
  double frequency = 3.14159265358979323846 / 125.0;
  // Constant baseline, or the low/high levels of the two-level baseline.
  double baseline_low = 0.2;
  double baseline_high = 0.6;
  // Cap v1 at 1. Off by default: capping changes E[v1 - v0 | x].
  bool clip_v1 = false;
};

// Linear treatment-effect market.
//   kGaussian contexts: x = normalize([1, g_1..g_{d-1}]), theta* =
//   normalize([0.6, g'_1..g'_{d-1}]) with standard normal g, g'.
//   kPositive contexts: the same with Unif[0, 1] tails, so theta*^T x in [0, 1].
// v1 = v0 + Bernoulli(clip(theta*^T x, 0, 1)); m ~ HOB.
// kPeriodic baseline: v0 = sigmoid(2 + sin(f t) + cos(beta^T x)) with beta a
// normalized Gaussian vector. kTwoLevel: high when sin(f t) >= 0, else low.
class SyntheticEnvironment final : public Environment {
 public:
  // Draws theta*, beta from `rng`.
  SyntheticEnvironment(const SyntheticSpec& spec, Rng& rng);

  std::string name() const override { return "synthetic"; }
  Eigen::Index dim() const override { return spec_.dim; }
  const HobModel& hob() const override { return *hob_; }
  const Eigen::VectorXd& true_theta() const override { return theta_; }
  Draw Step(std::int64_t t, Rng& rng) override;

  double BaselineValue(std::int64_t t, const Context& x) const;
  const Eigen::VectorXd& beta() const { return beta_; }

 private:
  SyntheticSpec spec_;
  std::unique_ptr<HobModel> hob_;
  Eigen::VectorXd theta_;
  Eigen::VectorXd beta_;
};

// The periodic market with d = 11 and a Beta(5, 7) HOB.
SyntheticSpec PeriodicSpec();

double Sigmoid(double z);

// Hard instance used for the minimax lower bound. v0 = 0, v1 ~
// Bernoulli(theta*^T x), HOB = atom-mix with delta = 1/(4 sqrt(T/(d-1))).
//   d = 1: x = 1 and theta* in {1/4, 1/4 + 2 delta}.
//   d >= 2: theta* = (1/2, u_2..u_d), u_i in {0, 4 delta}; the horizon splits
//   into d - 1 equal sub-horizons, sub-horizon n showing
//   x = (1/2, 0.., 1/2 at coordinate n + 1, ..0).
// Requires T >= max(d^2, 4).
class LowerBoundEnvironment final : public Environment {
 public:
  LowerBoundEnvironment(Eigen::Index dim, std::int64_t horizon, Rng& rng);

  std::string name() const override { return "lower_bound"; }
  Eigen::Index dim() const override { return dim_; }
  const HobModel& hob() const override { return *hob_; }
  const Eigen::VectorXd& true_theta() const override { return theta_; }
  Draw Step(std::int64_t t, Rng& rng) override;

  double delta() const { return delta_; }
  std::int64_t sub_horizon() const { return sub_horizon_; }
  Context ContextAt(std::int64_t t) const;

 private:
  Eigen::Index dim_;
  std::int64_t horizon_;
  std::int64_t sub_horizon_;
  double delta_;
  std::unique_ptr<AtomMixHob> hob_;
  Eigen::VectorXd theta_;
};

}  // namespace causalbid

#endif  // CAUSALBID_ENVIRONMENTS_H_
