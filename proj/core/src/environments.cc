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


#include "causalbid/environments.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace causalbid {

namespace {

Eigen::VectorXd DrawDirection(Eigen::Index dim, double head, ContextLaw law,
                              Rng& rng) {
  Eigen::VectorXd v(dim);
  v(0) = head;
  for (Eigen::Index i = 1; i < dim; ++i) {
    v(i) = law == ContextLaw::kGaussian ? rng.Normal() : rng.Uniform();
  }
  return v / v.norm();
}

}  // namespace

double Environment::MarginalValue(const Context& x) const {
  return std::clamp(true_theta().dot(x.vector()), 0.0, 1.0);
}

double Sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

SyntheticSpec PeriodicSpec() { return SyntheticSpec{}; }

SyntheticEnvironment::SyntheticEnvironment(const SyntheticSpec& spec, Rng& rng)
    : spec_(spec), hob_(MakeHobModel(spec.hob)) {
  if (spec.dim < 1) throw std::invalid_argument("environment: dim must be >= 1");
  if (spec.baseline_low < 0.0 || spec.baseline_high > 1.0 ||
      spec.baseline_low > 1.0 || spec.baseline_high < 0.0) {
    throw std::invalid_argument("environment: baseline levels outside [0, 1]");
  }
  theta_ = DrawDirection(spec.dim, 0.6, spec.contexts, rng);
  beta_ = Eigen::VectorXd(spec.dim);
  for (Eigen::Index i = 0; i < spec.dim; ++i) beta_(i) = rng.Normal();
  beta_ /= beta_.norm();
}

double SyntheticEnvironment::BaselineValue(std::int64_t t, const Context& x) const {
  const double phase = std::sin(spec_.frequency * static_cast<double>(t));
  switch (spec_.baseline) {
    case Baseline::kPeriodic:
      return Sigmoid(2.0 + phase + std::cos(beta_.dot(x.vector())));
    case Baseline::kTwoLevel:
      return phase >= 0.0 ? spec_.baseline_high : spec_.baseline_low;
    case Baseline::kConstant:
      return spec_.baseline_low;
    case Baseline::kZero:
      return 0.0;
  }
  return 0.0;
}

Draw SyntheticEnvironment::Step(std::int64_t t, Rng& rng) {
  Draw d;
  d.x = Context(DrawDirection(spec_.dim, 1.0, spec_.contexts, rng));
  d.v0 = BaselineValue(t, d.x);
  const double mean = theta_.dot(d.x.vector());
  const double p = std::clamp(mean, 0.0, 1.0);
  d.v1 = d.v0 + (rng.Bernoulli(p) ? 1.0 : 0.0);
  ++clip_stats_.rounds;
  if (p != mean) ++clip_stats_.mean_clipped;
  if (spec_.clip_v1 && d.v1 > 1.0) {
    d.v1 = 1.0;
    ++clip_stats_.v1_clipped;
  }
  d.hob = hob_->Sample(rng);
  return d;
}

LowerBoundEnvironment::LowerBoundEnvironment(Eigen::Index dim,
                                             std::int64_t horizon, Rng& rng)
    : dim_(dim), horizon_(horizon) {
  if (dim < 1) throw std::invalid_argument("lower_bound: dim must be >= 1");
  if (horizon < std::max<std::int64_t>(dim * dim, 4)) {
    throw std::invalid_argument("lower_bound: need T >= max(d^2, 4)");
  }
  const std::int64_t pieces = std::max<Eigen::Index>(dim - 1, 1);
  sub_horizon_ = horizon / pieces;
  delta_ = 0.25 / std::sqrt(static_cast<double>(horizon) / pieces);
  hob_ = std::make_unique<AtomMixHob>(delta_);
  theta_ = Eigen::VectorXd::Zero(dim);
  if (dim == 1) {
    theta_(0) = 0.25 + (rng.Bernoulli(0.5) ? 2.0 * delta_ : 0.0);
  } else {
    theta_(0) = 0.5;
    for (Eigen::Index i = 1; i < dim; ++i) {
      theta_(i) = rng.Bernoulli(0.5) ? 4.0 * delta_ : 0.0;
    }
  }
}

Context LowerBoundEnvironment::ContextAt(std::int64_t t) const {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(dim_);
  if (dim_ == 1) {
    x(0) = 1.0;
    return Context(x);
  }
  const std::int64_t piece =
      std::min<std::int64_t>((t - 1) / sub_horizon_, dim_ - 2);
  x(0) = 0.5;
  x(piece + 1) = 0.5;
  return Context(x);
}

Draw LowerBoundEnvironment::Step(std::int64_t t, Rng& rng) {
  Draw d;
  d.x = ContextAt(t);
  d.v0 = 0.0;
  d.v1 = rng.Bernoulli(std::clamp(theta_.dot(d.x.vector()), 0.0, 1.0)) ? 1.0 : 0.0;
  d.hob = hob_->Sample(rng);
  ++clip_stats_.rounds;
  return d;
}

}  // namespace causalbid
