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

#include "causalbid/hob_models.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "causalbid/beta.h"

namespace causalbid {

namespace {

HobParams MakeParams(double omega, double lambda) {
  HobParams p{omega, lambda};
  p.Validate();
  return p;
}

// Maximum of the Beta(a, b) density: coarse scan then ternary refinement
// (the density is unimodal for a, b >= 1).
double MaxBetaDensity(double a, double b) {
  double best_x = 0.0;
  double best = BetaPdf(a, b, 0.0);
  for (int i = 1; i <= 1000; ++i) {
    const double x = i / 1000.0;
    const double f = BetaPdf(a, b, x);
    if (f > best) {
      best = f;
      best_x = x;
    }
  }
  double lo = std::max(0.0, best_x - 1e-3);
  double hi = std::min(1.0, best_x + 1e-3);
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (BetaPdf(a, b, m1) < BetaPdf(a, b, m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  return std::max(best, BetaPdf(a, b, 0.5 * (lo + hi)));
}

}  // namespace

UniformHob::UniformHob(double omega) : params_(MakeParams(omega, omega)) {}

double UniformHob::Sample(Rng& rng) const { return rng.Uniform(); }

double UniformHob::Cdf(double b) const { return std::clamp(b, 0.0, 1.0); }

double UniformHob::CdfIntegral(double b) const {
  const double x = std::clamp(b, 0.0, 1.0);
  return 0.5 * x * x;
}

BetaHob::BetaHob(double a, double b, double omega) : a_(a), b_(b) {
  if (!(a >= 1.0 && b >= 1.0)) {
    throw std::invalid_argument("BetaHob: shapes must be >= 1");
  }
  max_density_ = MaxBetaDensity(a, b);
  params_ = MakeParams(omega, omega * max_density_);
}

std::string BetaHob::name() const {
  std::ostringstream os;
  os << "beta(" << a_ << "," << b_ << ")";
  return os.str();
}

double BetaHob::Sample(Rng& rng) const { return rng.Beta(a_, b_); }

double BetaHob::Cdf(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return BetaCdf(a_, b_, x);
}

double BetaHob::CdfIntegral(double x) const {
  // d/dx [x I_x(a,b) - a/(a+b) I_x(a+1,b)] = I_x(a,b).
  const double c = std::clamp(x, 0.0, 1.0);
  if (c == 0.0) return 0.0;
  return c * BetaCdf(a_, b_, c) - a_ / (a_ + b_) * BetaCdf(a_ + 1.0, b_, c);
}

AtomMixHob::AtomMixHob(double delta, double omega)
    : atom_(0.25 + delta), params_(MakeParams(omega, 0.5 + 0.5 * omega)) {
  if (!(delta > 0.0 && delta < 0.75)) {
    throw std::invalid_argument("AtomMixHob: delta must lie in (0, 3/4)");
  }
}

double AtomMixHob::Sample(Rng& rng) const {
  if (rng.Bernoulli(0.5)) return atom_;
  return rng.Uniform();
}

double AtomMixHob::Cdf(double b) const {
  if (b < 0.0) return 0.0;
  if (b >= 1.0) return 1.0;
  return 0.5 * b + (b >= atom_ ? 0.5 : 0.0);
}

double AtomMixHob::CdfIntegral(double b) const {
  const double x = std::clamp(b, 0.0, 1.0);
  return 0.25 * x * x + 0.5 * std::max(0.0, x - atom_);
}

PiecewiseHob::PiecewiseHob(std::vector<double> cell_mass,
                           std::vector<double> atom_at,
                           std::vector<double> atom_mass, HobParams declared)
    : cell_mass_(std::move(cell_mass)),
      atom_at_(std::move(atom_at)),
      atom_mass_(std::move(atom_mass)),
      params_(declared) {
  params_.Validate();
  if (cell_mass_.empty() || atom_at_.size() != atom_mass_.size()) {
    throw std::invalid_argument("PiecewiseHob: malformed masses");
  }
  double total = 0.0;
  for (double m : cell_mass_) {
    if (m < 0.0) throw std::invalid_argument("PiecewiseHob: negative mass");
    total += m;
  }
  for (std::size_t i = 0; i < atom_at_.size(); ++i) {
    if (atom_mass_[i] < 0.0 || atom_at_[i] < 0.0 || atom_at_[i] > 1.0) {
      throw std::invalid_argument("PiecewiseHob: invalid atom");
    }
    total += atom_mass_[i];
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("PiecewiseHob: masses must sum to 1");
  }
}

double PiecewiseHob::Sample(Rng& rng) const {
  double u = rng.Uniform();
  for (std::size_t i = 0; i < atom_at_.size(); ++i) {
    if (u < atom_mass_[i]) return atom_at_[i];
    u -= atom_mass_[i];
  }
  const double h = 1.0 / static_cast<double>(cell_mass_.size());
  for (std::size_t k = 0; k < cell_mass_.size(); ++k) {
    if (u < cell_mass_[k]) return (static_cast<double>(k) + u / cell_mass_[k]) * h;
    u -= cell_mass_[k];
  }
  return 1.0;
}

double PiecewiseHob::Cdf(double b) const {
  if (b < 0.0) return 0.0;
  if (b >= 1.0) return 1.0;
  const auto cells = static_cast<double>(cell_mass_.size());
  const double pos = b * cells;
  const auto full = static_cast<std::size_t>(pos);
  double g = 0.0;
  for (std::size_t k = 0; k < full && k < cell_mass_.size(); ++k) g += cell_mass_[k];
  if (full < cell_mass_.size()) g += cell_mass_[full] * (pos - static_cast<double>(full));
  for (std::size_t i = 0; i < atom_at_.size(); ++i) {
    if (atom_at_[i] <= b) g += atom_mass_[i];
  }
  return std::min(1.0, g);
}

double PiecewiseHob::CdfIntegral(double b) const {
  const double x = std::clamp(b, 0.0, 1.0);
  const auto cells = static_cast<double>(cell_mass_.size());
  const double h = 1.0 / cells;
  const double pos = x * cells;
  const auto full = static_cast<std::size_t>(pos);
  double cum = 0.0;
  double area = 0.0;
  for (std::size_t k = 0; k < full && k < cell_mass_.size(); ++k) {
    area += h * (cum + 0.5 * cell_mass_[k]);
    cum += cell_mass_[k];
  }
  if (full < cell_mass_.size()) {
    const double s = x - static_cast<double>(full) * h;
    area += s * cum + cell_mass_[full] * s * s / (2.0 * h);
  }
  for (std::size_t i = 0; i < atom_at_.size(); ++i) {
    area += atom_mass_[i] * std::max(0.0, x - atom_at_[i]);
  }
  return area;
}

std::unique_ptr<PiecewiseHob> RandomLocallyBoundedHob(Rng& rng, double omega,
                                                      double lambda) {
  if (!(omega > 0.0 && omega < lambda && lambda < 1.0)) {
    throw std::invalid_argument(
        "RandomLocallyBoundedHob: need 0 < omega < lambda < 1");
  }
  constexpr std::size_t kCells = 40;
  std::vector<double> cells(kCells);
  for (double& c : cells) {
    const double u = rng.Uniform();
    c = u * u * u;
  }
  std::vector<double> atom_at;
  std::vector<double> atom_mass;
  const int atoms = static_cast<int>(rng.Uniform() * 3.0);
  double atom_total = 0.0;
  for (int i = 0; i < atoms; ++i) {
    atom_at.push_back(rng.Uniform());
    atom_mass.push_back(0.05 + 0.25 * rng.Uniform());
    atom_total += atom_mass.back();
  }
  const double cell_total = std::accumulate(cells.begin(), cells.end(), 0.0);
  const double scale = 1.0 / (cell_total + atom_total);
  for (double& c : cells) c *= scale;
  for (double& m : atom_mass) m *= scale;

  // Window mass of a mixture is at most the mixed window masses; Unif[0,1]
  // puts exactly omega in every full window. Leave slack for scan error.
  const double target = lambda - 0.02 * (lambda - omega);
  HobParams loose{std::min(0.999, omega), std::min(0.999, std::max(lambda, 0.5))};
  const PiecewiseHob raw(cells, atom_at, atom_mass, loose);
  const double peak = ScanLocalBound(raw, omega);
  if (peak > target) {
    const double alpha = (target - omega) / (peak - omega);
    const double h = 1.0 / static_cast<double>(kCells);
    for (double& c : cells) c = alpha * c + (1.0 - alpha) * h;
    for (double& m : atom_mass) m *= alpha;
  }
  return std::make_unique<PiecewiseHob>(std::move(cells), std::move(atom_at),
                                        std::move(atom_mass),
                                        HobParams{omega, lambda});
}

double ScanLocalBound(const HobModel& hob, double omega, double step) {
  double peak = 0.0;
  auto window = [&](double b) { return hob.Cdf(b + omega) - hob.Cdf(b); };
  const auto n = static_cast<long>(std::ceil((1.0 + omega) / step));
  for (long i = 0; i <= n; ++i) {
    peak = std::max(peak, window(-omega + static_cast<double>(i) * step));
  }
  // Windows that start or end exactly at an atom.
  for (double a : hob.Atoms()) {
    peak = std::max(peak, window(a - omega));
    peak = std::max(peak, window(std::nextafter(a, -1.0)));
  }
  return peak;
}

std::unique_ptr<HobModel> MakeHobModel(const HobSpec& spec) {
  if (spec.family == "uniform") {
    return std::make_unique<UniformHob>(spec.omega > 0.0 ? spec.omega : 0.25);
  }
  if (spec.family == "beta") {
    return std::make_unique<BetaHob>(spec.shape_a, spec.shape_b,
                                     spec.omega > 0.0 ? spec.omega : 0.15);
  }
  if (spec.family == "atom_mix") {
    return std::make_unique<AtomMixHob>(spec.delta,
                                        spec.omega > 0.0 ? spec.omega : 0.1);
  }
  throw std::invalid_argument("unknown HOB family: " + spec.family);
}

}  // namespace causalbid
