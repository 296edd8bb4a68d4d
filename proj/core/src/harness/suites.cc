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


#include "causalbid/harness/suites.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "Eigen/Dense"
#include "causalbid/auction.h"
#include "causalbid/environments.h"
#include "causalbid/grid.h"
#include "causalbid/harness/aggregate.h"
#include "causalbid/harness/runner.h"
#include "causalbid/hob_models.h"
#include "causalbid/hob_stats.h"
#include "causalbid/master_policy.h"
#include "causalbid/rewards.h"
#include "causalbid/rng.h"
#include "causalbid/ucb_engine.h"
#include "causalbid/value_estimator.h"

namespace causalbid {

namespace {

// Tuned widths for the diagnostic runs. Not used by any gating check.
constexpr double kTunedScale = 0.001;
constexpr double kTunedThreshold = 0.5;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::vector<HobSpec> CoverageFamilies() {
  HobSpec uniform;
  uniform.family = "uniform";
  HobSpec beta;
  beta.family = "beta";
  HobSpec atom;
  atom.family = "atom_mix";
  atom.delta = 0.05;
  return {uniform, beta, atom};
}

// Monotone estimate within `radius` of G on every grid point.
std::vector<double> NoisyCdf(const HobModel& hob, const BidGrid& grid,
                             double radius, Rng& rng) {
  std::vector<double> out(grid.size());
  double running = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double noisy = hob.Cdf(grid.point(j)) + radius * (2.0 * rng.Uniform() - 1.0);
    running = std::max(running, noisy);
    out[j] = std::clamp(running, 0.0, 1.0);
  }
  return out;
}

std::vector<double> RiemannIntegral(const std::vector<double>& cdf,
                                    const BidGrid& grid) {
  std::vector<double> out(cdf.size());
  double sum = 0.0;
  for (std::size_t j = 0; j < cdf.size(); ++j) {
    sum += cdf[j];
    out[j] = grid.spacing() * sum;
  }
  return out;
}

// Decile increments of the mean cumulative regret.
struct Shape {
  double final_mean = 0.0;
  double decile2 = 0.0;
  double last_decile = 0.0;
};

Shape RegretShape(const std::vector<RunResult>& runs, std::int64_t horizon) {
  const std::vector<std::int64_t> at = {
      std::max<std::int64_t>(1, horizon / 10),
      std::max<std::int64_t>(1, horizon / 5),
      std::max<std::int64_t>(1, horizon * 9 / 10), horizon};
  const std::vector<Checkpoint> c = CumulativeRegretAt(runs, at);
  return {c[3].mean, c[1].mean - c[0].mean, c[3].mean - c[2].mean};
}

ExperimentConfig PeriodicConfig(std::uint64_t seed, std::int64_t horizon,
                                 int runs) {
  ExperimentConfig c;
  c.environment.kind = "periodic";
  c.horizon = horizon;
  c.runs = runs;
  c.seed = seed;
  c.write_csv = false;
  return c;
}

ExperimentConfig ScalingConfig(std::uint64_t seed, std::int64_t horizon,
                               int runs) {
  ExperimentConfig c;
  c.environment.kind = "custom";
  c.environment.dim = 3;
  c.environment.hob.family = "uniform";
  c.environment.baseline = "two_level";
  c.environment.contexts = "positive";
  c.horizon = horizon;
  c.runs = runs;
  c.seed = seed;
  c.write_csv = false;
  return c;
}

void AddFigure2Checks(SuiteReport& report, const std::string& prefix,
                      const std::vector<RunResult>& linucb,
                      const std::vector<RunResult>& tes, std::int64_t horizon,
                      bool diagnostic) {
  const Shape l = RegretShape(linucb, horizon);
  const Shape s = RegretShape(tes, horizon);
  Check a{prefix + "regret_ratio", l.final_mean >= 3.0 * s.final_mean,
          "LinUCB final mean regret >= 3x LinUCB.TE.S",
          {{"linucb_final", l.final_mean},
           {"tes_final", s.final_mean},
           {"ratio", l.final_mean / std::max(s.final_mean, 1e-300)}},
          diagnostic};
  Check b{prefix + "linucb_linear", l.last_decile >= 0.75 * l.decile2,
          "LinUCB last-decile increment >= 0.75 x decile-2 increment",
          {{"decile2", l.decile2},
           {"last_decile", l.last_decile},
           {"ratio", l.last_decile / std::max(l.decile2, 1e-300)}},
          diagnostic};
  Check c{prefix + "tes_concave", s.last_decile <= 0.25 * s.decile2,
          "LinUCB.TE.S last-decile increment <= 0.25 x decile-2 increment",
          {{"decile2", s.decile2},
           {"last_decile", s.last_decile},
           {"ratio", s.last_decile / std::max(s.decile2, 1e-300)}},
          diagnostic};
  int wins = 0;
  for (std::size_t r = 0; r < linucb.size(); ++r) {
    if (linucb[r].final_regret() > tes[r].final_regret()) ++wins;
  }
  const int needed = static_cast<int>(std::ceil(0.9 * static_cast<double>(linucb.size())));
  Check d{prefix + "paired_runs", wins >= needed,
          "LinUCB final regret > LinUCB.TE.S in >= 90% of seeds",
          {{"runs_linucb_worse", static_cast<double>(wins)},
           {"runs", static_cast<double>(linucb.size())}},
          diagnostic};
  report.checks.push_back(a);
  report.checks.push_back(b);
  report.checks.push_back(c);
  report.checks.push_back(d);
}

}  // namespace

bool SuiteReport::pass() const {
  for (const Check& c : checks) {
    if (!c.diagnostic && !c.pass) return false;
  }
  return true;
}

const Check& SuiteReport::Find(const std::string& name) const {
  for (const Check& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("suite " + suite + " has no check " + name);
}

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> kNames = {
      "cdf_coverage", "ipw_bias",       "wls_coverage",
      "ucb_selection", "elimination",   "separation",
      "figure2",      "ablation",       "master_scaling",
      "oracle_equivalence"};
  return kNames;
}

SuiteReport RunSuite(const std::string& name, std::uint64_t seed) {
  if (name == "cdf_coverage") return CdfCoverageSuite(seed);
  if (name == "ipw_bias") return IpwBiasSuite(seed);
  if (name == "wls_coverage") return WlsCoverageSuite(seed);
  if (name == "ucb_selection") return UcbSelectionSuite(seed);
  if (name == "elimination") return EliminationSuite(seed);
  if (name == "separation") return SeparationSuite(seed);
  if (name == "figure2") return Figure2Suite(seed);
  if (name == "ablation") return AblationSuite(seed);
  if (name == "master_scaling") return MasterScalingSuite(seed);
  if (name == "oracle_equivalence") return OracleEquivalenceSuite(seed);
  throw std::invalid_argument("unknown suite: " + name);
}

SuiteReport CdfCoverageSuite(std::uint64_t seed, int trials,
                             std::int64_t horizon) {
  const Stopwatch watch;
  SuiteReport report{"cdf_coverage", seed, {}, 0.0};
  const BidGrid grid(horizon);
  const std::int64_t init = InitBlockLength(horizon);
  const std::size_t size = grid.size();
  int family_index = 0;
  for (const HobSpec& spec : CoverageFamilies()) {
    const std::unique_ptr<HobModel> hob = MakeHobModel(spec);
    std::vector<double> truth(size);
    for (std::size_t j = 0; j < size; ++j) truth[j] = hob->Cdf(grid.point(j));
    int covered = 0;
    double capped = 0.0;
    double worst_ratio = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      Rng rng(seed, static_cast<std::uint64_t>(family_index) * 100000 + trial);
      std::vector<double> samples(static_cast<std::size_t>(init));
      for (double& m : samples) m = hob->Sample(rng);
      HobStats stats(grid);
      stats.SetInitialProbabilities(InitEstimate(samples, grid));
      // A level-style book: a held-out block at bid 1, then bids drawn
      // independently of the HOBs.
      for (std::int64_t i = 0; i < init; ++i) {
        stats.Ingest(grid.last(), AuctionFeedback::Won(hob->Sample(rng), 0.0));
      }
      for (std::int64_t i = 2 * init; i < horizon; ++i) {
        const auto j = std::min<std::size_t>(
            size - 1, static_cast<std::size_t>(rng.Uniform() * size));
        const double m = hob->Sample(rng);
        stats.Ingest(j, m <= grid.point(j) ? AuctionFeedback::Won(m, 0.0)
                                           : AuctionFeedback::Lost(0.0));
      }
      const std::vector<double> cdf = stats.CdfEstimates();
      const std::vector<double> width = stats.CdfWidths(horizon);
      bool ok = true;
      double gap = 0.0;
      int at_cap = 0;
      for (std::size_t j = 0; j < size; ++j) {
        gap += truth[j] - cdf[j];
        const double e1 = std::abs(truth[j] - cdf[j]);
        const double e2 = grid.spacing() * std::abs(gap);
        ok = ok && e1 <= width[j] && e2 <= width[j];
        worst_ratio = std::max(worst_ratio, std::max(e1, e2) / width[j]);
        if (width[j] >= 1.0) ++at_cap;
      }
      covered += ok ? 1 : 0;
      capped += static_cast<double>(at_cap) / static_cast<double>(size);
    }
    const double rate = static_cast<double>(covered) / trials;
    report.checks.push_back(
        {"coverage_" + spec.family, rate >= 0.99,
         "both width inequalities at every grid point in >= 99% of trials",
         {{"coverage", rate},
          {"trials", static_cast<double>(trials)},
          {"worst_error_to_width", worst_ratio},
          {"fraction_widths_at_cap", capped / trials}}});
    ++family_index;
  }
  report.seconds = watch.Seconds();
  return report;
}

SuiteReport IpwBiasSuite(std::uint64_t seed, std::int64_t draws) {
  const Stopwatch watch;
  SuiteReport report{"ipw_bias", seed, {}, 0.0};
  const double p1 = 0.8, p0 = 0.4;  // E[v1], E[v0]; outcomes are Bernoulli
  const double target = p1 - p0;
  int cells = 0, bias_ok = 0, var_ok = 0;
  double worst_bias_slack = -1e300, worst_var_slack = -1e300;
  std::uint64_t stream = 0;
  for (double g : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (double u : {0.0, 0.01, 0.02, 0.04, 0.08}) {
      const double g_hat = g <= 0.5 ? g + u : g - u;
      const double sigma = VarianceProxy(g_hat, false);
      Rng rng(seed, ++stream);
      double sum = 0.0, sum2 = 0.0;
      std::vector<double> values(static_cast<std::size_t>(draws));
      for (std::int64_t i = 0; i < draws; ++i) {
        const bool won = rng.Bernoulli(g);
        const double v1 = rng.Bernoulli(p1) ? 1.0 : 0.0;
        const double v0 = rng.Bernoulli(p0) ? 1.0 : 0.0;
        const AuctionFeedback fb =
            won ? AuctionFeedback::Won(0.0, v1) : AuctionFeedback::Lost(v0);
        const double e = Ipw(fb, g_hat, false);
        values[i] = e;
        sum += e;
      }
      const auto n = static_cast<double>(draws);
      const double mean = sum / n;
      double m4 = 0.0;
      for (double e : values) {
        const double d2 = (e - mean) * (e - mean);
        sum2 += d2;
        m4 += d2 * d2;
      }
      const double var = sum2 / (n - 1.0);
      const double se_mean = std::sqrt(var / n);
      const double se_var = std::sqrt(std::max(0.0, m4 / n - var * var) / n);
      const double bias_slack = 4.0 * u * sigma + 3.0 * se_mean - std::abs(mean - target);
      const double var_slack = 4.0 * sigma * sigma + 3.0 * se_var - var;
      ++cells;
      bias_ok += bias_slack >= 0.0 ? 1 : 0;
      var_ok += var_slack >= 0.0 ? 1 : 0;
      worst_bias_slack = std::max(worst_bias_slack, -bias_slack);
      worst_var_slack = std::max(worst_var_slack, -var_slack);
    }
  }
  report.checks.push_back(
      {"bias_proxy", bias_ok == cells,
       "|mean IPW - E[v1 - v0]| <= 4 u sigma + 3 SE on every (G, u) cell",
       {{"cells", static_cast<double>(cells)},
        {"cells_ok", static_cast<double>(bias_ok)},
        {"max_violation", worst_bias_slack}}});
  report.checks.push_back(
      {"variance_proxy", var_ok == cells,
       "empirical variance <= 4 sigma^2 + 3 SE on every (G, u) cell",
       {{"cells", static_cast<double>(cells)},
        {"cells_ok", static_cast<double>(var_ok)},
        {"max_violation", worst_var_slack}}});
  report.seconds = watch.Seconds();
  return report;
}

SuiteReport WlsCoverageSuite(std::uint64_t seed, int trials, int samples) {
  const Stopwatch watch;
  SuiteReport report{"wls_coverage", seed, {}, 0.0};
  constexpr Eigen::Index kDim = 5;
  constexpr std::int64_t kHorizon = 10000;
  auto positive_unit = [kDim](Rng& rng) {
    Eigen::VectorXd v(kDim);
    for (Eigen::Index i = 0; i < kDim; ++i) v(i) = rng.Uniform();
    return Eigen::VectorXd(v / v.norm());
  };
  int covered = 0;
  double mean_ratio = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(seed, static_cast<std::uint64_t>(trial));
    const Eigen::VectorXd theta = positive_unit(rng);
    RidgeState state(kDim);
    for (int i = 0; i < samples; ++i) {
      const Eigen::VectorXd x = positive_unit(rng);
      const double effect = theta.dot(x);
      const double base = 0.2 * (1.0 - effect);
      const double v1 = rng.Bernoulli(base + effect) ? 1.0 : 0.0;
      const double v0 = rng.Bernoulli(base) ? 1.0 : 0.0;
      const bool explore = rng.Bernoulli(0.2);
      double g = 0.5, g_hat = 0.5, u = 0.0;
      if (!explore) {
        g = 0.1 + 0.8 * rng.Uniform();
        u = 0.05 * rng.Uniform();
        g_hat = std::clamp(g + u * (2.0 * rng.Uniform() - 1.0), 0.01, 0.99);
        u = std::abs(g_hat - g);
      }
      const bool won = rng.Bernoulli(g);
      const AuctionFeedback fb =
          won ? AuctionFeedback::Won(0.0, v1) : AuctionFeedback::Lost(v0);
      state.Absorb(x, Ipw(fb, g_hat, explore), VarianceProxy(g_hat, explore), u);
    }
    const Eigen::VectorXd query = positive_unit(rng);
    const double err = std::abs(state.ThetaHat().dot(query) - theta.dot(query));
    const double width = state.ValueConfWidth(query, kHorizon);
    covered += err <= width ? 1 : 0;
    mean_ratio += err / width / trials;
  }
  const double rate = static_cast<double>(covered) / trials;
  report.checks.push_back(
      {"coverage", rate >= 0.99,
       "|theta_hat^T x - theta^T x| <= gamma ||x||_{A^-1} in >= 99% of trials",
       {{"coverage", rate},
        {"trials", static_cast<double>(trials)},
        {"mean_error_to_width", mean_ratio}}});
  report.seconds = watch.Seconds();
  return report;
}

SuiteReport UcbSelectionSuite(std::uint64_t seed, int cases) {
  const Stopwatch watch;
  SuiteReport report{"ucb_selection", seed, {}, 0.0};
  constexpr std::int64_t kHorizon = 1000000;
  const BidGrid grid(kHorizon);
  const std::size_t size = grid.size();
  constexpr double kTol = 1e-12;

  int gap_cases = 0, gap_ok = 0;
  int sel_cases = 0, contain_ok = 0, spread_ok = 0, smaller_ok = 0;
  int valid_cases = 0, valid_ok = 0;
  int attempts = 0;
  double worst_gap = -1e300;
  Rng rng(seed, 7);
  std::vector<double> truth(size), true_integral(size);

  while ((gap_cases < cases || sel_cases < cases) && attempts < 40 * cases) {
    ++attempts;
    const double omega = 0.15 + 0.35 * rng.Uniform();
    const double lambda = std::min(0.9, omega + 0.02 + 0.3 * rng.Uniform());
    const std::unique_ptr<PiecewiseHob> hob =
        RandomLocallyBoundedHob(rng, omega, lambda);
    const HobParams params{omega, lambda};
    const double c = SelectionPerturbation(params);
    const double eps = SelectionMargin(params);
    for (std::size_t j = 0; j < size; ++j) {
      truth[j] = hob->Cdf(grid.point(j));
      true_integral[j] = hob->CdfIntegral(grid.point(j));
    }

    // Bounded optimizer gap.
    if (gap_cases < cases) {
      const double radius = (1.0 - eps - lambda) / 2.0;
      const std::vector<double> est = NoisyCdf(*hob, grid, radius * rng.Uniform(), rng);
      const std::vector<double> integral = RiemannIntegral(est, grid);
      const double v1 = rng.Uniform();
      const double v2 = v1 + 0.5 * omega * rng.Uniform();
      const std::size_t b1 = PerturbedOptimizer(est, integral, v1, grid);
      const std::size_t b2 = PerturbedOptimizer(est, integral, v2, grid);
      const double gap = std::abs(est[b2] - est[b1]);
      ++gap_cases;
      gap_ok += gap <= 1.0 - eps + kTol ? 1 : 0;
      worst_gap = std::max(worst_gap, gap - (1.0 - eps));
    }

    // Interval selection under the accuracy precondition.
    const double budget = std::min(c * eps / 2.0, (1.0 - 4.0 * eps - lambda) / 2.0);
    const double v = rng.Uniform();
    const double v_hat = v + budget * 0.5 * (2.0 * rng.Uniform() - 1.0);
    const std::vector<double> est =
        NoisyCdf(*hob, grid, budget * 0.5 * rng.Uniform(), rng);
    const std::vector<double> integral = RiemannIntegral(est, grid);
    double cdf_err = 0.0, int_err = 0.0;
    for (std::size_t j = 0; j < size; ++j) {
      cdf_err = std::max(cdf_err, std::abs(truth[j] - est[j]));
      int_err = std::max(int_err, std::abs(true_integral[j] - integral[j]));
    }
    const bool precondition = std::abs(v_hat - v) + cdf_err + int_err <= budget;

    const UcbSelection sel = SelectInterval(est, integral, v_hat, params, grid);
    // Coverage-consistent widths for the table.
    std::vector<double> u(size);
    double running = 0.0;
    for (std::size_t j = 0; j < size; ++j) {
      running += truth[j] - est[j];
      u[j] = std::max(std::abs(truth[j] - est[j]), grid.spacing() * std::abs(running)) +
             0.001 * rng.Uniform();
    }
    const double gamma_norm = std::abs(v_hat - v) + 0.5 * rng.Uniform();
    const UcbInputs inputs{v_hat, gamma_norm, est, integral, u};
    std::vector<std::size_t> all(size);
    for (std::size_t j = 0; j < size; ++j) all[j] = j;
    const std::vector<UcbEntry> table =
        ComputeTable(inputs, all, params, kHorizon, WidthForm::kLeveled);

    // Reward-width validity holds whenever the per-index coverage does.
    ++valid_cases;
    bool valid = true;
    for (std::size_t j = 0; j < size; ++j) {
      const double r0 = truth[j] * (v - grid.point(j)) + true_integral[j];
      const double r1 = r0 - v;
      valid = valid &&
              std::abs(r0 - table[j].reward0) <= (1.0 - lambda) / 8.0 * table[j].width0 + kTol &&
              std::abs(r1 - table[j].reward1) <= (1.0 - lambda) / 8.0 * table[j].width1 + kTol;
    }
    valid_ok += valid ? 1 : 0;

    if (!precondition || sel_cases >= cases) continue;
    ++sel_cases;
    double best = -1e300;
    for (std::size_t j = 0; j < size; ++j) {
      best = std::max(best, truth[j] * (v - grid.point(j)) + true_integral[j]);
    }
    bool contained = true;
    for (std::size_t j = 0; j < size; ++j) {
      const double r = truth[j] * (v - grid.point(j)) + true_integral[j];
      if (r >= best - kTol && !sel.Contains(j)) contained = false;
    }
    contain_ok += contained ? 1 : 0;
    spread_ok += est[sel.right] - est[sel.left] <= 1.0 - eps + kTol ? 1 : 0;
    bool smaller = true;
    for (std::size_t j = sel.left; j <= sel.right; ++j) {
      smaller = smaller && eps * table[j].width(sel.q) <=
                               std::min(table[j].width0, table[j].width1) + kTol;
    }
    smaller_ok += smaller ? 1 : 0;
  }

  report.checks.push_back(
      {"optimizer_gap", gap_cases >= cases && gap_ok == gap_cases,
       "|G_hat(b*(v2)) - G_hat(b*(v1))| <= 1 - eps for |v2 - v1| <= omega/2",
       {{"cases", static_cast<double>(gap_cases)},
        {"holds", static_cast<double>(gap_ok)},
        {"max_excess", worst_gap}}});
  report.checks.push_back(
      {"optimal_bid_contained", sel_cases >= cases && contain_ok == sel_cases,
       "every grid maximizer of the true reward lies in [b_L, b_R]",
       {{"cases", static_cast<double>(sel_cases)},
        {"holds", static_cast<double>(contain_ok)},
        {"attempts", static_cast<double>(attempts)}}});
  report.checks.push_back(
      {"interval_spread", sel_cases >= cases && spread_ok == sel_cases,
       "G_hat(b_R) - G_hat(b_L) <= 1 - eps",
       {{"cases", static_cast<double>(sel_cases)},
        {"holds", static_cast<double>(spread_ok)}}});
  report.checks.push_back(
      {"smaller_width", sel_cases >= cases && smaller_ok == sel_cases,
       "eps * w_q(b) <= min(w_0(b), w_1(b)) on [b_L, b_R]",
       {{"cases", static_cast<double>(sel_cases)},
        {"holds", static_cast<double>(smaller_ok)}}});
  report.checks.push_back(
      {"reward_width_valid", valid_ok == valid_cases,
       "|r_q - r_hat_q| <= (1 - lambda)/8 w_q at every grid bid",
       {{"cases", static_cast<double>(valid_cases)},
        {"holds", static_cast<double>(valid_ok)}}});
  report.seconds = watch.Seconds();
  return report;
}

SuiteReport EliminationSuite(std::uint64_t seed, std::int64_t horizon,
                             int runs) {
  const Stopwatch watch;
  SuiteReport report{"elimination", seed, {}, 0.0};
  const ExperimentConfig config = ScalingConfig(seed, horizon, runs);
  for (const double scale : {1.0, kTunedScale}) {
    const bool tuned = scale != 1.0;
    std::int64_t pairs = 0, deep_pairs = 0, survived = 0, near = 0;
    for (int r = 0; r < runs; ++r) {
      const std::uint64_t s = seed + static_cast<std::uint64_t>(r);
      Rng build(s, 0), env_rng(s, 1), policy_rng(s, 2);
      std::unique_ptr<Environment> env =
          MakeEnvironment(config.environment, horizon, build);
      ConfidenceOptions options{scale, tuned ? kTunedThreshold : 0.0};
      MasterPolicy master(horizon, env->dim(), env->hob().local_params(), options);
      const BidGrid& grid = master.grid();
      std::vector<double> reward(grid.size());
      for (std::int64_t t = 1; t <= horizon; ++t) {
        const Draw d = env->Step(t, env_rng);
        const MasterDecision dec = master.Decide(t, d.x, policy_rng);
        if (dec.branch != Branch::kInit) {
          const double v = env->MarginalValue(d.x);
          std::size_t opt = 0;
          for (std::size_t j = 0; j < grid.size(); ++j) {
            reward[j] = ExpectedReward(env->hob(), v, grid.point(j));
            if (reward[j] > reward[opt]) opt = j;
          }
          for (std::size_t k = 0; k < dec.levels_read.size(); ++k) {
            const int level = dec.levels_read[k];
            const std::vector<std::size_t>& set = dec.active_sets[k];
            ++pairs;
            if (level >= 2) ++deep_pairs;
            if (std::find(set.begin(), set.end(), opt) != set.end()) ++survived;
            double worst = 0.0;
            for (std::size_t j : set) worst = std::max(worst, reward[opt] - reward[j]);
            if (worst <= 8.0 * std::ldexp(1.0, -level)) ++near;
          }
        }
        master.Apply(dec, d.x, RunAuction(d.hob, d.v1, d.v0, dec.bid));
      }
    }
    const double denom = std::max<double>(1.0, static_cast<double>(pairs));
    const std::string prefix = tuned ? "tuned_" : "";
    report.checks.push_back(
        {prefix + "optimal_survives", survived >= 0.99 * pairs,
         "grid-optimal bid is in the active set in >= 99% of (round, level) pairs",
         {{"pairs", static_cast<double>(pairs)},
          {"pairs_below_level_1", static_cast<double>(deep_pairs)},
          {"rate", survived / denom},
          {"confidence_scale", scale}},
         tuned});
    report.checks.push_back(
        {prefix + "survivors_near_optimal", near >= 0.99 * pairs,
         "every active bid is within 8 * 2^-level of optimal in >= 99% of pairs",
         {{"pairs", static_cast<double>(pairs)},
          {"rate", near / denom},
          {"confidence_scale", scale}},
         tuned});
  }
  report.seconds = watch.Seconds();
  return report;
}

SuiteReport SeparationSuite(std::uint64_t seed) {
  const Stopwatch watch;
  SuiteReport report{"separation", seed, {}, 0.0};
  for (std::int64_t t : {std::int64_t{100}, std::int64_t{10000}, std::int64_t{1000000}}) {
    const SeparationResult r = SeparationCheck(t);
    const double need = r.delta / 2.0;
    report.checks.push_back(
        {"T=" + std::to_string(t),
         r.min_gap >= need - 1e-9 && r.gap_at_mu1 >= need - 1e-9 &&
             r.gap_at_mu2 >= need - 1e-9,
         "min over bids in [mu1, mu2] of the summed suboptimality >= delta/2",
         {{"delta", r.delta},
          {"min_gap", r.min_gap},
          {"delta_over_2", need},
          {"argmin_bid", r.argmin_bid},
          {"gap_at_mu1", r.gap_at_mu1},
          {"gap_at_mu2", r.gap_at_mu2}}});
  }
  report.seconds = watch.Seconds();
  return report;
}

SuiteReport Figure2Suite(std::uint64_t seed, std::int64_t horizon, int runs) {
  const Stopwatch watch;
  SuiteReport report{"figure2", seed, {}, 0.0};
  const ExperimentConfig config = PeriodicConfig(seed, horizon, runs);
  PolicyConfig linucb;
  linucb.name = "linucb";
  PolicyConfig tes;
  tes.name = "linucb_tes";
  const std::vector<RunResult> l = RunExperiment(config, linucb);
  const std::vector<RunResult> s = RunExperiment(config, tes);
  AddFigure2Checks(report, "", l, s, horizon, false);
  PolicyConfig tuned = tes;
  tuned.confidence_scale = kTunedScale;
  tuned.explore_threshold = kTunedThreshold;
  const std::vector<RunResult> st = RunExperiment(config, tuned);
  AddFigure2Checks(report, "tuned_", l, st, horizon, true);
  report.checks.push_back(
      {"tes_explore_rounds", true, "mean exploration rounds (information)",
       {{"literal", Aggregate(s).explore_rounds.mean},
        {"tuned", Aggregate(st).explore_rounds.mean},
        {"tuned_scale", kTunedScale},
        {"tuned_threshold", kTunedThreshold}},
       true});
  report.seconds = watch.Seconds();
  return report;
}

SuiteReport AblationSuite(std::uint64_t seed, std::int64_t horizon, int runs) {
  const Stopwatch watch;
  SuiteReport report{"ablation", seed, {}, 0.0};
  ExperimentConfig config = PeriodicConfig(seed, horizon, runs);
  config.environment.kind = "custom";
  config.environment.baseline = "zero";
  config.environment.contexts = "gaussian";
  PolicyConfig linucb;
  linucb.name = "linucb";
  PolicyConfig tes;
  tes.name = "linucb_tes";
  for (const bool tuned : {false, true}) {
    if (tuned) {
      tes.confidence_scale = kTunedScale;
      tes.explore_threshold = kTunedThreshold;
    }
    const PolicySummary a = Aggregate(RunExperiment(config, linucb));
    const PolicySummary b = Aggregate(RunExperiment(config, tes));
    const double se = std::sqrt((a.final_regret.std * a.final_regret.std +
                                 b.final_regret.std * b.final_regret.std) /
                                runs);
    const double diff = std::abs(a.final_regret.mean - b.final_regret.mean);
    report.checks.push_back(
        {std::string(tuned ? "tuned_" : "") + "zero_baseline_equivalence",
         diff <= 2.0 * se,
         "with v0 = 0 the final regrets agree within 2 standard errors",
         {{"linucb_final", a.final_regret.mean},
          {"tes_final", b.final_regret.mean},
          {"difference", diff},
          {"two_se", 2.0 * se}},
         tuned});
  }
  report.seconds = watch.Seconds();
  return report;
}

SuiteReport MasterScalingSuite(std::uint64_t seed, std::int64_t horizon,
                               int runs) {
  const Stopwatch watch;
  SuiteReport report{"master_scaling", seed, {}, 0.0};
  for (const bool tuned : {false, true}) {
    PolicyConfig master;
    master.name = "master";
    if (tuned) {
      master.confidence_scale = kTunedScale;
      master.explore_threshold = kTunedThreshold;
    }
    const PolicySummary small =
        Aggregate(RunExperiment(ScalingConfig(seed, horizon, runs), master));
    const PolicySummary large =
        Aggregate(RunExperiment(ScalingConfig(seed, 4 * horizon, runs), master));
    const double ratio = large.final_regret.mean / small.final_regret.mean;
    const double e1 = small.explore_rounds.mean;
    const double e4 = large.explore_rounds.mean;
    const std::string prefix = tuned ? "tuned_" : "";
    report.checks.push_back(
        {prefix + "regret_ratio", ratio <= 2.8,
         "mean cumulative regret R(4T)/R(T) <= 2.8",
         {{"T", static_cast<double>(horizon)},
          {"regret_T", small.final_regret.mean},
          {"regret_4T", large.final_regret.mean},
          {"ratio", ratio}},
         tuned});
    report.checks.push_back(
        {prefix + "explore_growth", e4 <= 1.25 * e1 + 50.0,
         "|explore(4T)| <= 1.25 |explore(T)| + 50",
         {{"explore_T", e1}, {"explore_4T", e4}, {"bound", 1.25 * e1 + 50.0}},
         tuned});
  }
  report.seconds = watch.Seconds();
  return report;
}

SuiteReport OracleEquivalenceSuite(std::uint64_t seed) {
  const Stopwatch watch;
  SuiteReport report{"oracle_equivalence", seed, {}, 0.0};

  // Weighted ridge against explicitly formed normal equations.
  {
    Rng rng(seed, 1);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::Index d = 2 + trial % 7;
      const int n = 50 + 40 * trial;
      RidgeState state(d);
      Eigen::MatrixXd x(n, d);
      Eigen::VectorXd y(n), w(n);
      for (int i = 0; i < n; ++i) {
        Eigen::VectorXd row(d);
        for (Eigen::Index k = 0; k < d; ++k) row(k) = rng.Normal();
        row /= std::max(1.0, row.norm());
        const double sigma = 4.0 + 40.0 * rng.Uniform();
        const double e = 4.0 * (2.0 * rng.Uniform() - 1.0);
        state.Absorb(row, e, sigma, 0.0);
        x.row(i) = row.transpose();
        y(i) = e;
        w(i) = 1.0 / (sigma * sigma);
      }
      const Eigen::MatrixXd normal =
          Eigen::MatrixXd::Identity(d, d) + x.transpose() * w.asDiagonal() * x;
      const Eigen::VectorXd rhs = x.transpose() * w.asDiagonal() * y;
      const Eigen::VectorXd direct = normal.fullPivLu().solve(rhs);
      const double rel = (state.ThetaHat() - direct).norm() /
                         std::max(direct.norm(), 1e-300);
      worst = std::max(worst, rel);
    }
    report.checks.push_back({"theta_hat_vs_normal_equations", worst <= 1e-8,
                             "relative error <= 1e-8",
                             {{"max_relative_error", worst}}});
  }

  // Incremental HOB statistics against a batch rebuild from the full log.
  {
    Rng rng(seed, 2);
    bool equal = true;
    for (std::int64_t horizon : {std::int64_t{16}, std::int64_t{400}, std::int64_t{10000}}) {
      const BidGrid grid(horizon);
      const AtomMixHob hob(0.05);
      HobStats inc(grid);
      std::vector<std::size_t> bids;
      std::vector<double> hobs;
      for (int i = 0; i < 3000; ++i) {
        const std::size_t j = static_cast<std::size_t>(rng.Uniform() * grid.size()) %
                              grid.size();
        const double m = hob.Sample(rng);
        inc.Ingest(j, m <= grid.point(j) ? AuctionFeedback::Won(m, 0.0)
                                         : AuctionFeedback::Lost(0.0));
        bids.push_back(j);
        hobs.push_back(m);
      }
      std::vector<std::int64_t> n(grid.size(), 0), c(grid.size(), 0);
      for (std::size_t j = 0; j < grid.size(); ++j) {
        for (std::size_t i = 0; i < bids.size(); ++i) {
          if (bids[i] < j) continue;
          ++n[j];
          const double lo = j == 0 ? -1e300 : grid.point(j - 1);
          if (hobs[i] > lo && hobs[i] <= grid.point(j)) ++c[j];
        }
      }
      for (std::size_t j = 0; j < grid.size(); ++j) {
        equal = equal && n[j] == inc.counts()[j] && c[j] == inc.bucket_counts()[j];
      }
      if (equal && inc.HasData(grid.last())) {
        const std::vector<double> est = inc.CdfEstimates();
        double acc = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j) {
          acc += static_cast<double>(c[j]) / static_cast<double>(n[j]);
          equal = equal && est[j] == std::min(1.0, acc);
        }
      }
    }
    report.checks.push_back({"cdf_incremental_vs_batch", equal,
                             "counts and CDF estimates identical", {}});
  }

  // Brute-force oracle against an exhaustive 1e-4 sweep.
  {
    Rng rng(seed, 3);
    double worst = 0.0;
    std::vector<std::unique_ptr<HobModel>> models;
    models.push_back(std::make_unique<UniformHob>());
    models.push_back(std::make_unique<BetaHob>(5.0, 7.0));
    models.push_back(std::make_unique<AtomMixHob>(0.05));
    models.push_back(RandomLocallyBoundedHob(rng, 0.2, 0.6));
    for (const auto& hob : models) {
      for (int k = 0; k < 25; ++k) {
        const double v = -0.2 + 1.4 * rng.Uniform();
        const OracleBid got = OracleBest(*hob, v);
        double best_b = 0.0, best_r = -1e300;
        for (int i = 0; i <= 10000; ++i) {
          const double b = i * 1e-4;
          const double r = hob->Cdf(b) * (v - b) + hob->CdfIntegral(b);
          if (r > best_r) {
            best_r = r;
            best_b = b;
          }
        }
        worst = std::max(worst, std::abs(got.bid - best_b));
      }
    }
    report.checks.push_back({"oracle_best_vs_sweep", worst <= 2e-4,
                             "bid within 2e-4 of the exhaustive sweep",
                             {{"max_bid_difference", worst}}});
  }
  report.seconds = watch.Seconds();
  return report;
}

std::string FormatCheck(const SuiteReport& report, const Check& check) {
  std::ostringstream os;
  os << "suite=" << report.suite << " check=" << check.name << " status="
     << (check.diagnostic ? (check.pass ? "INFO-PASS" : "INFO-FAIL")
                          : (check.pass ? "PASS" : "FAIL"));
  for (const auto& [key, value] : check.stats) os << ' ' << key << '=' << Num(value);
  os << " detail=\"" << check.detail << '"';
  return os.str();
}

std::string FormatReport(const SuiteReport& report) {
  std::ostringstream os;
  for (const Check& c : report.checks) os << FormatCheck(report, c) << '\n';
  os << "suite=" << report.suite << " seed=" << report.seed
     << " status=" << (report.pass() ? "PASS" : "FAIL")
     << " seconds=" << Num(report.seconds) << '\n';
  return os.str();
}

}  // namespace causalbid
