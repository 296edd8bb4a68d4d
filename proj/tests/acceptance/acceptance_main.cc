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


// Acceptance runner. Prints one line per criterion:
//   criterion=<n> name=<name> status=PASS|FAIL <measured statistics>
// With --criterion N only that criterion runs and the exit code reflects it.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "causalbid/harness/suites.h"

namespace {

using causalbid::Check;
using causalbid::SuiteReport;

constexpr std::uint64_t kSeed = 20260101;

struct Criterion {
  int id;
  std::string name;
  std::string suite;
  // Checks that decide the criterion; empty means every gating check.
  std::vector<std::string> gating;
};

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> kCriteria = {
      {1, "regret_shape_linucb_vs_tes", "figure2",
       {"regret_ratio", "linucb_linear", "tes_concave"}},
      {2, "cdf_width_coverage", "cdf_coverage", {}},
      {3, "ipw_bias_and_variance_proxies", "ipw_bias", {}},
      {4, "value_width_coverage", "wls_coverage", {}},
      {5, "interval_selection_properties", "ucb_selection",
       {"optimizer_gap", "optimal_bid_contained", "smaller_width"}},
      {6, "lower_bound_separation", "separation", {}},
      {7, "master_regret_ratio", "master_scaling", {"regret_ratio"}},
      {8, "master_exploration_growth", "master_scaling", {"explore_growth"}},
      {9, "oracle_equivalence", "oracle_equivalence", {}},
  };
  return kCriteria;
}

bool Evaluate(const Criterion& c, const SuiteReport& report,
              std::vector<const Check*>& shown) {
  bool pass = true;
  if (c.gating.empty()) {
    for (const Check& check : report.checks) {
      if (check.diagnostic) continue;
      shown.push_back(&check);
      pass = pass && check.pass;
    }
    return pass;
  }
  for (const std::string& name : c.gating) {
    const Check& check = report.Find(name);
    shown.push_back(&check);
    pass = pass && check.pass;
  }
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (arg == "--verbose") {
      verbose = true;
    } else {
      std::cerr << "usage: acceptance [--criterion N] [--verbose]\n";
      return 2;
    }
  }

  std::map<std::string, SuiteReport> reports;
  bool all_pass = true;
  int ran = 0;
  for (const Criterion& c : Criteria()) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    auto it = reports.find(c.suite);
    if (it == reports.end()) {
      it = reports.emplace(c.suite, causalbid::RunSuite(c.suite, kSeed)).first;
    }
    const SuiteReport& report = it->second;
    std::vector<const Check*> shown;
    const bool pass = Evaluate(c, report, shown);
    all_pass = all_pass && pass;
    std::cout << "criterion=" << c.id << " name=" << c.name
              << " status=" << (pass ? "PASS" : "FAIL");
    for (const Check* check : shown) {
      std::cout << ' ' << check->name << '=' << (check->pass ? "ok" : "violated");
      for (const auto& [key, value] : check->stats) {
        std::cout << ' ' << check->name << '.' << key << '=' << value;
      }
    }
    std::cout << std::endl;
    if (verbose || only != 0) std::cout << causalbid::FormatReport(report);
  }
  if (ran == 0) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  return all_pass ? 0 : 1;
}
