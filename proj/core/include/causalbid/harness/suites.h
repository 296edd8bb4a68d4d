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


#ifndef CAUSALBID_HARNESS_SUITES_H_
#define CAUSALBID_HARNESS_SUITES_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace causalbid {

// One pass/fail statement with the statistics it was decided on.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  std::vector<std::pair<std::string, double>> stats;
  // Diagnostic checks are reported but do not decide the suite.
  bool diagnostic = false;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool pass() const;
  const Check& Find(const std::string& name) const;
};

// cdf_coverage, ipw_bias, wls_coverage, ucb_selection, elimination,
// separation, figure2, ablation, master_scaling, oracle_equivalence.
const std::vector<std::string>& SuiteNames();

// Throws std::invalid_argument for an unknown suite.
SuiteReport RunSuite(const std::string& name, std::uint64_t seed);

// Individual suites with their sizes exposed for tests.
SuiteReport CdfCoverageSuite(std::uint64_t seed, int trials = 500,
                             std::int64_t horizon = 10000);
SuiteReport IpwBiasSuite(std::uint64_t seed, std::int64_t draws = 1000000);
SuiteReport WlsCoverageSuite(std::uint64_t seed, int trials = 500,
                             int samples = 2000);
SuiteReport UcbSelectionSuite(std::uint64_t seed, int cases = 1000);
SuiteReport EliminationSuite(std::uint64_t seed, std::int64_t horizon = 20000,
                             int runs = 3);
SuiteReport SeparationSuite(std::uint64_t seed);
SuiteReport Figure2Suite(std::uint64_t seed, std::int64_t horizon = 50000,
                         int runs = 10);
SuiteReport AblationSuite(std::uint64_t seed, std::int64_t horizon = 50000,
                          int runs = 10);
SuiteReport MasterScalingSuite(std::uint64_t seed, std::int64_t horizon = 10000,
                               int runs = 10);
SuiteReport OracleEquivalenceSuite(std::uint64_t seed);

// One machine-readable line per check:
//   suite=<s> check=<c> status=PASS|FAIL|INFO key=value ... detail="..."
std::string FormatCheck(const SuiteReport& report, const Check& check);
std::string FormatReport(const SuiteReport& report);

}  // namespace causalbid

#endif  // CAUSALBID_HARNESS_SUITES_H_
