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


#ifndef CAUSALBID_HARNESS_CONFIG_H_
#define CAUSALBID_HARNESS_CONFIG_H_

#include <cstdint>
#include <string>
#include <vector>

#include "causalbid/hob_models.h"

namespace causalbid {

struct PolicyConfig {
  std::string name = "linucb_tes";  // master | linucb_tes | linucb | oracle
  double eta = 1.0;                 // linucb_tes bonus weight
  double alpha = 1.0;               // linucb bonus multiplier
  double confidence_scale = 1.0;    // master, linucb_tes
  double explore_threshold = 0.0;   // <= 0 selects C(lambda, omega)
};

struct EnvironmentConfig {
  std::string kind = "periodic";  // periodic | lower_bound | custom
  std::int64_t dim = 11;
  HobSpec hob;
  std::string baseline = "periodic";  // periodic | two_level | constant | zero
  std::string contexts = "gaussian";  // gaussian | positive
  double frequency = 3.14159265358979323846 / 125.0;
  double baseline_low = 0.2;
  double baseline_high = 0.6;
  bool clip_v1 = false;
};

struct ExperimentConfig {
  std::vector<PolicyConfig> policies = {PolicyConfig{}};
  EnvironmentConfig environment;
  std::int64_t horizon = 50000;
  int runs = 10;
  std::uint64_t seed = 1;
  std::string out_dir = "out";
  bool plot = false;
  bool write_csv = true;
  int threads = 0;  // 0 selects the hardware concurrency

  // Throws std::invalid_argument naming the offending field.
  void Validate() const;
};

// JSON text -> config. Unknown keys are rejected. Accepts either "policy"
// (one object or name) or "policies" (a list).
ExperimentConfig ParseConfig(const std::string& json_text);
ExperimentConfig LoadConfig(const std::string& path);
// Canonical JSON echo of a config (stable key order).
std::string ConfigToJson(const ExperimentConfig& config, int indent = 2);

}  // namespace causalbid

#endif  // CAUSALBID_HARNESS_CONFIG_H_
