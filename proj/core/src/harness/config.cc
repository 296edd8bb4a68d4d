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


#include "causalbid/harness/config.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace causalbid {

namespace {

using Json = nlohmann::ordered_json;

const std::set<std::string> kPolicies = {"master", "linucb_tes", "linucb",
                                         "oracle"};

void RejectUnknown(const Json& obj, const std::set<std::string>& known,
                   const std::string& where) {
  for (const auto& item : obj.items()) {
    if (!known.count(item.key())) {
      throw std::invalid_argument("config: unknown key '" + item.key() +
                                  "' in " + where);
    }
  }
}

template <typename T>
void Read(const Json& obj, const char* key, T& out) {
  if (obj.contains(key)) out = obj.at(key).get<T>();
}

PolicyConfig ParsePolicy(const Json& j) {
  PolicyConfig p;
  if (j.is_string()) {
    p.name = j.get<std::string>();
    return p;
  }
  RejectUnknown(j, {"name", "eta", "alpha", "confidence_scale",
                    "explore_threshold"},
                "policy");
  Read(j, "name", p.name);
  Read(j, "eta", p.eta);
  Read(j, "alpha", p.alpha);
  Read(j, "confidence_scale", p.confidence_scale);
  Read(j, "explore_threshold", p.explore_threshold);
  return p;
}

EnvironmentConfig ParseEnvironment(const Json& j) {
  EnvironmentConfig e;
  RejectUnknown(j, {"kind", "dim", "hob", "baseline", "contexts", "frequency",
                    "baseline_low", "baseline_high", "clip_v1"},
                "environment");
  Read(j, "kind", e.kind);
  Read(j, "dim", e.dim);
  Read(j, "baseline", e.baseline);
  Read(j, "contexts", e.contexts);
  Read(j, "frequency", e.frequency);
  Read(j, "baseline_low", e.baseline_low);
  Read(j, "baseline_high", e.baseline_high);
  Read(j, "clip_v1", e.clip_v1);
  if (j.contains("hob")) {
    const Json& h = j.at("hob");
    RejectUnknown(h, {"family", "a", "b", "delta", "omega"}, "environment.hob");
    Read(h, "family", e.hob.family);
    Read(h, "a", e.hob.shape_a);
    Read(h, "b", e.hob.shape_b);
    Read(h, "delta", e.hob.delta);
    Read(h, "omega", e.hob.omega);
  }
  return e;
}

Json PolicyToJson(const PolicyConfig& p) {
  Json j;
  j["name"] = p.name;
  j["eta"] = p.eta;
  j["alpha"] = p.alpha;
  j["confidence_scale"] = p.confidence_scale;
  j["explore_threshold"] = p.explore_threshold;
  return j;
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (horizon < 4) throw std::invalid_argument("config: horizon must be >= 4");
  if (runs < 1) throw std::invalid_argument("config: runs must be >= 1");
  if (threads < 0) throw std::invalid_argument("config: threads must be >= 0");
  if (policies.empty()) throw std::invalid_argument("config: no policy given");
  std::set<std::string> seen;
  for (const PolicyConfig& p : policies) {
    if (!kPolicies.count(p.name)) {
      throw std::invalid_argument("config: unknown policy '" + p.name + "'");
    }
    if (!seen.insert(p.name).second) {
      throw std::invalid_argument("config: policy '" + p.name + "' listed twice");
    }
    if (!(p.eta >= 0.0) || !(p.alpha >= 0.0) || !(p.confidence_scale > 0.0)) {
      throw std::invalid_argument("config: policy '" + p.name +
                                  "' has an invalid parameter");
    }
  }
  const EnvironmentConfig& e = environment;
  if (e.kind != "periodic" && e.kind != "lower_bound" && e.kind != "custom") {
    throw std::invalid_argument("config: unknown environment '" + e.kind + "'");
  }
  if (e.dim < 1) throw std::invalid_argument("config: dim must be >= 1");
  if (e.kind == "lower_bound" && horizon < std::max<std::int64_t>(e.dim * e.dim, 4)) {
    throw std::invalid_argument("config: lower_bound needs horizon >= dim^2");
  }
  if (e.kind == "custom") {
    const std::set<std::string> baselines = {"periodic", "two_level", "constant",
                                             "zero"};
    if (!baselines.count(e.baseline)) {
      throw std::invalid_argument("config: unknown baseline '" + e.baseline + "'");
    }
    if (e.contexts != "gaussian" && e.contexts != "positive") {
      throw std::invalid_argument("config: unknown contexts '" + e.contexts + "'");
    }
  }
  if (e.hob.family != "beta" && e.hob.family != "uniform" &&
      e.hob.family != "atom_mix") {
    throw std::invalid_argument("config: unknown HOB family '" + e.hob.family + "'");
  }
}

ExperimentConfig ParseConfig(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("config: malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
  RejectUnknown(j, {"policy", "policies", "environment", "horizon", "T", "runs",
                    "seed", "out_dir", "plot", "write_csv", "threads"},
                "config");
  ExperimentConfig c;
  try {
    if (j.contains("policy") && j.contains("policies")) {
      throw std::invalid_argument("config: give either 'policy' or 'policies'");
    }
    if (j.contains("policy")) c.policies = {ParsePolicy(j.at("policy"))};
    if (j.contains("policies")) {
      c.policies.clear();
      for (const Json& p : j.at("policies")) c.policies.push_back(ParsePolicy(p));
    }
    if (j.contains("environment")) c.environment = ParseEnvironment(j.at("environment"));
    Read(j, "horizon", c.horizon);
    Read(j, "T", c.horizon);
    Read(j, "runs", c.runs);
    Read(j, "seed", c.seed);
    Read(j, "out_dir", c.out_dir);
    Read(j, "plot", c.plot);
    Read(j, "write_csv", c.write_csv);
    Read(j, "threads", c.threads);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("config: wrong value type: ") + e.what());
  }
  c.Validate();
  return c;
}

ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseConfig(buf.str());
}

std::string ConfigToJson(const ExperimentConfig& c, int indent) {
  Json j;
  j["policies"] = Json::array();
  for (const PolicyConfig& p : c.policies) j["policies"].push_back(PolicyToJson(p));
  const EnvironmentConfig& e = c.environment;
  Json env;
  env["kind"] = e.kind;
  env["dim"] = e.dim;
  env["hob"] = {{"family", e.hob.family}, {"a", e.hob.shape_a},
                {"b", e.hob.shape_b},     {"delta", e.hob.delta},
                {"omega", e.hob.omega}};
  env["baseline"] = e.baseline;
  env["contexts"] = e.contexts;
  env["frequency"] = e.frequency;
  env["baseline_low"] = e.baseline_low;
  env["baseline_high"] = e.baseline_high;
  env["clip_v1"] = e.clip_v1;
  j["environment"] = env;
  j["horizon"] = c.horizon;
  j["runs"] = c.runs;
  j["seed"] = c.seed;
  j["out_dir"] = c.out_dir;
  j["plot"] = c.plot;
  j["write_csv"] = c.write_csv;
  j["threads"] = c.threads;
  return j.dump(indent);
}

}  // namespace causalbid
