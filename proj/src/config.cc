/*
 * Copyright 2026 The agenteval Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "agenteval/config.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "agenteval/errors.h"

namespace agenteval {
namespace {

constexpr double kSimplexTolerance = 1e-9;

void RequireUnit(std::string_view name, double v) {
  if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
    throw ConfigError(std::string(name) + " must lie in [0, 1], got " +
                      std::to_string(v));
  }
}

void RequirePositive(std::string_view name, int v) {
  if (v < 1) {
    throw ConfigError(std::string(name) + " must be >= 1, got " +
                      std::to_string(v));
  }
}

double ReadReal(const Json& doc, const std::string& key) {
  const Json& v = doc.at(key);
  if (!v.is_number()) throw ConfigError(key + ": expected a number");
  return v.get<double>();
}

int ReadInt(const Json& doc, const std::string& key) {
  const Json& v = doc.at(key);
  if (!v.is_number_integer()) throw ConfigError(key + ": expected an integer");
  return v.get<int>();
}

std::map<Dimension, double> ReadDimensionMap(const Json& doc,
                                             const std::string& key,
                                             std::map<Dimension, double> base) {
  const Json& v = doc.at(key);
  if (!v.is_object()) throw ConfigError(key + ": expected an object");
  for (const auto& [name, value] : v.items()) {
    auto dim = DimensionFromString(name);
    if (!dim) throw ConfigError(key + ": unknown dimension '" + name + "'");
    if (!value.is_number()) {
      throw ConfigError(key + "." + name + ": expected a number");
    }
    base[*dim] = value.get<double>();
  }
  return base;
}

}  // namespace

std::map<Dimension, double> EvalConfig::DefaultThresholds() {
  std::map<Dimension, double> out;
  for (Dimension d : kAllDimensions) out[d] = 0.6;
  return out;
}

std::map<Dimension, double> EvalConfig::DefaultWeights() {
  std::map<Dimension, double> out;
  for (Dimension d : kAllDimensions) out[d] = 1.0;
  return out;
}

double EvalConfig::Threshold(Dimension d) const {
  auto it = dimension_thresholds.find(d);
  return it == dimension_thresholds.end() ? 0.6 : it->second;
}

double EvalConfig::Weight(Dimension d) const {
  auto it = aggregate_weights.find(d);
  return it == aggregate_weights.end() ? 1.0 : it->second;
}

void EvalConfig::Validate() const {
  RequireUnit("tau_u", tau_u);
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw ConfigError("lambda must be a non-negative finite number");
  }
  RequireUnit("alpha", alpha);
  RequireUnit("beta", beta);
  RequireUnit("gamma", gamma);
  if (std::abs(alpha + beta + gamma - 1.0) > kSimplexTolerance) {
    throw ConfigError("alpha + beta + gamma must equal 1 (got " +
                      std::to_string(alpha + beta + gamma) + ")");
  }
  RequirePositive("k_top", k_top);
  RequirePositive("window_size", window_size);
  RequireUnit("theta_acs", theta_acs);
  RequireUnit("delta_min", delta_min);
  RequireUnit("theta_ar", theta_ar);
  RequireUnit("theta_prr", theta_prr);
  RequireUnit("acc_stability_band", acc_stability_band);
  RequirePositive("tool_window_size", tool_window_size);
  RequirePositive("tool_bucket_count", tool_bucket_count);
  for (const auto& [dim, t] : dimension_thresholds) {
    RequireUnit("dimension_thresholds." + std::string(ToString(dim)), t);
  }
  for (const auto& [dim, w] : aggregate_weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw ConfigError("aggregate_weights." + std::string(ToString(dim)) +
                        " must be a non-negative finite number");
    }
  }
}

Json ToJson(const EvalConfig& c) {
  Json out = Json::object();
  out["tau_u"] = c.tau_u;
  out["lambda"] = c.lambda;
  out["alpha"] = c.alpha;
  out["beta"] = c.beta;
  out["gamma"] = c.gamma;
  out["k_top"] = c.k_top;
  out["window_size"] = c.window_size;
  out["theta_acs"] = c.theta_acs;
  out["delta_min"] = c.delta_min;
  out["theta_ar"] = c.theta_ar;
  out["theta_prr"] = c.theta_prr;
  out["acc_stability_band"] = c.acc_stability_band;
  out["tool_window_size"] = c.tool_window_size;
  out["tool_bucket_count"] = c.tool_bucket_count;
  out["accuracy_delta_mode"] =
      c.accuracy_delta_mode == AccuracyDeltaMode::kPriorWindow ? "prior"
                                                               : "baseline";
  Json thresholds = Json::object();
  Json weights = Json::object();
  for (Dimension d : kAllDimensions) {
    thresholds[std::string(ToString(d))] = c.Threshold(d);
    weights[std::string(ToString(d))] = c.Weight(d);
  }
  out["dimension_thresholds"] = std::move(thresholds);
  out["aggregate_weights"] = std::move(weights);
  return out;
}

EvalConfig ConfigFromJson(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  EvalConfig c;
  for (const auto& [key, value] : doc.items()) {
    if (key == "tau_u") {
      c.tau_u = ReadReal(doc, key);
    } else if (key == "lambda") {
      c.lambda = ReadReal(doc, key);
    } else if (key == "alpha") {
      c.alpha = ReadReal(doc, key);
    } else if (key == "beta") {
      c.beta = ReadReal(doc, key);
    } else if (key == "gamma") {
      c.gamma = ReadReal(doc, key);
    } else if (key == "k_top") {
      c.k_top = ReadInt(doc, key);
    } else if (key == "window_size") {
      c.window_size = ReadInt(doc, key);
    } else if (key == "theta_acs") {
      c.theta_acs = ReadReal(doc, key);
    } else if (key == "delta_min") {
      c.delta_min = ReadReal(doc, key);
    } else if (key == "theta_ar") {
      c.theta_ar = ReadReal(doc, key);
    } else if (key == "theta_prr") {
      c.theta_prr = ReadReal(doc, key);
    } else if (key == "acc_stability_band") {
      c.acc_stability_band = ReadReal(doc, key);
    } else if (key == "tool_window_size") {
      c.tool_window_size = ReadInt(doc, key);
    } else if (key == "tool_bucket_count") {
      c.tool_bucket_count = ReadInt(doc, key);
    } else if (key == "accuracy_delta_mode") {
      if (!value.is_string()) throw ConfigError(key + ": expected a string");
      const auto mode = value.get<std::string>();
      if (mode == "prior") {
        c.accuracy_delta_mode = AccuracyDeltaMode::kPriorWindow;
      } else if (mode == "baseline") {
        c.accuracy_delta_mode = AccuracyDeltaMode::kBaseline;
      } else {
        throw ConfigError(key + ": expected \"prior\" or \"baseline\"");
      }
    } else if (key == "dimension_thresholds") {
      c.dimension_thresholds =
          ReadDimensionMap(doc, key, std::move(c.dimension_thresholds));
    } else if (key == "aggregate_weights") {
      c.aggregate_weights =
          ReadDimensionMap(doc, key, std::move(c.aggregate_weights));
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  c.Validate();
  return c;
}

EvalConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    return EvalConfig{};
  }
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError("config file " + path.string() + " is not valid JSON: " +
                      e.what());
  }
  return ConfigFromJson(doc);
}

}  // namespace agenteval
