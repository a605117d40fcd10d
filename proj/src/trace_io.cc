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

#include "agenteval/trace_io.h"

#include <cmath>
#include <set>

#include "agenteval/errors.h"

namespace agenteval {
namespace {

// Field accessors bound to one line so every error carries its location.
class Fields {
 public:
  Fields(const Json& doc, std::size_t line) : doc_(doc), line_(line) {}

  bool Has(const char* key) const {
    auto it = doc_.find(key);
    return it != doc_.end() && !it->is_null();
  }

  const Json& Require(const char* key) const {
    auto it = doc_.find(key);
    if (it == doc_.end() || it->is_null()) {
      throw ParseError(line_, key, "missing required field");
    }
    return *it;
  }

  double Real(const char* key) const {
    const Json& v = Require(key);
    if (!v.is_number()) throw ParseError(line_, key, "expected a number");
    return v.get<double>();
  }

  std::optional<double> OptionalReal(const char* key) const {
    if (!Has(key)) return std::nullopt;
    return Real(key);
  }

  std::int64_t Integer(const char* key) const {
    const Json& v = Require(key);
    if (!v.is_number_integer()) {
      throw ParseError(line_, key, "expected an integer");
    }
    if (v.is_number_unsigned() &&
        v.get<std::uint64_t>() >
            static_cast<std::uint64_t>(INT64_MAX)) {
      throw ParseError(line_, key, "integer out of range");
    }
    return v.get<std::int64_t>();
  }

  std::string Text(const char* key) const {
    const Json& v = Require(key);
    if (!v.is_string()) throw ParseError(line_, key, "expected a string");
    return v.get<std::string>();
  }

  std::string OptionalText(const char* key) const {
    return Has(key) ? Text(key) : std::string();
  }

  FeatureValues ValueMap(const Json& v, const char* key) const {
    if (!v.is_object()) throw ParseError(line_, key, "expected an object");
    FeatureValues out;
    for (const auto& [name, value] : v.items()) {
      if (!value.is_number()) {
        throw ParseError(line_, key, "value for '" + name + "' is not a number");
      }
      out[name] = value.get<double>();
    }
    return out;
  }

  FeatureValues OptionalValueMap(const char* key) const {
    if (!Has(key)) return {};
    return ValueMap(doc_.at(key), key);
  }

 private:
  const Json& doc_;
  std::size_t line_;
};

void CheckUnit(std::size_t line, const char* field, double v) {
  if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
    throw RecordValidationError(line, field,
                                "value " + std::to_string(v) +
                                    " outside [0, 1]");
  }
}

void CheckFinite(std::size_t line, const char* field, double v) {
  if (!std::isfinite(v)) {
    throw RecordValidationError(line, field, "value is not finite");
  }
}

void CheckNonEmpty(std::size_t line, const char* field, const std::string& s) {
  if (s.empty()) throw RecordValidationError(line, field, "must be non-empty");
}

struct Validator {
  std::size_t line;

  void operator()(const StepResult& s) const {
    if (s.step_index < 1) {
      throw RecordValidationError(line, "step_index", "must be >= 1");
    }
    CheckUnit(line, "confidence", s.confidence);
    if (s.ground_truth_correctness) {
      CheckUnit(line, "ground_truth_correctness", *s.ground_truth_correctness);
    }
  }

  void operator()(const ToolCallRecord& c) const {
    CheckNonEmpty(line, "tool_name", c.tool_name);
    if (!std::isfinite(c.latency_ms) || c.latency_ms < 0.0) {
      throw RecordValidationError(line, "latency_ms",
                                  "must be a finite value >= 0");
    }
    if (c.timestamp < 0) {
      throw RecordValidationError(line, "timestamp", "must be >= 0");
    }
    if (c.quality_signal) CheckUnit(line, "quality_signal", *c.quality_signal);
  }

  void operator()(const OutputEvent& e) const {
    CheckNonEmpty(line, "category", e.category);
    if (e.timestamp < 0) {
      throw RecordValidationError(line, "timestamp", "must be >= 0");
    }
    if (e.quality_signal) CheckUnit(line, "quality_signal", *e.quality_signal);
  }

  void operator()(const AttributionCase& a) const {
    if (a.feature_names.size() != a.claimed_weights.size()) {
      throw RecordValidationError(
          line, "claimed_weights",
          "length differs from feature_names");
    }
    if (a.feature_names.size() < 2) {
      throw RecordValidationError(line, "feature_names",
                                  "at least two features are required");
    }
    std::set<std::string> seen;
    for (const auto& name : a.feature_names) {
      CheckNonEmpty(line, "feature_names", name);
      if (!seen.insert(name).second) {
        throw RecordValidationError(line, "feature_names",
                                    "duplicate feature '" + name + "'");
      }
    }
    for (std::size_t i = 0; i < a.claimed_weights.size(); ++i) {
      const double w = a.claimed_weights[i];
      if (!std::isfinite(w) || w < 0.0) {
        throw RecordValidationError(line, "claimed_weights",
                                    "weights must be finite and >= 0");
      }
      if (i > 0 && w > a.claimed_weights[i - 1]) {
        throw RecordValidationError(line, "claimed_weights",
                                    "weights must be non-increasing");
      }
    }
    CheckFinite(line, "decision_value", a.decision_value);
    for (const auto& [name, v] : a.feature_values) {
      CheckFinite(line, "feature_values", v);
    }
    for (const auto& [name, v] : a.baseline_values) {
      CheckFinite(line, "baseline_values", v);
    }
    if (a.probe) {
      for (const auto& [name, v] : a.probe->weights) {
        CheckFinite(line, "probe", v);
      }
      CheckFinite(line, "probe", a.probe->intercept);
    }
  }

  void operator()(const RequestPair& p) const {
    CheckNonEmpty(line, "text_a", p.text_a);
    CheckNonEmpty(line, "text_b", p.text_b);
    CheckNonEmpty(line, "decision_a", p.decision_a);
    CheckNonEmpty(line, "decision_b", p.decision_b);
  }
};

TraceRecord ParseFields(const std::string& type, const Fields& f,
                        std::size_t line) {
  if (type == "step") {
    StepResult s;
    s.step_index = f.Integer("step_index");
    s.step_name = f.OptionalText("step_name");
    s.confidence = f.Real("confidence");
    s.ground_truth_correctness = f.OptionalReal("ground_truth_correctness");
    return s;
  }
  if (type == "tool_call") {
    ToolCallRecord c;
    c.tool_name = f.Text("tool_name");
    const auto state = f.Text("state");
    auto parsed = ToolCallStateFromString(state);
    if (!parsed) {
      throw ParseError(line, "state",
                       "expected SUCCESS, PARTIAL or FAILED, got '" + state +
                           "'");
    }
    c.state = *parsed;
    c.latency_ms = f.Real("latency_ms");
    c.timestamp = f.Integer("timestamp");
    c.quality_signal = f.OptionalReal("quality_signal");
    return c;
  }
  if (type == "output") {
    OutputEvent e;
    e.category = f.Text("category");
    e.session_id = f.OptionalText("session_id");
    e.timestamp = f.Integer("timestamp");
    e.quality_signal = f.OptionalReal("quality_signal");
    return e;
  }
  if (type == "attribution") {
    AttributionCase a;
    const Json& names = f.Require("feature_names");
    if (!names.is_array()) {
      throw ParseError(line, "feature_names", "expected an array");
    }
    for (const auto& n : names) {
      if (!n.is_string()) {
        throw ParseError(line, "feature_names", "expected strings");
      }
      a.feature_names.push_back(n.get<std::string>());
    }
    const Json& weights = f.Require("claimed_weights");
    if (!weights.is_array()) {
      throw ParseError(line, "claimed_weights", "expected an array");
    }
    for (const auto& w : weights) {
      if (!w.is_number()) {
        throw ParseError(line, "claimed_weights", "expected numbers");
      }
      a.claimed_weights.push_back(w.get<double>());
    }
    a.decision_value = f.Real("decision_value");
    a.feature_values = f.OptionalValueMap("feature_values");
    a.baseline_values = f.OptionalValueMap("baseline_values");
    if (f.Has("probe")) {
      const Json& probe = f.Require("probe");
      if (!probe.is_object()) throw ParseError(line, "probe", "expected an object");
      Fields pf(probe, line);
      LinearProbeSpec spec;
      spec.weights = pf.ValueMap(pf.Require("weights"), "probe.weights");
      spec.intercept = pf.OptionalReal("intercept").value_or(0.0);
      a.probe = std::move(spec);
    }
    return a;
  }
  if (type == "request_pair") {
    RequestPair p;
    p.text_a = f.Text("text_a");
    p.text_b = f.Text("text_b");
    p.decision_a = f.Text("decision_a");
    p.decision_b = f.Text("decision_b");
    return p;
  }
  throw ParseError(line, "type", "unknown record type '" + type + "'");
}

Json MapToJson(const FeatureValues& values) {
  Json out = Json::object();
  for (const auto& [k, v] : values) out[k] = v;
  return out;
}

struct Serializer {
  Json operator()(const StepResult& s) const {
    Json j;
    j["type"] = "step";
    j["step_index"] = s.step_index;
    j["step_name"] = s.step_name;
    j["confidence"] = s.confidence;
    if (s.ground_truth_correctness) {
      j["ground_truth_correctness"] = *s.ground_truth_correctness;
    }
    return j;
  }

  Json operator()(const ToolCallRecord& c) const {
    Json j;
    j["type"] = "tool_call";
    j["tool_name"] = c.tool_name;
    j["state"] = ToString(c.state);
    j["latency_ms"] = c.latency_ms;
    j["timestamp"] = c.timestamp;
    if (c.quality_signal) j["quality_signal"] = *c.quality_signal;
    return j;
  }

  Json operator()(const OutputEvent& e) const {
    Json j;
    j["type"] = "output";
    j["category"] = e.category;
    j["session_id"] = e.session_id;
    j["timestamp"] = e.timestamp;
    if (e.quality_signal) j["quality_signal"] = *e.quality_signal;
    return j;
  }

  Json operator()(const AttributionCase& a) const {
    Json j;
    j["type"] = "attribution";
    j["feature_names"] = a.feature_names;
    j["claimed_weights"] = a.claimed_weights;
    j["decision_value"] = a.decision_value;
    if (!a.feature_values.empty()) {
      j["feature_values"] = MapToJson(a.feature_values);
    }
    if (!a.baseline_values.empty()) {
      j["baseline_values"] = MapToJson(a.baseline_values);
    }
    if (a.probe) {
      Json probe;
      probe["weights"] = MapToJson(a.probe->weights);
      probe["intercept"] = a.probe->intercept;
      j["probe"] = std::move(probe);
    }
    return j;
  }

  Json operator()(const RequestPair& p) const {
    Json j;
    j["type"] = "request_pair";
    j["text_a"] = p.text_a;
    j["text_b"] = p.text_b;
    j["decision_a"] = p.decision_a;
    j["decision_b"] = p.decision_b;
    return j;
  }
};

}  // namespace

void ValidateRecord(const TraceRecord& record, std::size_t line_number) {
  std::visit(Validator{line_number}, record);
}

TraceRecord ParseTraceRecord(std::string_view line, std::size_t line_number) {
  Json doc;
  try {
    doc = Json::parse(line.begin(), line.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(line_number, "", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError(line_number, "", "record must be a JSON object");
  }
  Fields fields(doc, line_number);
  TraceRecord record =
      ParseFields(fields.Text("type"), fields, line_number);
  ValidateRecord(record, line_number);
  return record;
}

Json ToJson(const TraceRecord& record) {
  return std::visit(Serializer{}, record);
}

std::string SerializeTraceRecord(const TraceRecord& record) {
  return ToJson(record).dump();
}

ParsedTrace ParseTraceStream(std::istream& in) {
  ParsedTrace out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      out.records.push_back({number, ParseTraceRecord(line, number)});
    } catch (const RecordError& e) {
      out.diagnostics.push_back({number, e.what()});
    }
  }
  return out;
}

void WriteTrace(std::ostream& out, const std::vector<TraceRecord>& records) {
  for (const auto& r : records) out << SerializeTraceRecord(r) << '\n';
}

}  // namespace agenteval
