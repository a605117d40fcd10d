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

#ifndef AGENTEVAL_ERRORS_H_
#define AGENTEVAL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace agenteval {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A statistic was requested over data for which it is not defined
// (empty window, zero-norm vector, mismatched series lengths).
class UndefinedStatistic : public Error {
 public:
  using Error::Error;
};

// A value violates a domain invariant (confidence outside [0,1], ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Too few pipeline steps to evaluate cascade behaviour.
class InsufficientTrace : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// A probe or embedding provider failed while a metric was being computed.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// A trace line could not be turned into a record. `line` is 1-based, or 0
// when the record was parsed outside of a stream.
class RecordError : public Error {
 public:
  RecordError(std::size_t line, std::string field, const std::string& message)
      : Error(Format(line, field, message)),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  static std::string Format(std::size_t line, const std::string& field,
                            const std::string& message) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!field.empty()) out += "field '" + field + "': ";
    return out + message;
  }

  std::size_t line_;
  std::string field_;
};

// Malformed syntax or a missing / mistyped field.
class ParseError : public RecordError {
 public:
  using RecordError::RecordError;
};

// Well-formed record whose values break a type invariant.
class RecordValidationError : public RecordError {
 public:
  using RecordError::RecordError;
};

}  // namespace agenteval

#endif  // AGENTEVAL_ERRORS_H_
