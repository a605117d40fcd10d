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

#include "agenteval/types.h"

namespace agenteval {

std::string_view ToString(ToolCallState state) {
  switch (state) {
    case ToolCallState::kSuccess:
      return "SUCCESS";
    case ToolCallState::kPartial:
      return "PARTIAL";
    case ToolCallState::kFailed:
      return "FAILED";
  }
  return "SUCCESS";
}

std::optional<ToolCallState> ToolCallStateFromString(std::string_view name) {
  if (name == "SUCCESS") return ToolCallState::kSuccess;
  if (name == "PARTIAL") return ToolCallState::kPartial;
  if (name == "FAILED") return ToolCallState::kFailed;
  return std::nullopt;
}

std::string_view ToString(Dimension dimension) {
  switch (dimension) {
    case Dimension::kCascade:
      return "cascade";
    case Dimension::kTool:
      return "tool";
    case Dimension::kDistribution:
      return "distribution";
    case Dimension::kExplanation:
      return "explanation";
    case Dimension::kConsistency:
      return "consistency";
  }
  return "cascade";
}

std::optional<Dimension> DimensionFromString(std::string_view name) {
  for (Dimension d : kAllDimensions) {
    if (ToString(d) == name) return d;
  }
  return std::nullopt;
}

}  // namespace agenteval
