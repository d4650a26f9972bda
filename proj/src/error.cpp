// Copyright 2026 The edge-drs Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edrs/error.hpp"

namespace edrs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kEmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorCode::kEdgeNotInGraph: return "EdgeNotInGraph";
    case ErrorCode::kParameterTooSmall: return "ParameterTooSmall";
    case ErrorCode::kParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kEmptyLandmarks: return "EmptyLandmarks";
    case ErrorCode::kLandmarksTooSmall: return "LandmarksTooSmall";
    case ErrorCode::kDuplicateLandmark: return "DuplicateLandmark";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kInvalidLabel: return "InvalidLabel";
    case ErrorCode::kUnsupportedParameter: return "UnsupportedParameter";
    case ErrorCode::kInvalidFormat: return "InvalidFormat";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace edrs
