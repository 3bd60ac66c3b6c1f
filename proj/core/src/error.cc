// Copyright 2026 The subgrad Authors
//
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

#include "subgrad/error.h"

namespace subgrad {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyGraph:
      return "EmptyGraph";
    case ErrorCode::kMalformedLine:
      return "MalformedLine";
    case ErrorCode::kDuplicateEdge:
      return "DuplicateEdge";
    case ErrorCode::kDuplicateNodeDeclaration:
      return "DuplicateNodeDeclaration";
    case ErrorCode::kInvalidNodeId:
      return "InvalidNodeId";
    case ErrorCode::kUnknownNode:
      return "UnknownNode";
    case ErrorCode::kOrderMismatch:
      return "OrderMismatch";
    case ErrorCode::kNonSquare:
      return "NonSquare";
    case ErrorCode::kNonBinaryCell:
      return "NonBinaryCell";
    case ErrorCode::kInvalidQuery:
      return "InvalidQuery";
    case ErrorCode::kUnknownStarter:
      return "UnknownStarter";
    case ErrorCode::kInvalidStarter:
      return "InvalidStarter";
    case ErrorCode::kUnknownAnchor:
      return "UnknownAnchor";
    case ErrorCode::kSizeLimit:
      return "SizeLimit";
    case ErrorCode::kIo:
      return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> line)
    : std::runtime_error(message), code_(code), line_(line) {}

}  // namespace subgrad
