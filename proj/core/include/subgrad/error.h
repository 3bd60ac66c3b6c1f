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

#ifndef SUBGRAD_ERROR_H_
#define SUBGRAD_ERROR_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace subgrad {

enum class ErrorCode {
  kEmptyGraph,
  kMalformedLine,
  kDuplicateEdge,
  kDuplicateNodeDeclaration,
  kInvalidNodeId,
  kUnknownNode,
  kOrderMismatch,
  kNonSquare,
  kNonBinaryCell,
  kInvalidQuery,
  kUnknownStarter,
  kInvalidStarter,
  kUnknownAnchor,
  kSizeLimit,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. `line()` is set for errors that
// originate from a specific line of edge-list input (1-based).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> line() const { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace subgrad

#endif  // SUBGRAD_ERROR_H_
