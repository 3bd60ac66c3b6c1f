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

// Subcommands of the `subgrad` tool. Each returns its exit status and the
// complete stdout/stderr text; nothing is written until enumeration has
// finished.
//
// Exit status: 0 detected (verify: all comparisons pass), 1 not detected
// (verify: mismatch), 2 input or usage error.

#ifndef SUBGRAD_TOOLS_CLI_COMMANDS_H_
#define SUBGRAD_TOOLS_CLI_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "subgrad/matcher.h"

namespace subgrad::cli {

inline constexpr int kExitDetected = 0;
inline constexpr int kExitNotDetected = 1;
inline constexpr int kExitError = 2;

enum class OutputFormat { kText, kJson, kDot };

struct CliConfig {
  std::optional<std::filesystem::path> query_path;
  std::optional<std::filesystem::path> source_path;
  MatchMode mode = MatchMode::kInjective;
  std::optional<std::string> starter;
  OutputFormat format = OutputFormat::kText;
  bool dedup = false;
  std::size_t jobs = 1;
  std::optional<std::uint64_t> seed;
  std::size_t instances = 100;  // verify self-test only
};

std::size_t DefaultJobs();

struct CommandResult {
  int exit_code = kExitError;
  std::string out;
  std::string err;
};

CommandResult RunMatch(const CliConfig& config);
CommandResult RunTable(const CliConfig& config);
CommandResult RunVerify(const CliConfig& config);
CommandResult RunDot(const CliConfig& config);

// Parses argv (CLI11), dispatches, and writes the result streams.
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

}  // namespace subgrad::cli

#endif  // SUBGRAD_TOOLS_CLI_COMMANDS_H_
