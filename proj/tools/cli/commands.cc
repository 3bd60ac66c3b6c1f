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

#include "cli/commands.h"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <thread>
#include <utility>

#include "CLI11.hpp"
#include "cli/report.h"
#include "nlohmann/json.hpp"
#include "subgrad/error.h"
#include "subgrad/graph.h"
#include "subgrad/model_set.h"
#include "subgrad/oracle.h"

namespace subgrad::cli {
namespace {

struct Inputs {
  DirectedGraph query;
  DirectedGraph source;
  ModelSet model_set;
};

CommandResult Failure(const std::string& message) {
  return {kExitError, "", "subgrad: " + message + "\n"};
}

// Loads both graphs and builds the model set; throws Error with a message
// naming the offending file.
Inputs Load(const CliConfig& config) {
  if (!config.query_path || !config.source_path) {
    throw Error(ErrorCode::kIo, "both --query and --source are required");
  }
  Inputs inputs{ReadEdgeListFile(*config.query_path),
                ReadEdgeListFile(*config.source_path),
                ModelSet{NodeId("_"), {}, QueryShape::kGeneral, {}}};
  try {
    RequireValidQuery(inputs.query);
    std::optional<NodeId> starter;
    if (config.starter) starter = NodeId(*config.starter);
    inputs.model_set = BuildModelSet(inputs.query, starter);
  } catch (const Error& e) {
    throw Error(e.code(), config.query_path->string() + ": " + e.what());
  }
  return inputs;
}

int DetectionStatus(const ReferenceTable& table) {
  return table.detected() ? kExitDetected : kExitNotDetected;
}

CommandResult RenderAs(const CliConfig& config, const Inputs& inputs,
                       const ReferenceTable& table,
                       const std::function<std::string()>& text) {
  CommandResult result{DetectionStatus(table), "", ""};
  switch (config.format) {
    case OutputFormat::kText:
      result.out = text();
      break;
    case OutputFormat::kJson:
      result.out = RenderJson(table, config.query_path->string(),
                              config.source_path->string());
      break;
    case OutputFormat::kDot:
      result.out = RenderDot(inputs.source, table);
      break;
  }
  return result;
}

template <typename Body>
CommandResult Guarded(Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return Failure(e.what());
  } catch (const std::exception& e) {
    return Failure(std::string("unexpected failure: ") + e.what());
  }
}

CommandResult VerifyPair(const CliConfig& config) {
  const DirectedGraph query = ReadEdgeListFile(*config.query_path);
  const DirectedGraph source = ReadEdgeListFile(*config.source_path);
  OracleComparison report;
  try {
    report = CompareMatcherOracle(query, source);
  } catch (const Error& e) {
    const auto& path = e.code() == ErrorCode::kSizeLimit ? *config.source_path
                                                         : *config.query_path;
    throw Error(e.code(), path.string() + ": " + e.what());
  }
  CommandResult result;
  const std::string counts = std::to_string(report.matcher_match_count) +
                             (report.passed() ? " = " : " != ") +
                             std::to_string(report.oracle.size());
  if (report.passed()) {
    result.exit_code = kExitDetected;
    result.out = "PASS " + counts + "\n";
    return result;
  }
  result.exit_code = kExitNotDetected;
  result.out = "FAIL " + counts + "\n";
  for (const auto& m : report.only_matcher) {
    result.out += "  only matcher: " + FormatMapping(m) + "\n";
  }
  for (const auto& m : report.only_oracle) {
    result.out += "  only oracle:  " + FormatMapping(m) + "\n";
  }
  return result;
}

CommandResult VerifyRandom(const CliConfig& config) {
  std::mt19937_64 seeds(*config.seed);
  std::size_t passed = 0;
  std::string failures;
  for (std::size_t i = 0; i < config.instances; ++i) {
    const std::uint64_t instance_seed = seeds();
    const OracleInstance instance = RandomOracleInstance(instance_seed);
    const OracleComparison report =
        CompareMatcherOracle(instance.query, instance.source);
    if (report.passed()) {
      ++passed;
      continue;
    }
    failures += "  instance " + std::to_string(i) + " (seed " +
                std::to_string(instance_seed) + "): matcher " +
                std::to_string(report.matcher_match_count) + ", oracle " +
                std::to_string(report.oracle.size()) + "\n";
  }
  CommandResult result;
  const std::string tally =
      std::to_string(passed) + "/" + std::to_string(config.instances);
  if (passed == config.instances) {
    result.exit_code = kExitDetected;
    result.out = "PASS " + tally + "\n";
  } else {
    result.exit_code = kExitNotDetected;
    result.out = "FAIL " + tally + "\n" + failures;
  }
  return result;
}

}  // namespace

std::size_t DefaultJobs() {
  return std::max(1u, std::thread::hardware_concurrency());
}

CommandResult RunMatch(const CliConfig& config) {
  return Guarded([&] {
    const Inputs inputs = Load(config);
    const ReferenceTable table = EnumerateMatches(
        inputs.source, inputs.model_set, config.mode, config.jobs);
    return RenderAs(config, inputs, table,
                    [&] { return RenderMatchText(table); });
  });
}

CommandResult RunTable(const CliConfig& config) {
  return Guarded([&] {
    const Inputs inputs = Load(config);
    const ReferenceTable table = EnumerateMatches(
        inputs.source, inputs.model_set, config.mode, config.jobs);
    return RenderAs(config, inputs, table,
                    [&] { return RenderTableText(table, config.dedup); });
  });
}

CommandResult RunDot(const CliConfig& config) {
  return Guarded([&] {
    const Inputs inputs = Load(config);
    const ReferenceTable table = EnumerateMatches(
        inputs.source, inputs.model_set, config.mode, config.jobs);
    return CommandResult{DetectionStatus(table),
                         RenderDot(inputs.source, table), ""};
  });
}

CommandResult RunVerify(const CliConfig& config) {
  return Guarded([&] {
    if (config.query_path && config.source_path) return VerifyPair(config);
    if (!config.query_path && !config.source_path && config.seed) {
      return VerifyRandom(config);
    }
    return Failure(
        "verify needs --query and --source, or --seed for the random "
        "self-test");
  });
}

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Directed subgraph detection by model-set / reference-set "
               "enumeration"};
  app.name("subgrad");
  app.require_subcommand(1);

  CliConfig config;
  config.jobs = DefaultJobs();
  std::string mode = "injective";
  std::string format = "text";

  const std::map<std::string, MatchMode> modes = {
      {"injective", MatchMode::kInjective},
      {"homomorphic", MatchMode::kHomomorphic}};
  const std::map<std::string, OutputFormat> formats = {
      {"text", OutputFormat::kText},
      {"json", OutputFormat::kJson},
      {"dot", OutputFormat::kDot}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--query", config.query_path, "Query graph edge-list file");
    sub->add_option("--source", config.source_path,
                    "Source graph edge-list file");
    sub->add_option("--mode", mode, "injective | homomorphic")
        ->check(CLI::IsMember({"injective", "homomorphic"}));
    sub->add_option("--starter", config.starter, "Starter node of the query");
    sub->add_option("--format", format, "text | json | dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_flag("--dedup", config.dedup,
                  "Annotate rotated duplicates of cycle matches");
    sub->add_option("--jobs", config.jobs, "Worker threads")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "Seed for the verify self-test");
  };

  auto* match = app.add_subcommand("match", "List every match");
  auto* table = app.add_subcommand("table", "Per-source-node reference table");
  auto* verify = app.add_subcommand("verify", "Cross-check against the oracle");
  auto* dot = app.add_subcommand("dot", "Source graph as dot, matches highlighted");
  for (auto* sub : {match, table, verify, dot}) add_common(sub);
  verify->add_option("--instances", config.instances,
                     "Random instances for the self-test")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "subgrad: " << e.what() << "\n" << app.help();
    return kExitError;
  }
  config.mode = modes.at(mode);
  config.format = formats.at(format);

  CommandResult result;
  if (*match) {
    result = RunMatch(config);
  } else if (*table) {
    result = RunTable(config);
  } else if (*verify) {
    result = RunVerify(config);
  } else {
    result = RunDot(config);
  }
  out << result.out;
  err << result.err;
  return result.exit_code;
}

}  // namespace subgrad::cli
