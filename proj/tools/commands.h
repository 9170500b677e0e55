// Copyright 2026 The lppgame Authors
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

#ifndef LPPGAME_TOOLS_COMMANDS_H_
#define LPPGAME_TOOLS_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace lppgame::cli {

enum ExitCode : int { kSuccess = 0, kDomainFailure = 1, kUsageFailure = 2 };

struct GlobalOptions {
  std::optional<std::string> output;
  int jobs = 1;
  double tolerance_scale = 1.0;
};

struct CommandResult {
  int exit_code = kSuccess;
  std::string report;
  // Set only when --output was given.
  std::optional<nlohmann::json> document;
};

CommandResult Validate(const std::string& instance_path, const GlobalOptions& options);
CommandResult Demands(const std::string& instance_path, const std::string& partition_spec,
                      const GlobalOptions& options);
CommandResult Analyze(const std::string& instance_path, const std::string& partition_spec,
                      int samples, std::uint64_t seed, const GlobalOptions& options);
CommandResult Classify(const std::string& instance_path, const std::string& partition_spec,
                       const std::string& profile, const GlobalOptions& options);
CommandResult Verify(const std::string& instance_path, const std::string& partition_spec,
                     double delta, const GlobalOptions& options);
CommandResult Generate(const std::string& config_path, std::uint64_t seed,
                       const std::optional<std::string>& out_path,
                       const GlobalOptions& options);

// Parses the command line, runs one command, prints its report to `out`
// (errors to `err`), writes the machine report when asked and returns the
// exit code.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lppgame::cli

#endif  // LPPGAME_TOOLS_COMMANDS_H_
