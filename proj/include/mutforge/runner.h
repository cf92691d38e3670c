// Copyright 2026 The Mutforge Project Authors
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

// Runs a command once per mutant set of a plan. Sets run one after the
// other: the working tree is shared. Before each run the project is reset
// and the set activated; after the last run (or any failure) it is reset
// again.
//
// The command sees MUTFORGE_ACTIVE=<comma list> in its environment and has
// two substitutions applied to each argument:
//   {active}   the comma list
//   {defines}  the preprocessor flags, "-DM_A -DM_B"; an argument that is
//              exactly "{defines}" expands to one argument per flag
//
// The run file (JSON):
//   {"expression": "insert + *easy", "command": ["make", "test"],
//    "plan": [["insert_1"], ...], "aborted": false,
//    "results": [{"set": ["insert_1"], "status": "failed", "exit_code": 2,
//                 "duration_s": 0.41, "command": ["make", "test"]}, ...]}
// status is one of passed, failed, crashed (killed by a signal) or
// spawn_error. An aborted run carries "abort_index" and "abort_reason".

#ifndef MUTFORGE_RUNNER_H_
#define MUTFORGE_RUNNER_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mutforge/algebra.h"
#include "mutforge/errors.h"
#include "mutforge/project.h"

namespace mutforge {

enum class RunStatus { kPassed, kFailed, kCrashed, kSpawnError };

std::string_view RunStatusName(RunStatus status);

struct ProcessOutcome {
  RunStatus status = RunStatus::kPassed;
  int exit_code = 0;  // signal number when crashed
  double duration_s = 0;
  std::string error;  // spawn failure reason
};

// Runs |argv| in |cwd| with |env_name|=|env_value| added to the environment
// and waits for it.
ProcessOutcome RunProcess(const std::vector<std::string>& argv,
                          const std::filesystem::path& cwd,
                          const std::string& env_name,
                          const std::string& env_value);

std::vector<std::string> ExpandCommand(const std::vector<std::string>& command,
                                       const MutantSet& set);

struct RunResult {
  MutantSet set;
  RunStatus status = RunStatus::kPassed;
  int exit_code = 0;
  double duration_s = 0;
  std::vector<std::string> command;
};

struct RunReport {
  std::string expression;
  std::vector<std::string> command;
  MutantPlan plan;
  std::vector<RunResult> results;
  std::optional<std::size_t> abort_index;
  std::string abort_reason;
  // Kind of the error that aborted the run.
  std::optional<ErrorKind> abort_kind;

  bool aborted() const { return abort_index.has_value(); }
  // Sets whose command exited 0.
  std::vector<MutantSet> Survivors() const;
};

// Runs |command| for every set of |plan|. Activation errors and spawn
// failures stop the run and are recorded in the report; the project is
// reset in every case. Errors from the final reset propagate.
RunReport RunPlan(Project* project, const std::string& expression,
                  const MutantPlan& plan, const std::vector<std::string>& command);

std::string RenderRunReport(const RunReport& report);
RunReport ParseRunReport(std::string_view json_text);

// Fixed-width table, one row per result.
std::string FormatRunTable(const RunReport& report);

}  // namespace mutforge

#endif  // MUTFORGE_RUNNER_H_
