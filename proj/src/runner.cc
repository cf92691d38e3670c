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

#include "mutforge/runner.h"

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "mutforge/preprocessor_repr.h"
#include "mutforge/runtime.h"
#include "mutforge/text_util.h"

extern char** environ;

namespace mutforge {
namespace {

using Json = nlohmann::ordered_json;

std::string JoinDefines(const MutantSet& set) {
  std::string out;
  for (const auto& name : set) {
    if (!out.empty()) {
      out += ' ';
    }
    out += "-D" + FlagForVariant(name);
  }
  return out;
}

std::string ReplaceAll(std::string text, const std::string& from,
                       const std::string& to) {
  for (std::size_t pos = text.find(from); pos != std::string::npos;
       pos = text.find(from, pos + to.size())) {
    text.replace(pos, from.size(), to);
  }
  return text;
}

RunStatus StatusFromName(const std::string& name) {
  for (RunStatus status : {RunStatus::kPassed, RunStatus::kFailed,
                           RunStatus::kCrashed, RunStatus::kSpawnError}) {
    if (RunStatusName(status) == name) {
      return status;
    }
  }
  Fail(ErrorKind::kParseError, "unknown run status '" + name + "'");
}

}  // namespace

std::string_view RunStatusName(RunStatus status) {
  switch (status) {
    case RunStatus::kPassed:
      return "passed";
    case RunStatus::kFailed:
      return "failed";
    case RunStatus::kCrashed:
      return "crashed";
    case RunStatus::kSpawnError:
      return "spawn_error";
  }
  return "?";
}

ProcessOutcome RunProcess(const std::vector<std::string>& argv,
                          const std::filesystem::path& cwd,
                          const std::string& env_name,
                          const std::string& env_value) {
  ProcessOutcome outcome;
  if (argv.empty()) {
    outcome.status = RunStatus::kSpawnError;
    outcome.error = "empty command";
    return outcome;
  }
  // Everything the child needs is built before fork.
  std::vector<char*> args;
  for (const auto& arg : argv) {
    args.push_back(const_cast<char*>(arg.c_str()));
  }
  args.push_back(nullptr);
  const std::string assignment = env_name + "=" + env_value;
  const std::string prefix = env_name + "=";
  std::vector<char*> env;
  for (char** e = environ; *e; ++e) {
    if (std::strncmp(*e, prefix.c_str(), prefix.size()) != 0) {
      env.push_back(*e);
    }
  }
  env.push_back(const_cast<char*>(assignment.c_str()));
  env.push_back(nullptr);
  const std::string dir = cwd.string();

  int fds[2];
  if (pipe2(fds, O_CLOEXEC) != 0) {
    outcome.status = RunStatus::kSpawnError;
    outcome.error = std::string("pipe: ") + std::strerror(errno);
    return outcome;
  }
  std::fflush(nullptr);
  const auto start = std::chrono::steady_clock::now();
  const pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    outcome.status = RunStatus::kSpawnError;
    outcome.error = std::string("fork: ") + std::strerror(errno);
    return outcome;
  }
  if (pid == 0) {
    close(fds[0]);
    if (chdir(dir.c_str()) == 0) {
      execvpe(args[0], args.data(), env.data());
    }
    const int err = errno;
    [[maybe_unused]] ssize_t n = write(fds[1], &err, sizeof err);
    _exit(127);
  }
  close(fds[1]);
  int child_errno = 0;
  ssize_t got;
  do {
    got = read(fds[0], &child_errno, sizeof child_errno);
  } while (got < 0 && errno == EINTR);
  close(fds[0]);

  int wstatus = 0;
  while (waitpid(pid, &wstatus, 0) < 0 && errno == EINTR) {
  }
  outcome.duration_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (got == static_cast<ssize_t>(sizeof child_errno)) {
    outcome.status = RunStatus::kSpawnError;
    outcome.exit_code = 127;
    outcome.error = "cannot run '" + argv[0] + "': " + std::strerror(child_errno);
  } else if (WIFSIGNALED(wstatus)) {
    outcome.status = RunStatus::kCrashed;
    outcome.exit_code = WTERMSIG(wstatus);
  } else {
    outcome.exit_code = WEXITSTATUS(wstatus);
    outcome.status = outcome.exit_code == 0 ? RunStatus::kPassed : RunStatus::kFailed;
  }
  return outcome;
}

std::vector<std::string> ExpandCommand(const std::vector<std::string>& command,
                                       const MutantSet& set) {
  const std::string active = FormatActiveList(set);
  const std::string defines = JoinDefines(set);
  std::vector<std::string> out;
  for (const auto& arg : command) {
    if (arg == "{defines}") {
      for (const auto& name : set) {
        out.push_back("-D" + FlagForVariant(name));
      }
      continue;
    }
    out.push_back(ReplaceAll(ReplaceAll(arg, "{active}", active), "{defines}", defines));
  }
  return out;
}

std::vector<MutantSet> RunReport::Survivors() const {
  std::vector<MutantSet> out;
  for (const auto& result : results) {
    if (result.status == RunStatus::kPassed) {
      out.push_back(result.set);
    }
  }
  return out;
}

RunReport RunPlan(Project* project, const std::string& expression,
                  const MutantPlan& plan, const std::vector<std::string>& command) {
  RunReport report;
  report.expression = expression;
  report.command = command;
  report.plan = plan;
  auto abort = [&](std::size_t index, ErrorKind kind, const std::string& why) {
    report.abort_index = index;
    report.abort_kind = kind;
    report.abort_reason = why;
  };
  try {
    for (std::size_t i = 0; i < plan.size(); ++i) {
      const MutantSet& set = plan[i];
      project->Activate(set);
      RunResult result;
      result.set = set;
      result.command = ExpandCommand(command, set);
      const ProcessOutcome outcome =
          RunProcess(result.command, project->root(), kActiveEnvVar,
                     FormatActiveList(set));
      result.status = outcome.status;
      result.exit_code = outcome.exit_code;
      result.duration_s = outcome.duration_s;
      report.results.push_back(std::move(result));
      if (outcome.status == RunStatus::kSpawnError) {
        abort(i, ErrorKind::kSpawnError, outcome.error);
        break;
      }
    }
  } catch (const Error& error) {
    abort(report.results.size(), error.kind(), error.what());
  }
  project->Reset();
  return report;
}

std::string RenderRunReport(const RunReport& report) {
  Json root;
  root["expression"] = report.expression;
  root["command"] = report.command;
  root["plan"] = report.plan;
  root["aborted"] = report.aborted();
  if (report.aborted()) {
    root["abort_index"] = *report.abort_index;
    root["abort_reason"] = report.abort_reason;
  }
  Json results = Json::array();
  for (const auto& result : report.results) {
    Json entry;
    entry["set"] = result.set;
    entry["status"] = std::string(RunStatusName(result.status));
    entry["exit_code"] = result.exit_code;
    entry["duration_s"] = result.duration_s;
    entry["command"] = result.command;
    results.push_back(std::move(entry));
  }
  root["results"] = std::move(results);
  return root.dump(2) + "\n";
}

RunReport ParseRunReport(std::string_view json_text) {
  RunReport report;
  try {
    const Json root = Json::parse(json_text);
    report.expression = root.at("expression").get<std::string>();
    report.command = root.at("command").get<std::vector<std::string>>();
    report.plan = root.at("plan").get<MutantPlan>();
    if (root.at("aborted").get<bool>()) {
      report.abort_index = root.at("abort_index").get<std::size_t>();
      report.abort_reason = root.at("abort_reason").get<std::string>();
    }
    for (const auto& entry : root.at("results")) {
      RunResult result;
      result.set = entry.at("set").get<MutantSet>();
      result.status = StatusFromName(entry.at("status").get<std::string>());
      result.exit_code = entry.at("exit_code").get<int>();
      result.duration_s = entry.at("duration_s").get<double>();
      result.command = entry.at("command").get<std::vector<std::string>>();
      report.results.push_back(std::move(result));
    }
  } catch (const Json::exception& e) {
    Fail(ErrorKind::kParseError, std::string("run file: ") + e.what());
  }
  return report;
}

std::string FormatRunTable(const RunReport& report) {
  std::size_t width = 3;
  std::vector<std::string> labels;
  for (const auto& result : report.results) {
    labels.push_back(result.set.empty() ? "(base)" : FormatActiveList(result.set));
    width = std::max(width, labels.back().size());
  }
  std::ostringstream out;
  auto pad = [](std::string text, std::size_t n) {
    text.resize(std::max(n, text.size()), ' ');
    return text;
  };
  out << pad("set", width) << "  " << pad("status", 11) << "  exit  time(s)\n";
  for (std::size_t i = 0; i < report.results.size(); ++i) {
    const RunResult& result = report.results[i];
    char time[32];
    std::snprintf(time, sizeof time, "%7.2f", result.duration_s);
    char code[16];
    std::snprintf(code, sizeof code, "%4d", result.exit_code);
    out << pad(labels[i], width) << "  "
        << pad(std::string(RunStatusName(result.status)), 11) << "  " << code << "  "
        << time << "\n";
  }
  if (report.aborted()) {
    out << "aborted at set " << *report.abort_index + 1 << " of "
        << report.plan.size() << ": " << report.abort_reason << "\n";
  }
  return out.str();
}

}  // namespace mutforge
