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

// mutforge: manage mutations inside a source tree.
//
//   mutforge init --repr comment --profile rust
//   mutforge list
//   mutforge set insert_1
//   mutforge test "insert + *easy" --expect-fail -- cargo test
//   mutforge convert --to inast
//   mutforge import mutants.json
//
// Exit codes: 0 ok, 1 a mutant survived under --expect-fail, 2 usage or
// parse error, 3 activation or restore error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mutforge/algebra.h"
#include "mutforge/convert.h"
#include "mutforge/errors.h"
#include "mutforge/importer.h"
#include "mutforge/match_replace.h"
#include "mutforge/preprocessor_repr.h"
#include "mutforge/project.h"
#include "mutforge/runner.h"
#include "mutforge/runtime.h"
#include "mutforge/text_util.h"
#include "mutforge/timing.h"

namespace fs = std::filesystem;

namespace mutforge {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitSurvivor = 1;
constexpr int kExitUsage = 2;
constexpr int kExitActivation = 3;

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kWrapFailure:
    case ErrorKind::kNotLineAligned:
    case ErrorKind::kFlagCollision:
    case ErrorKind::kContextMismatch:
    case ErrorKind::kAmbiguousState:
    case ErrorKind::kNoValidUnit:
    case ErrorKind::kNotNormalized:
    case ErrorKind::kSpawnError:
    case ErrorKind::kActivationError:
    case ErrorKind::kIoError:
      return kExitActivation;
    default:
      return kExitUsage;
  }
}

struct Options {
  std::string root = ".";

  std::string repr = "comment";
  std::string profile;
  std::string comment_begin;
  std::string comment_end;
  std::string marker;
  bool line_comments = false;
  std::vector<std::string> exclude;

  std::vector<std::string> mutants;
  std::string expression;
  std::vector<std::string> command;
  bool expect_fail = false;
  std::string report = ".mutforge/run.json";
  std::string target;
  std::string records;
  std::string timing;
};

// Preset first, then explicit pieces on top.
std::optional<SyntaxProfile> ProfileFrom(const Options& options) {
  std::optional<SyntaxProfile> profile;
  if (!options.profile.empty()) {
    profile = SyntaxProfile::Preset(options.profile);
    if (!profile) {
      std::string names;
      for (const auto& name : SyntaxProfile::PresetNames()) {
        names += " " + name;
      }
      Fail(ErrorKind::kUsageError,
           "unknown profile '" + options.profile + "'; known:" + names);
    }
  }
  if (!options.marker.empty() || !options.comment_begin.empty()) {
    if (!profile) {
      profile = SyntaxProfile{"", "", "|", CommentStyle::kBlock};
    }
    if (!options.comment_begin.empty()) {
      profile->comment_begin = options.comment_begin;
      profile->comment_end = options.comment_end;
      profile->style = options.line_comments ? CommentStyle::kLine : CommentStyle::kBlock;
    }
    if (!options.marker.empty()) {
      profile->mutation_marker = options.marker;
    }
  }
  if (profile) {
    profile->Validate();
  }
  return profile;
}

Representation ReprFrom(const std::string& name) {
  auto repr = ParseRepresentation(name);
  if (!repr) {
    Fail(ErrorKind::kUsageError, "unknown representation '" + name + "'");
  }
  return *repr;
}

int CmdInit(const Options& options) {
  ProjectState state;
  state.representation = ReprFrom(options.repr);
  state.exclude = options.exclude;
  if (auto profile = ProfileFrom(options)) {
    state.profile = *profile;
  } else if (state.representation == Representation::kComment) {
    Fail(ErrorKind::kUsageError, "--repr comment needs --profile or --marker");
  }
  Project project = Project::Init(options.root, state);
  std::printf("initialized %s project with %zu mutations\n",
              std::string(RepresentationName(state.representation)).c_str(),
              project.List().size());
  return kExitOk;
}

int CmdList(const Options& options) {
  Project project = Project::Open(options.root);
  for (const auto& block : project.List()) {
    std::printf("%s:%d  %s%s\n", block.path.c_str(), block.anchor,
                block.name.c_str(),
                block.tags.empty() ? "" : (" " + FormatTagList(block.tags)).c_str());
    for (const auto& variant : block.variants) {
      const bool on = block.active == variant.name;
      std::printf("  %c %s%s\n", on ? '*' : ' ', variant.name.c_str(),
                  variant.tags.empty()
                      ? ""
                      : (" " + FormatTagList(variant.tags)).c_str());
    }
  }
  return kExitOk;
}

int CmdSet(const Options& options) {
  Project project = Project::Open(options.root);
  for (const auto& mutant : options.mutants) {
    project.SetActive(mutant);
  }
  return kExitOk;
}

int CmdUnset(const Options& options) {
  Project project = Project::Open(options.root);
  for (const auto& mutant : options.mutants) {
    project.UnsetActive(mutant);
  }
  return kExitOk;
}

int CmdReset(const Options& options) {
  Project::Open(options.root).Reset();
  return kExitOk;
}

int CmdPlan(const Options& options) {
  Project project = Project::Open(options.root);
  const MutantPlan plan =
      EvaluateExpr(options.expression, MutantCatalog::FromDocuments(project.documents()));
  for (const auto& set : plan) {
    std::printf("%s\n", FormatActiveList(set).c_str());
  }
  return kExitOk;
}

int CmdDefines(const Options& options) {
  Project project = Project::Open(options.root);
  for (const auto& define : EmitDefines(project.documents())) {
    std::printf("-D%s\n", define.c_str());
  }
  return kExitOk;
}

int CmdTest(const Options& options) {
  Project project = Project::Open(options.root);
  const MutantPlan plan =
      EvaluateExpr(options.expression, MutantCatalog::FromDocuments(project.documents()));
  const RunReport report = RunPlan(&project, options.expression, plan, options.command);
  std::fputs(FormatRunTable(report).c_str(), stdout);
  fs::path report_path = options.report;
  if (report_path.is_relative()) {
    report_path = fs::path(options.root) / report_path;
  }
  WriteFileIfChanged(report_path, RenderRunReport(report));
  if (report.aborted()) {
    std::fprintf(stderr, "mutforge: %s: %s\n",
                 std::string(ErrorKindName(*report.abort_kind)).c_str(),
                 report.abort_reason.c_str());
    return ExitCodeFor(*report.abort_kind);
  }
  if (options.expect_fail) {
    const auto survivors = report.Survivors();
    for (const auto& set : survivors) {
      std::printf("survived: %s\n", FormatActiveList(set).c_str());
    }
    return survivors.empty() ? kExitOk : kExitSurvivor;
  }
  return kExitOk;
}

int CmdConvert(const Options& options) {
  Project project = Project::Open(options.root);
  ConvertProject(&project, ReprFrom(options.target), ProfileFrom(options));
  return kExitOk;
}

int CmdImport(const Options& options) {
  const std::vector<MutantRecord> records =
      ParseMutantRecords(ReadFile(options.records));
  if (!Project::Exists(options.root)) {
    ProjectState state;
    state.representation = Representation::kMatchReplace;
    state.exclude = options.exclude;
    Project::Init(options.root, state);
  }
  Project project = Project::Open(options.root);
  if (project.state().representation != Representation::kMatchReplace) {
    Fail(ErrorKind::kUsageError,
         "import needs a matchreplace project; run 'mutforge convert --to "
         "matchreplace' first");
  }
  const ProjectInput input = ReadProjectInput(project.root(), project.state());
  std::vector<MutationDocument> docs =
      ImportRecords(records, input.sources, project.documents());
  project.Replace(project.state(), std::move(docs));
  std::printf("imported %zu records\n", records.size());
  return kExitOk;
}

int CmdModel(const Options& options) {
  std::fputs(FormatTimingTable(ParseTimingModel(ReadFile(options.timing))).c_str(),
             stdout);
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"mutforge: mutation management across representations"};
  app.require_subcommand(1);
  Options options;
  app.add_option("--root", options.root, "project root")->capture_default_str();

  auto add_profile = [&](CLI::App* cmd) {
    cmd->add_option("--profile", options.profile, "comment syntax preset");
    cmd->add_option("--comment-begin", options.comment_begin);
    cmd->add_option("--comment-end", options.comment_end);
    cmd->add_option("--marker", options.marker, "mutation marker");
    cmd->add_flag("--line-comments", options.line_comments);
  };

  CLI::App* init = app.add_subcommand("init", "start managing a source tree");
  init->add_option("--repr", options.repr, "representation of the tree")
      ->capture_default_str();
  init->add_option("--exclude", options.exclude, "path prefixes to skip");
  add_profile(init);

  CLI::App* list = app.add_subcommand("list", "list mutations and variants");
  CLI::App* set = app.add_subcommand("set", "activate mutants");
  set->add_option("mutant", options.mutants)->required();
  CLI::App* unset = app.add_subcommand("unset", "deactivate mutants");
  unset->add_option("mutant", options.mutants)->required();
  CLI::App* reset = app.add_subcommand("reset", "deactivate everything");
  CLI::App* plan = app.add_subcommand("plan", "print the mutant sets of an expression");
  plan->add_option("expression", options.expression)->required();
  CLI::App* defines = app.add_subcommand("defines", "print -D flags for the active mutants");

  CLI::App* test = app.add_subcommand("test", "run a command for every mutant set");
  test->add_option("expression", options.expression)->required();
  test->add_option("command", options.command, "command after --")->required();
  test->add_flag("--expect-fail", options.expect_fail,
                 "exit 1 when a mutant set passes the command");
  test->add_option("--report", options.report, "run file")->capture_default_str();

  CLI::App* convert = app.add_subcommand("convert", "switch representation");
  convert->add_option("--to", options.target)->required();
  add_profile(convert);

  CLI::App* import = app.add_subcommand("import", "import mutant records");
  import->add_option("records", options.records)->required();
  import->add_option("--exclude", options.exclude, "path prefixes to skip");

  CLI::App* model = app.add_subcommand("model", "evaluate the compile-time model");
  model->add_option("timing", options.timing)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (init->parsed()) return CmdInit(options);
    if (list->parsed()) return CmdList(options);
    if (set->parsed()) return CmdSet(options);
    if (unset->parsed()) return CmdUnset(options);
    if (reset->parsed()) return CmdReset(options);
    if (plan->parsed()) return CmdPlan(options);
    if (defines->parsed()) return CmdDefines(options);
    if (test->parsed()) return CmdTest(options);
    if (convert->parsed()) return CmdConvert(options);
    if (import->parsed()) return CmdImport(options);
    if (model->parsed()) return CmdModel(options);
  } catch (const Error& e) {
    std::fprintf(stderr, "mutforge: %s: %s\n",
                 std::string(ErrorKindName(e.kind())).c_str(), e.what());
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "mutforge: %s\n", e.what());
    return kExitActivation;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace mutforge

int main(int argc, char** argv) { return mutforge::Main(argc, argv); }
