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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mutforge/algebra.h"
#include "mutforge/comment_repr.h"
#include "mutforge/convert.h"
#include "mutforge/errors.h"
#include "mutforge/importer.h"
#include "mutforge/inast_repr.h"
#include "mutforge/match_replace.h"
#include "mutforge/patch_bundle.h"
#include "mutforge/preprocessor_repr.h"
#include "mutforge/project.h"
#include "mutforge/runner.h"
#include "mutforge/rust_lite_oracle.h"
#include "mutforge/text_util.h"
#include "mutforge/timing.h"
#include "test_support.h"

namespace mutforge {
namespace {

namespace fs = std::filesystem;
using testing::Rng;
using testing::TempDir;

// Thrown by Check; carries the first failure of a criterion.
struct CheckFailure {
  std::string message;
};

void Check(bool ok, const std::string& message) {
  if (!ok) {
    throw CheckFailure{message};
  }
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

constexpr Representation kTextual[] = {Representation::kComment, Representation::kPreprocessor,
                                       Representation::kPatch, Representation::kMatchReplace};

const char* const kProfiles[] = {"rust", "haskell", "ocaml", "racket", "python"};

ProjectState StateFor(Representation representation, const std::string& profile = "rust") {
  ProjectState state;
  state.representation = representation;
  state.profile = *SyntaxProfile::Preset(profile);
  return state;
}

// Splits rendered files into what a representation reads back.
ProjectInput InputOf(const RenderedProject& rendered) {
  ProjectInput input;
  for (const auto& [path, text] : rendered.files) {
    bool artifact = false;
    for (const auto& prefix : rendered.owned_prefixes) {
      artifact = artifact || path.rfind(prefix, 0) == 0;
    }
    (artifact ? input.artifacts : input.sources)[path] = text;
  }
  return input;
}

// Renders |docs|, parses the result and renders again.
void CheckRoundTrip(ProjectState state, const std::vector<MutationDocument>& docs,
                    const std::string& what) {
  state.active = ActiveVariants(docs);
  const RenderedProject rendered = RenderDocuments(state, docs);
  const auto parsed = LoadDocuments(state, InputOf(rendered));
  Check(parsed == docs, what + ": parse(render(d)) != d\n" + testing::Structure(parsed) +
                            "vs\n" + testing::Structure(docs));
  Check(RenderDocuments(state, parsed).files == rendered.files,
        what + ": render(parse(t)) != t");
}

Project Materialize(const fs::path& root, Representation representation,
                    std::vector<MutationDocument> docs) {
  Project project = Project::Init(root, StateFor(representation));
  project.Replace(project.state(), std::move(docs));
  return project;
}

std::string Squash(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n') {
      out += c;
    }
  }
  return out;
}

std::string Criterion1() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(1001);
  int projects = 0;
  std::size_t blocks = 0;
  for (Representation r : kTextual) {
    for (int i = 0; i < 200; ++i) {
      testing::NameSource names;
      testing::DocOptions options;
      options.max_blocks = 2;  // at most 3 files, so at most 6 blocks
      options.sub_line = r == Representation::kMatchReplace && i % 2 == 1;
      const auto docs = testing::RandomProject(rng, names, options);
      CheckRoundTrip(StateFor(r, kProfiles[i % 5]), docs,
                     std::string(RepresentationName(r)) + " project " + std::to_string(i));
      ++projects;
      blocks += ListBlocks(docs).size();
    }
  }

  // Golden fixtures that are already canonical come back byte for byte.
  const SyntaxProfile rust = *SyntaxProfile::Preset("rust");
  const std::string insert_rs = testing::ReadFixture("comment_rust/insert.rs");
  Check(RenderComment(ParseComment(insert_rs, rust, "insert.rs"), rust) == insert_rs,
        "comment fixture is not byte-stable");
  const std::string insert_c = testing::ReadFixture("preprocessor/insert.c");
  Check(RenderPreprocessor(ParsePreprocessor(insert_c, "insert.c")) == insert_c,
        "preprocessor fixture is not byte-stable");
  const FileMap patch_sources = {{"calc.rs", testing::ReadFixture("patch/calc.rs")}};
  const FileMap patches = {
      {"add/manifest.json", testing::ReadFixture("patch/patches/add/manifest.json")},
      {"add/add_1.diff", testing::ReadFixture("patch/patches/add/add_1.diff")}};
  const PatchBundleFiles bundle = RenderPatchBundle(ParsePatchBundle(patch_sources, patches));
  Check(bundle.sources == patch_sources && bundle.patches == patches,
        "patch fixture is not byte-stable");

  // Legacy-form fixtures canonicalize once; the canonical text is stable
  // and parses to the same model.
  const SyntaxProfile haskell = *SyntaxProfile::Preset("haskell");
  const MutationDocument bst =
      ParseComment(testing::ReadFixture("etna_haskell/BST.hs"), haskell, "BST.hs");
  const std::string bst_canonical = RenderComment(bst, haskell);
  Check(ParseComment(bst_canonical, haskell, "BST.hs") == bst &&
            RenderComment(ParseComment(bst_canonical, haskell, "BST.hs"), haskell) ==
                bst_canonical,
        "legacy comment fixture does not reach a fixed point");
  const FileMap mr_sources = {{"calc.rs", testing::ReadFixture("matchreplace/calc.rs")}};
  const auto mr = ParseMatchReplace(testing::ReadFixture("matchreplace/mutations.json"),
                                    mr_sources);
  const MatchReplaceFiles mr_files = RenderMatchReplace(mr);
  Check(ParseMatchReplace(mr_files.sidecar, mr_files.sources) == mr &&
            RenderMatchReplace(ParseMatchReplace(mr_files.sidecar, mr_files.sources)).sidecar ==
                mr_files.sidecar,
        "match-and-replace fixture does not reach a fixed point");

  const double seconds = Seconds(start);
  Check(seconds < 30, "took " + std::to_string(seconds) + " s (limit 30 s)");
  std::ostringstream out;
  out << projects << " random projects (" << blocks << " blocks), 5 fixtures, " << seconds << " s";
  return out.str();
}

std::string Criterion2() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(2002);
  int conversions = 0;
  for (int i = 0; i < 100; ++i) {
    testing::NameSource names;
    const auto docs = testing::RandomProject(rng, names, {});
    for (Representation a : kTextual) {
      for (Representation b : kTextual) {
        if (a == b) {
          continue;
        }
        TempDir dir;
        Project project = Materialize(dir.path(), a, docs);
        ConvertProject(&project, b, std::nullopt);
        ConvertProject(&project, a, std::nullopt);
        Check(Project::Open(dir.path()).documents() == docs,
              "project " + std::to_string(i) + ": " + std::string(RepresentationName(a)) +
                  " -> " + std::string(RepresentationName(b)) + " -> back changed the model");
        conversions += 2;
      }
    }
  }

  // comment -> inast -> comment on random Rust programs.
  const RustLiteOracle oracle;
  int texts = 0;
  for (int i = 0; i < 100; ++i) {
    testing::NameSource names;
    const auto original = ConvertDocuments(
        {testing::RandomRustDocument(rng, "src/lib.rs", names)}, Representation::kComment, oracle);
    TempDir dir;
    Project project = Materialize(dir.path(), Representation::kComment, original);
    ConvertProject(&project, Representation::kInAst, std::nullopt);
    ConvertProject(&project, Representation::kComment, std::nullopt);
    const auto back = Project::Open(dir.path()).documents();
    const auto before = testing::ActivatedTexts(original);
    const auto after = testing::ActivatedTexts(back);
    Check(before.size() == after.size(), "program " + std::to_string(i) + ": mutant count changed");
    for (std::size_t k = 0; k < before.size(); ++k) {
      Check(before[k].first == after[k].first && Squash(before[k].second) == Squash(after[k].second),
            "program " + std::to_string(i) + ": activated text of '" + before[k].first +
                "' differs beyond whitespace");
      ++texts;
    }
  }

  // The syntax-breaking block widens to whole calls.
  const std::string text = "fn main() {\n  foo(\n  0)\n}\n";
  MutationBlock block{"foo", {}, "", "  0)\n", {{"foo_1", {}, "  1)\n"}}, std::nullopt};
  const std::size_t at = text.find("  0)");
  MutationDocument doc = NormalizeBlock(BuildDocument("main.rs", text, {{at, at + 5, 3}}, {block}),
                                        0, oracle);
  Check(doc.Blocks()[0]->base == "  foo(0)\n" && doc.Blocks()[0]->variants[0].body == "  foo(1)\n",
        "foo block widened to '" + doc.Blocks()[0]->base + "'");
  std::string rendered = RenderInAst(doc, oracle);
  rendered.erase(rendered.find(" // base"), 8);
  Check(rendered == "fn main() {\n" + testing::ReadFixture("syntax_break/inast.rs") + "}\n",
        "foo block renders as\n" + rendered);

  const double seconds = Seconds(start);
  Check(seconds < 60, "took " + std::to_string(seconds) + " s (limit 60 s)");
  std::ostringstream out;
  out << conversions << " conversions, " << texts << " in-AST activated texts, foo(0)/foo(1) exact, "
      << seconds << " s";
  return out.str();
}

std::string Criterion3() {
  const auto docs = testing::RustProject(10);
  int mutants = 0;
  for (Representation r : AllRepresentations()) {
    TempDir dir;
    Project project = Materialize(dir.path(), r, docs);
    const std::string repr(RepresentationName(r));
    const auto reset = testing::HashTree(dir.path());
    const FileMap sources = ScanSources(dir.path(), {});
    const bool state_only = !RewritesSources(r);
    std::vector<std::string> names;
    for (const auto& entry : project.List()) {
      for (const auto& variant : entry.variants) {
        names.push_back(variant.name);
      }
    }
    Check(names.size() == 30, "expected 30 mutants, found " + std::to_string(names.size()));
    for (const auto& name : names) {
      project.SetActive(name);
      Check(!state_only || ScanSources(dir.path(), {}) == sources,
            repr + ": set " + name + " changed source bytes");
      project.UnsetActive(name);
      Check(testing::HashTree(dir.path()) == reset, repr + ": set/unset " + name + " left a diff");
      project.SetActive(name);
      project.Reset();
      Check(testing::HashTree(dir.path()) == reset, repr + ": set/reset " + name + " left a diff");
      ++mutants;
    }
  }
  return std::to_string(mutants) + " mutant activations over 5 representations";
}

std::string Criterion4() {
  Rng rng(4004);
  int checked = 0;
  int errors = 0;
  while (checked < 100) {
    auto [catalog, docs] = testing::RandomCatalog(rng, 6, 3);
    const testing::OracleExpr expr = testing::RandomExpr(rng, catalog, 12);
    if (testing::PlanSize(expr, catalog) > 4096) {
      continue;
    }
    ++checked;
    const testing::OracleResult expected = testing::BruteForcePlan(expr, catalog);
    const MutantCatalog library = MutantCatalog::FromDocuments(docs);
    if (expected.error) {
      errors += 1;
      Check(testing::KindOf([&] { ToPlan(ExpandExpr(ParseExpr(expr.Text()), library), library); }) ==
                expected.error,
            expr.Text() + ": wrong error");
    } else {
      Check(ToPlan(ExpandExpr(ParseExpr(expr.Text()), library), library) == expected.plan,
            expr.Text() + ": plan differs from brute force");
    }
  }

  // Named examples.
  std::vector<MutationBlock> blocks = {
      {"insert", {}, "", "i\n", {{"insert_1", {}, "1\n"}, {"insert_2", {}, "2\n"}, {"insert_3", {}, "3\n"}}, std::nullopt},
      {"ab", {}, "", "x\n", {{"a", {}, "a\n"}}, std::nullopt},
      {"bb", {}, "", "y\n", {{"b", {}, "b\n"}}, std::nullopt},
      {"cb", {}, "", "z\n", {{"c", {}, "c\n"}}, std::nullopt}};
  const MutantCatalog catalog = MutantCatalog::FromDocuments(
      {BuildDocument("f", "i\nx\ny\nz\n", {{0, 2, 1}, {2, 4, 2}, {4, 6, 3}, {6, 8, 4}}, blocks)});
  Check(EvaluateExpr("insert", catalog) == MutantPlan{{"insert_1"}, {"insert_2"}, {"insert_3"}},
        "'insert' does not expand to its variants in order");
  Check(testing::KindOf([&] { EvaluateExpr("insert_1 * insert_2", catalog); }) ==
            ErrorKind::kMutualExclusion,
        "insert_1 * insert_2 is not a MutualExclusion");
  Check(EvaluateExpr("(a + b) * c", catalog) == MutantPlan{{"a", "c"}, {"b", "c"}},
        "(a + b) * c is not [{a,c},{b,c}]");
  return std::to_string(checked) + " random expressions (" + std::to_string(errors) +
         " error cases) plus 3 named examples";
}

std::string Criterion5() {
  struct Row {
    const char* name;
    WorkloadTiming comment;
    WorkloadTiming inast;
    double total_comment;
    double total_inast;
    double exec_slowdown;
  };
  const Row rows[] = {
      {"BST", {8, 20.17, 2.47, 0.04}, {1, 20.35, 0, 0.05}, 37.51, 20.40, 1.30},
      {"RBT", {13, 18.34, 1.70, 2.67}, {1, 19.75, 0, 2.99}, 41.39, 22.74, 1.12},
      {"STLC", {10, 19.81, 1.19, 36.64}, {1, 20.28, 0, 39.29}, 67.17, 59.57, 1.07},
  };
  std::ostringstream out;
  double comment_sum = 0;
  double inast_sum = 0;
  for (const Row& row : rows) {
    const double comment = PredictComment(row.comment.cold, row.comment.warm, row.comment.n,
                                          row.comment.exec);
    const double inast = PredictInAst(row.inast.cold, row.inast.exec);
    Check(std::abs(comment - row.total_comment) <= 0.05 + 1e-9,
          std::string(row.name) + " comment total " + std::to_string(comment));
    Check(std::abs(inast - row.total_inast) <= 0.05 + 1e-9,
          std::string(row.name) + " in-AST total " + std::to_string(inast));
    const Comparison c = Compare(row.comment, row.inast);
    Check(std::abs(c.exec_slowdown - row.exec_slowdown) <= 0.06 + 1e-9,
          std::string(row.name) + " exec slowdown " + std::to_string(c.exec_slowdown));
    comment_sum += comment;
    inast_sum += inast;
    char line[128];
    std::snprintf(line, sizeof line, "%s %.2f/%.2f x%.2f; ", row.name, comment, inast,
                  c.exec_slowdown);
    out << line;
  }
  const double ratio = comment_sum / inast_sum;
  Check(std::abs(ratio - 1.42) <= 0.01 + 1e-9, "total ratio " + std::to_string(ratio));
  char line[96];
  std::snprintf(line, sizeof line, "total %.2f/%.2f = %.3f", comment_sum, inast_sum, ratio);
  out << line;
  return out.str();
}

std::string Criterion6() {
  TempDir dir;
  ProjectState state = StateFor(Representation::kComment);
  Project project = Project::Init(dir.path(), state);
  project.Replace(project.state(), testing::InsertEasyProject());
  project.Reset();
  const auto reset = testing::HashTree(dir.path());
  const std::string expression = "insert + *easy";
  const MutantPlan plan =
      EvaluateExpr(expression, MutantCatalog::FromDocuments(project.documents()));
  const RunReport report = RunPlan(&project, expression, plan, {"/bin/sh", "-c", "kill -SEGV $$"});
  Check(testing::HashTree(dir.path()) == reset, "working tree differs from the reset tree");
  Check(report.results.size() == plan.size(),
        std::to_string(report.results.size()) + " records for " + std::to_string(plan.size()) +
            " sets");
  for (std::size_t i = 0; i < plan.size(); ++i) {
    Check(report.results[i].set == plan[i] && report.results[i].status == RunStatus::kCrashed,
          "record " + std::to_string(i) + " does not match its set");
  }
  Check(ParseRunReport(RenderRunReport(report)).results.size() == plan.size(),
        "run file lost records");
  return std::to_string(report.results.size()) + " crashed sets recorded, tree restored";
}

std::string Criterion7() {
  const FileMap sources = {{"calc.rs", testing::ReadFixture("import/calc.rs")}};
  const auto docs =
      ImportRecords(ParseMutantRecords(testing::ReadFixture("import/records.json")), sources, {});
  const auto expected = ParseMatchReplace(testing::ReadFixture("matchreplace/mutations.json"),
                                          {{"calc.rs", testing::ReadFixture("matchreplace/calc.rs")}});
  Check(docs == expected, "imported block differs from the add block");
  CheckRoundTrip(StateFor(Representation::kMatchReplace), docs, "imported project");
  return "add block with add_1/add_2 reproduced; round-trip holds";
}

}  // namespace
}  // namespace mutforge

int main() {
  using Fn = std::function<std::string()>;
  const std::vector<std::pair<std::string, Fn>> criteria = {
      {"round-trip losslessness", mutforge::Criterion1},
      {"conversion closure", mutforge::Criterion2},
      {"activation safety", mutforge::Criterion3},
      {"algebra correctness", mutforge::Criterion4},
      {"timing model", mutforge::Criterion5},
      {"runner restoration", mutforge::Criterion6},
      {"importer", mutforge::Criterion7},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      detail = criteria[i].second();
      ok = true;
    } catch (const mutforge::CheckFailure& f) {
      detail = f.message;
    } catch (const std::exception& e) {
      detail = std::string("unexpected error: ") + e.what();
    }
    failed += ok ? 0 : 1;
    std::printf("%s %zu %s: %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
