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

#include "mutforge/project.h"

#include <gtest/gtest.h>

#include "mutforge/errors.h"
#include "mutforge/text_util.h"
#include "test_support.h"

namespace mutforge {
namespace {

namespace fs = std::filesystem;
using ::mutforge::testing::HashTree;
using ::mutforge::testing::KindOf;
using ::mutforge::testing::ReadAllFiles;
using ::mutforge::testing::TempDir;

ProjectState StateFor(Representation representation) {
  ProjectState state;
  state.representation = representation;
  state.profile = *SyntaxProfile::Preset("rust");
  return state;
}

Project Materialize(const fs::path& root, Representation representation,
                    std::vector<MutationDocument> docs) {
  Project project = Project::Init(root, StateFor(representation));
  project.Replace(project.state(), std::move(docs));
  return project;
}

TEST(ProjectStateTest, RoundTrip) {
  ProjectState state = StateFor(Representation::kPatch);
  state.active = {"a_1", "b_2"};
  state.exclude = {"vendor"};
  EXPECT_EQ(ParseState(RenderState(state)), state);
  EXPECT_EQ(KindOf([] { ParseState("{\"version\": 1}"); }), ErrorKind::kParseError);
  EXPECT_EQ(KindOf([] { ParseState("{\"version\": 1, \"representation\": \"yaml\"}"); }),
            ErrorKind::kParseError);
}

TEST(ProjectTest, CommentFixtureSetAndReset) {
  TempDir dir;
  const std::string original = testing::ReadFixture("comment_rust/insert.rs");
  testing::WriteTree(dir.path(), {{"src/insert.rs", original}});
  Project project = Project::Init(dir.path(), StateFor(Representation::kComment));
  ASSERT_EQ(project.List().size(), 1u);
  EXPECT_EQ(project.List()[0].name, "insert");
  EXPECT_EQ(project.List()[0].anchor, 4);

  project.SetActive("insert_1");
  const std::string active = ReadFile(dir.path() / "src/insert.rs");
  EXPECT_NE(active.find("/*|| insert_1 */\n    T(E, k, v, E)\n"), std::string::npos) << active;
  EXPECT_NE(active.find("    /*|\n    if k < k2 {"), std::string::npos) << active;
  EXPECT_EQ(Project::Open(dir.path()).state().active, std::vector<std::string>{"insert_1"});

  project.Reset();
  EXPECT_EQ(ReadFile(dir.path() / "src/insert.rs"), original);
  EXPECT_TRUE(Project::Open(dir.path()).state().active.empty());
}

TEST(ProjectTest, SetReplacesSiblingAndUnsetRestores) {
  TempDir dir;
  Project project = Materialize(dir.path(), Representation::kComment, testing::RustProject(3));
  const auto before = HashTree(dir.path());
  project.SetActive("step0_1");
  project.SetActive("step0_2");
  EXPECT_EQ(project.state().active, std::vector<std::string>{"step0_2"});
  project.UnsetActive("step0_2");
  EXPECT_EQ(HashTree(dir.path()), before);
  // Unsetting an inactive mutant is a no-op.
  project.UnsetActive("step1_1");
  EXPECT_EQ(HashTree(dir.path()), before);
  EXPECT_EQ(KindOf([&] { project.SetActive("nope"); }), ErrorKind::kUnknownMutant);
}

TEST(ProjectTest, ActivationKeepsSourcesForStateOnlyRepresentations) {
  for (Representation r : {Representation::kPreprocessor, Representation::kInAst}) {
    TempDir dir;
    Project project = Materialize(dir.path(), r, testing::RustProject(4));
    FileMap sources = ScanSources(dir.path(), {});
    project.Activate({"step0_1", "step3_2"});
    EXPECT_EQ(ScanSources(dir.path(), {}), sources) << RepresentationName(r);
    Project reopened = Project::Open(dir.path());
    EXPECT_EQ(ActiveVariants(reopened.documents()),
              (std::vector<std::string>{"step0_1", "step3_2"}));
    project.Reset();
    EXPECT_EQ(ScanSources(dir.path(), {}), sources);
  }
}

TEST(ProjectTest, EveryRepresentationRestoresBytes) {
  for (Representation r : AllRepresentations()) {
    TempDir dir;
    Project project = Materialize(dir.path(), r, testing::RustProject(5));
    const FileMap reset = ReadAllFiles(dir.path());
    project.Activate({"step1_3", "step4_1"});
    project.Reset();
    EXPECT_EQ(ReadAllFiles(dir.path()), reset) << RepresentationName(r);
  }
}

TEST(ProjectTest, DuplicateNamesAreRejected) {
  TempDir dir;
  const std::string block = "/*| same */\nx\n/*|| same_1 */\n/*| y */\n/* |*/\n";
  testing::WriteTree(dir.path(), {{"a.rs", block}, {"b.rs", block}});
  EXPECT_EQ(KindOf([&] { Project::Init(dir.path(), StateFor(Representation::kComment)); }),
            ErrorKind::kDuplicateName);
  EXPECT_FALSE(Project::Exists(dir.path()));
}

TEST(ProjectTest, OpenWithoutStateFails) {
  TempDir dir;
  EXPECT_EQ(KindOf([&] { Project::Open(dir.path()); }), ErrorKind::kUsageError);
  Project::Init(dir.path(), StateFor(Representation::kPatch));
  EXPECT_EQ(KindOf([&] { Project::Init(dir.path(), StateFor(Representation::kPatch)); }),
            ErrorKind::kUsageError);
}

TEST(ProjectTest, ScanSkipsHiddenExcludedAndArtifacts) {
  TempDir dir;
  testing::WriteTree(dir.path(), {{"src/a.rs", "a\n"},
                                  {".git/config", "x\n"},
                                  {"target/debug/out", "x\n"},
                                  {"vendor/lib.rs", "v\n"},
                                  {"bin.dat", std::string("a\0b", 3)}});
  FileMap sources = ScanSources(dir.path(), {"vendor"});
  EXPECT_EQ(sources, (FileMap{{"src/a.rs", "a\n"}}));
}

TEST(ProjectTest, ListOrdersByFileAndAnchor) {
  TempDir dir;
  Project project = Materialize(dir.path(), Representation::kPatch, testing::RustProject(3));
  const auto listing = project.List();
  ASSERT_EQ(listing.size(), 3u);
  EXPECT_LT(listing[0].anchor, listing[1].anchor);
  EXPECT_EQ(listing[0].variants.size(), 3u);
  EXPECT_EQ(listing[0].tags, std::vector<std::string>{"easy"});
}

}  // namespace
}  // namespace mutforge
