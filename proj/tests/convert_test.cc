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

#include "mutforge/convert.h"

#include <gtest/gtest.h>

#include "mutforge/errors.h"
#include "mutforge/inast_repr.h"
#include "mutforge/rust_lite_oracle.h"
#include "mutforge/text_util.h"
#include "test_support.h"

namespace mutforge {
namespace {

namespace fs = std::filesystem;
using ::mutforge::testing::KindOf;
using ::mutforge::testing::TempDir;

constexpr Representation kTextual[] = {Representation::kComment, Representation::kPreprocessor,
                                       Representation::kPatch, Representation::kMatchReplace};

Project Materialize(const fs::path& root, Representation representation,
                    std::vector<MutationDocument> docs) {
  ProjectState state;
  state.representation = representation;
  state.profile = *SyntaxProfile::Preset("rust");
  Project project = Project::Init(root, state);
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

TEST(ConvertTest, ClosureOverTextualRepresentations) {
  testing::Rng rng(41);
  for (int i = 0; i < 12; ++i) {
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
        EXPECT_EQ(Project::Open(dir.path()).state().representation, b);
        ConvertProject(&project, a, std::nullopt);
        const auto back = Project::Open(dir.path()).documents();
        ASSERT_EQ(back, docs) << RepresentationName(a) << " -> " << RepresentationName(b)
                              << "\n" << testing::Structure(back) << "vs\n"
                              << testing::Structure(docs);
      }
    }
  }
}

// Activated texts with every file ending in a newline. Widening a block
// that ends the file without one adds it.
std::vector<std::pair<std::string, std::string>> ClosedTexts(
    const std::vector<MutationDocument>& docs) {
  auto texts = testing::ActivatedTexts(docs);
  for (auto& [label, joined] : texts) {
    std::string out;
    bool is_path = true;
    std::size_t start = 0;
    for (std::size_t i = 0; i < joined.size(); ++i) {
      if (joined[i] != '\0') {
        continue;
      }
      std::string part = joined.substr(start, i - start);
      if (!is_path && !part.empty() && part.back() != '\n') {
        part += '\n';
      }
      out += part + '\0';
      is_path = !is_path;
      start = i + 1;
    }
    joined = out;
  }
  return texts;
}

TEST(ConvertTest, SubLineBlocksAreWidenedForLineRepresentations) {
  testing::Rng rng(43);
  testing::DocOptions options;
  options.sub_line = true;
  for (int i = 0; i < 20; ++i) {
    testing::NameSource names;
    const auto docs = testing::RandomProject(rng, names, options);
    for (Representation b : {Representation::kComment, Representation::kPreprocessor,
                             Representation::kPatch}) {
      TempDir dir;
      Project project = Materialize(dir.path(), Representation::kMatchReplace, docs);
      ConvertProject(&project, b, std::nullopt);
      const auto converted = Project::Open(dir.path()).documents();
      EXPECT_TRUE(ClosedTexts(converted) == ClosedTexts(docs)) << RepresentationName(b);
      EXPECT_EQ(testing::Structure(converted), testing::Structure(docs));
    }
  }
}

TEST(ConvertTest, BlocksSharingALineStayInMatchReplace) {
  const std::string text = "let x = a + b * c;\n";
  MutationBlock first{"first", {}, "", "+", {{"first_1", {}, "-"}}, std::nullopt};
  MutationBlock second{"second", {}, "", "*", {{"second_1", {}, "/"}}, std::nullopt};
  const std::size_t plus = text.find('+');
  const std::size_t times = text.find('*');
  MutationDocument doc = BuildDocument("x.rs", text, {{plus, plus + 1, 1}, {times, times + 1, 1}},
                                       {first, second});
  TempDir dir;
  Project project = Materialize(dir.path(), Representation::kMatchReplace, {doc});
  const auto before = testing::HashTree(dir.path());
  EXPECT_EQ(KindOf([&] { ConvertProject(&project, Representation::kPatch, std::nullopt); }),
            ErrorKind::kNotLineAligned);
  EXPECT_EQ(testing::HashTree(dir.path()), before);
}

TEST(ConvertTest, InAstLegPreservesActivatedTextsUpToWhitespace) {
  testing::Rng rng(47);
  for (int i = 0; i < 25; ++i) {
    testing::NameSource names;
    const auto docs = {testing::RandomRustDocument(rng, "src/lib.rs", names)};
    std::vector<MutationDocument> original(docs);
    TempDir dir;
    // Sub-line blocks enter through match-and-replace.
    Project project = Materialize(dir.path(), Representation::kMatchReplace, original);
    ConvertProject(&project, Representation::kComment, std::nullopt);
    ConvertProject(&project, Representation::kInAst, std::nullopt);
    ConvertProject(&project, Representation::kComment, std::nullopt);
    const auto back = Project::Open(dir.path()).documents();
    const auto before = testing::ActivatedTexts(original);
    const auto after = testing::ActivatedTexts(back);
    ASSERT_EQ(before.size(), after.size());
    for (std::size_t k = 0; k < before.size(); ++k) {
      EXPECT_EQ(before[k].first, after[k].first);
      EXPECT_EQ(Squash(before[k].second), Squash(after[k].second)) << before[k].first;
    }
    EXPECT_EQ(testing::Structure(back), testing::Structure(original));
  }
}

TEST(ConvertTest, SyntaxBreakingCommentBlockToInAst) {
  TempDir dir;
  testing::WriteTree(dir.path(), {{"src/main.rs",
                                   "fn main() {\n  foo(\n  /*| foo */\n  0)\n"
                                   "  /*|| foo_1 */\n  /*| 1) */\n  /* |*/\n}\n"}});
  ProjectState state;
  state.profile = *SyntaxProfile::Preset("rust");
  Project project = Project::Init(dir.path(), state);
  ConvertProject(&project, Representation::kInAst, std::nullopt);
  const std::string fixture = testing::ReadFixture("syntax_break/inast.rs");
  std::string expected;
  for (std::string_view line : SplitLines(fixture)) {
    expected += "  " + std::string(line);
  }
  expected.insert(expected.find("_ => {") + 6, " // base");
  EXPECT_EQ(ReadFile(dir.path() / "src/main.rs"), "fn main() {\n" + expected + "}\n");
  EXPECT_TRUE(fs::exists(dir.path() / kInAstHelperFile));

  ConvertProject(&project, Representation::kComment, std::nullopt);
  const auto docs = Project::Open(dir.path()).documents();
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_EQ(docs[0].Blocks()[0]->name, "foo");
  EXPECT_EQ(docs[0].Blocks()[0]->base, "  foo(0)\n");
  EXPECT_EQ(docs[0].Blocks()[0]->variants[0].body, "  foo(1)\n");
  EXPECT_FALSE(fs::exists(dir.path() / kInAstHelperFile));
}

TEST(ConvertTest, ActiveSetSurvivesConversion) {
  auto docs = testing::RustProject(4);
  TempDir dir;
  Project project = Materialize(dir.path(), Representation::kPatch, docs);
  project.Activate({"step2_1"});
  for (Representation r : {Representation::kPreprocessor, Representation::kInAst,
                           Representation::kMatchReplace, Representation::kComment}) {
    ConvertProject(&project, r, std::nullopt);
    EXPECT_EQ(Project::Open(dir.path()).state().active, std::vector<std::string>{"step2_1"})
        << RepresentationName(r);
  }
}

TEST(ConvertTest, CommentTargetNeedsAProfile) {
  TempDir dir;
  ProjectState state;
  state.representation = Representation::kPatch;
  Project project = Project::Init(dir.path(), state);
  EXPECT_EQ(KindOf([&] { ConvertProject(&project, Representation::kComment, std::nullopt); }),
            ErrorKind::kUsageError);
  ConvertProject(&project, Representation::kComment, SyntaxProfile::Preset("python"));
  EXPECT_EQ(Project::Open(dir.path()).state().profile, *SyntaxProfile::Preset("python"));
}

TEST(ConvertDocumentsTest, KeepsActiveAndAligns) {
  const std::string text = "a\nb\n";
  MutationBlock block{"blk", {}, "", "b", {{"blk_1", {}, "c"}}, "blk_1"};
  MutationDocument doc = BuildDocument("f", text, {{2, 3, 2}}, {block});
  const RustLiteOracle oracle;
  auto out = ConvertDocuments({doc}, Representation::kPatch, oracle);
  EXPECT_EQ(out[0].Blocks()[0]->base, "b\n");
  EXPECT_EQ(out[0].Blocks()[0]->variants[0].body, "c\n");
  EXPECT_EQ(out[0].Blocks()[0]->active, "blk_1");
  EXPECT_EQ(ConvertDocuments({doc}, Representation::kMatchReplace, oracle)[0], doc);
}

}  // namespace
}  // namespace mutforge
