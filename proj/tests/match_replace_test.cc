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

#include "mutforge/match_replace.h"

#include <gtest/gtest.h>

#include "mutforge/errors.h"
#include "test_support.h"

namespace mutforge {
namespace {

using ::mutforge::testing::KindOf;

FileMap CalcSources() {
  return {{"calc.rs", testing::ReadFixture("matchreplace/calc.rs")}};
}

TEST(MatchReplaceTest, AddFixture) {
  const std::string sidecar = testing::ReadFixture("matchreplace/mutations.json");
  auto docs = ParseMatchReplace(sidecar, CalcSources());
  ASSERT_EQ(docs.size(), 1u);
  auto blocks = docs[0].Blocks();
  ASSERT_EQ(blocks.size(), 1u);
  const MutationBlock& block = *blocks[0];
  EXPECT_EQ(block.name, "add");
  EXPECT_EQ(block.base, "a + b");
  ASSERT_EQ(block.variants.size(), 2u);
  EXPECT_EQ(block.variants[0].name, "add_1");
  EXPECT_EQ(block.variants[0].body, "a - b");
  EXPECT_EQ(block.variants[1].name, "add_2");
  EXPECT_EQ(block.variants[1].body, "a * b");
  EXPECT_EQ(docs[0].Regions()[0].anchor_line, 2);

  // The listing is a lone object; the canonical sidecar is an array and
  // reproduces itself.
  MatchReplaceFiles files = RenderMatchReplace(docs);
  EXPECT_EQ(files.sources, CalcSources());
  auto again = ParseMatchReplace(files.sidecar, files.sources);
  EXPECT_EQ(again, docs);
  EXPECT_EQ(RenderMatchReplace(again).sidecar, files.sidecar);
}

TEST(MatchReplaceTest, ApplyAndRestore) {
  auto docs = ParseMatchReplace(testing::ReadFixture("matchreplace/mutations.json"),
                                CalcSources());
  MutationBlock block = *docs[0].Blocks()[0];
  const std::string original = CalcSources().at("calc.rs");
  const std::string add_1 = "add_1";
  const std::string mutated = ApplyMatchReplace(original, block, 2, &add_1);
  EXPECT_EQ(mutated, "fn add(a: i32, b: i32) -> i32 {\n    a - b\n}\n");
  block.active = "add_1";
  EXPECT_EQ(ApplyMatchReplace(mutated, block, 2, nullptr), original);
  block.active.reset();
  EXPECT_EQ(ApplyMatchReplace(original, block, 2, nullptr), original);
  for (const auto& variant : block.variants) {
    MutationBlock b = block;
    const std::string text = ApplyMatchReplace(original, b, 2, &variant.name);
    b.active = variant.name;
    EXPECT_EQ(ApplyMatchReplace(text, b, 2, nullptr), original);
  }
}

TEST(MatchReplaceTest, ActiveStateIsVerified) {
  FileMap mutated = {{"calc.rs", "fn add(a: i32, b: i32) -> i32 {\n    a * b\n}\n"}};
  const std::string sidecar =
      R"([{"name": "add", "scope": "calc.rs:2", "match": "a + b", "active": "add_2",
          "variants": [{"name": "add_1", "replacement": "a - b"},
                       {"name": "add_2", "replacement": "a * b"}]}])";
  auto docs = ParseMatchReplace(sidecar, mutated);
  EXPECT_EQ(docs[0].Blocks()[0]->active, "add_2");
  EXPECT_EQ(docs[0].RenderBase(), CalcSources().at("calc.rs"));

  FileMap wrong = {{"calc.rs", "fn add(a: i32, b: i32) -> i32 {\n    a - b\n}\n"}};
  EXPECT_EQ(KindOf([&] { ParseMatchReplace(sidecar, wrong); }), ErrorKind::kAmbiguousState);
}

TEST(MatchReplaceTest, CorruptScope) {
  std::string sidecar = testing::ReadFixture("matchreplace/mutations.json");
  // One byte of the pattern changed.
  sidecar.replace(sidecar.find("a + b"), 5, "a + c");
  EXPECT_EQ(KindOf([&] { ParseMatchReplace(sidecar, CalcSources()); }), ErrorKind::kScopeMiss);
  sidecar = testing::ReadFixture("matchreplace/mutations.json");
  sidecar.replace(sidecar.find("calc.rs:2"), 9, "calc.rs:1");
  EXPECT_EQ(KindOf([&] { ParseMatchReplace(sidecar, CalcSources()); }), ErrorKind::kScopeMiss);
}

TEST(MatchReplaceTest, AnchoredAtScopeLine) {
  FileMap sources = {{"f.rs", "a + b\na + b\n"}};
  const std::string sidecar =
      R"([{"name": "m", "scope": "f.rs:2", "match": "a + b",
          "variants": [{"name": "m_1", "replacement": "a - b"}]}])";
  auto docs = ParseMatchReplace(sidecar, sources);
  docs[0].MutableBlocks()[0]->active = "m_1";
  EXPECT_EQ(RenderMatchReplace(docs).sources.at("f.rs"), "a + b\na - b\n");
}

TEST(MatchReplaceTest, ColumnDisambiguatesRepeats) {
  MutationBlock block;
  block.name = "m";
  block.base = "b";
  block.variants = {{"m_1", {}, "c"}};
  MutationDocument doc = BuildDocument("f.rs", "b + b\n", {{4, 5, 1}}, {block});
  MatchReplaceFiles files = RenderMatchReplace({doc});
  EXPECT_NE(files.sidecar.find("\"column\": 5"), std::string::npos) << files.sidecar;
  EXPECT_EQ(ParseMatchReplace(files.sidecar, files.sources), std::vector{doc});
}

TEST(MatchReplaceTest, EmptySidecar) {
  auto docs = ParseMatchReplace("[]", CalcSources());
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_TRUE(docs[0].Blocks().empty());
  MatchReplaceFiles files = RenderMatchReplace(docs);
  EXPECT_EQ(files.sidecar, "[]\n");
}

TEST(MatchReplaceTest, RandomRoundTrip) {
  testing::Rng rng(41);
  testing::DocOptions options;
  options.sub_line = true;
  for (int i = 0; i < 200; ++i) {
    testing::NameSource names;
    auto docs = testing::RandomProject(rng, names, options);
    MatchReplaceFiles files = RenderMatchReplace(docs);
    std::vector<MutationDocument> parsed;
    try {
      parsed = ParseMatchReplace(files.sidecar, files.sources);
    } catch (const Error& e) {
      FAIL() << e.what() << "\n" << files.sidecar;
    }
    ASSERT_EQ(parsed, docs) << files.sidecar;
  }
}

}  // namespace
}  // namespace mutforge
