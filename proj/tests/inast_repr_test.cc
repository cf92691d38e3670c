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

#include "mutforge/inast_repr.h"

#include <gtest/gtest.h>

#include "mutforge/comment_repr.h"
#include "mutforge/errors.h"
#include "mutforge/rust_lite_oracle.h"
#include "mutforge/text_util.h"
#include "test_support.h"

namespace mutforge {
namespace {

using ::mutforge::testing::KindOf;

const RustLiteOracle kOracle;

std::string Indent(const std::string& text, const std::string& by) {
  std::string out;
  for (auto line : SplitLines(text)) {
    out += (Trim(line).empty() ? "" : by) + std::string(line);
  }
  return out;
}

// The arm listing placed inside a function so that it parses as a file.
std::string InsertProgram() {
  return "fn insert(k: i32, v: i32, t: Tree) -> Tree {\n"
         "  match t {\n"
         "    E => T(E, k, v, E),\n" +
         Indent(testing::ReadFixture("inast/insert_arm.rs"), "    ") +
         "  }\n"
         "}\n";
}

TEST(InAstReprTest, ExtractsInsertArm) {
  const std::string text = InsertProgram();
  MutationDocument doc = ExtractInAst(text, "bst.rs", kOracle, {});
  auto blocks = doc.Blocks();
  ASSERT_EQ(blocks.size(), 1u);
  const MutationBlock& block = *blocks[0];
  EXPECT_EQ(block.name, "insert");
  ASSERT_EQ(block.variants.size(), 1u);
  EXPECT_EQ(block.variants[0].name, "insert_1");
  EXPECT_EQ(Trim(block.variants[0].body), "T(E, k, v, E)");
  EXPECT_FALSE(block.active.has_value());

  // Same mutation as the comment listing, up to whitespace.
  MutationDocument comment = ParseComment(testing::ReadFixture("comment_rust/insert.rs"),
                                          *SyntaxProfile::Preset("rust"));
  EXPECT_EQ(StripWhitespace(block.base), StripWhitespace(comment.Blocks()[0]->base));

  EXPECT_EQ(RenderInAst(doc, kOracle), text);
}

TEST(InAstReprTest, SyntaxBreakingBlockIsWidened) {
  // "foo(" stays outside the block; only "  0)" is mutated.
  const std::string text = "fn main() {\n  foo(\n  0)\n}\n";
  MutationBlock block;
  block.name = "foo";
  block.base = "  0)\n";
  block.variants = {{"foo_1", {}, "  1)\n"}};
  const std::size_t at = text.find("  0)");
  MutationDocument doc = BuildDocument("main.rs", text, {{at, at + 5, 3}}, {block});
  EXPECT_EQ(KindOf([&] { RenderInAst(doc, kOracle); }), ErrorKind::kNotNormalized);

  MutationDocument normalized = NormalizeBlock(doc, 0, kOracle);
  const MutationBlock& widened = *normalized.Blocks()[0];
  EXPECT_EQ(widened.base, "  foo(0)\n");
  EXPECT_EQ(widened.variants[0].body, "  foo(1)\n");
  EXPECT_EQ(normalized.Regions()[0].anchor_line, 2);

  // Same as the fixture once the base comment is dropped.
  std::string rendered = RenderInAst(normalized, kOracle);
  const std::string base_comment = " // base";
  rendered.erase(rendered.find(base_comment), base_comment.size());
  EXPECT_EQ(rendered, "fn main() {\n" + testing::ReadFixture("syntax_break/inast.rs") + "}\n");
}

TEST(InAstReprTest, SubExpressionBlock) {
  const std::string text = "fn f(a: i32, b: i32) -> i32 {\n    let x = a + b;\n    x\n}\n";
  MutationBlock block;
  block.name = "op";
  block.base = "+ b";
  block.variants = {{"op_1", {}, "- 2"}};
  const std::size_t at = text.find("+ b");
  MutationDocument doc = BuildDocument("f.rs", text, {{at, at + 3, 2}}, {block});
  NormalizeDocument(&doc, kOracle);
  EXPECT_EQ(doc.Blocks()[0]->base, "a + b");
  EXPECT_EQ(doc.Blocks()[0]->variants[0].body, "a - 2");
  const std::string rendered = RenderInAst(doc, kOracle);
  EXPECT_NE(rendered.find("let x = match () { _ if mutation_active(\"op_1\") => { a - 2 } "
                          "_ => { a + b } };"),
            std::string::npos)
      << rendered;
  EXPECT_EQ(ExtractInAst(rendered, "f.rs", kOracle, {}).RenderBase(), text);
}

TEST(InAstReprTest, NoUnitOutsideTheLanguage) {
  MutationBlock block;
  block.name = "m";
  block.base = "0)\n";
  block.variants = {{"m_1", {}, "1)\n"}};
  MutationDocument doc = BuildDocument("f.hs", "foo(\n0)\n", {{5, 8, 2}}, {block});
  EXPECT_EQ(KindOf([&] { NormalizeBlock(doc, 0, kOracle); }), ErrorKind::kNoValidUnit);
}

TEST(InAstReprTest, MetadataCarriesNamesAndTags) {
  const std::string text = "fn f() -> i32 {\n    g(1)\n}\n";
  MutationBlock block;
  block.name = "call";
  block.tags = {"easy"};
  block.indent = "    ";
  block.base = "    g(1)\n";
  block.variants = {{"swap", {"small"}, "    g(2)\n"}, {"drop", {}, "    0\n"}};
  MutationDocument doc = BuildDocument("f.rs", text, {{16, 25, 2}}, {block});
  const std::string rendered = RenderInAst(doc, kOracle);
  const InAstMetadata metadata = ParseInAstMetadata(RenderInAstMetadata({doc}));
  ASSERT_EQ(metadata.count("swap"), 1u);
  EXPECT_EQ(ExtractInAst(rendered, "f.rs", kOracle, metadata), doc);

  // Without metadata the name comes from the variants and tags are lost.
  MutationDocument bare = ExtractInAst(rendered, "f.rs", kOracle, {});
  EXPECT_EQ(bare.Blocks()[0]->name, "mutation_swap");
  EXPECT_TRUE(bare.Blocks()[0]->tags.empty());
}

TEST(InAstReprTest, DeriveBlockName) {
  EXPECT_EQ(DeriveBlockName({"insert_1", "insert_2", "insert_3"}), "insert");
  EXPECT_EQ(DeriveBlockName({"add_1"}), "add");
  EXPECT_EQ(DeriveBlockName({"swap", "drop"}), "mutation_swap");
}

TEST(InAstReprTest, MalformedMarkers) {
  // No default arm.
  EXPECT_EQ(KindOf([] {
              ExtractInAst("fn f() {\n match () {\n  _ if mutation_active(\"a\") => { 1 }\n }\n}\n",
                           "f.rs", kOracle, {});
            }),
            ErrorKind::kMalformedMarker);
  // Guard that is not a string literal.
  EXPECT_EQ(KindOf([] {
              ExtractInAst("fn f() {\n match () {\n  _ if mutation_active(n) => { 1 }\n"
                           "  _ => { 2 }\n }\n}\n",
                           "f.rs", kOracle, {});
            }),
            ErrorKind::kMalformedMarker);
  EXPECT_EQ(KindOf([] { ExtractInAst("fn f( { mutation_active(\"a\")", "f.rs", kOracle, {}); }),
            ErrorKind::kParseError);
}

TEST(InAstReprTest, HelperSource) {
  const std::string helper = InAstHelperSource();
  EXPECT_NE(helper.find("pub fn mutation_active"), std::string::npos);
  EXPECT_NE(helper.find("MUTFORGE_ACTIVE"), std::string::npos);
  EXPECT_TRUE(kOracle.ParseFile(helper));
}

TEST(InAstReprTest, RandomProgramsNormalizeAndRoundTrip) {
  testing::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    testing::NameSource names;
    MutationDocument doc = testing::RandomRustDocument(rng, "lib.rs", names);
    ASSERT_TRUE(kOracle.ParseFile(doc.RenderBase())) << doc.RenderBase();
    const auto before = testing::ActivatedTexts({testing::WithoutActive({doc})});
    MutationDocument normalized = testing::WithoutActive({doc})[0];
    try {
      NormalizeDocument(&normalized, kOracle);
    } catch (const Error& e) {
      FAIL() << e.what() << "\n" << doc.RenderBase();
    }
    const auto after = testing::ActivatedTexts({normalized});
    ASSERT_EQ(before.size(), after.size());
    for (std::size_t k = 0; k < before.size(); ++k) {
      ASSERT_EQ(StripWhitespace(before[k].second), StripWhitespace(after[k].second))
          << before[k].first;
      // Strip the "lib.rs\0" prefix and the closing separator.
      const std::string program = after[k].second.substr(7, after[k].second.size() - 8);
      ASSERT_TRUE(kOracle.ParseFile(program)) << program;
    }
    const std::string rendered = RenderInAst(normalized, kOracle);
    ASSERT_TRUE(kOracle.ParseFile(rendered)) << rendered;
    MutationDocument extracted = ExtractInAst(
        rendered, "lib.rs", kOracle, ParseInAstMetadata(RenderInAstMetadata({normalized})));
    const auto round = testing::ActivatedTexts({extracted});
    ASSERT_EQ(round.size(), after.size());
    for (std::size_t k = 0; k < round.size(); ++k) {
      ASSERT_EQ(StripWhitespace(round[k].second), StripWhitespace(after[k].second));
    }
    ASSERT_EQ(testing::Structure({extracted}), testing::Structure({normalized}));
  }
}

}  // namespace
}  // namespace mutforge
