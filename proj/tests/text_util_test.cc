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

#include "mutforge/text_util.h"

#include <gtest/gtest.h>

namespace mutforge {
namespace {

TEST(TextUtilTest, NormalizeNewlines) {
  EXPECT_EQ(NormalizeNewlines("a\r\nb\rc\n"), "a\nb\nc\n");
  EXPECT_EQ(NormalizeNewlines(""), "");
}

TEST(TextUtilTest, SplitLinesKeepsTerminators) {
  auto lines = SplitLines("a\nb\nc");
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "a\n");
  EXPECT_EQ(lines[2], "c");
  EXPECT_TRUE(SplitLines("").empty());
  EXPECT_EQ(JoinLines(SplitLines("x\n\ny\n")), "x\n\ny\n");
}

TEST(TextUtilTest, Identifiers) {
  EXPECT_TRUE(IsIdentifier("insert_1"));
  EXPECT_TRUE(IsIdentifier("_x"));
  EXPECT_FALSE(IsIdentifier("1x"));
  EXPECT_FALSE(IsIdentifier(""));
  EXPECT_FALSE(IsIdentifier("a-b"));
}

TEST(TextUtilTest, TrimAndStrip) {
  EXPECT_EQ(Trim("  a b \n"), "a b");
  EXPECT_EQ(LeadingWhitespace("\t x"), "\t ");
  EXPECT_EQ(TrailingWhitespace("x \n"), " \n");
  EXPECT_EQ(StripWhitespace(" f ( 0 )\n"), "f(0)");
}

TEST(TextUtilTest, TagLists) {
  EXPECT_EQ(FormatTagList({"easy", "small"}), "[easy, small]");
  EXPECT_EQ(FormatTagList({}), "");
  std::vector<std::string> tags;
  EXPECT_TRUE(ParseTagList("easy, small", &tags));
  EXPECT_EQ(tags, (std::vector<std::string>{"easy", "small"}));
  EXPECT_FALSE(ParseTagList("easy, 2x", &tags));
}

TEST(TextUtilTest, Fnv1a64KnownValues) {
  // Published FNV-1a test vectors.
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(Fnv1a64("foobar"), 0x85944171f73967e8ull);
}

}  // namespace
}  // namespace mutforge
