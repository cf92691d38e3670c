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

// The representation-independent model: a source file is an ordered
// interleaving of plain code and mutation blocks. Every backend parses into
// and renders from this model.

#ifndef MUTFORGE_DOCUMENT_H_
#define MUTFORGE_DOCUMENT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mutforge {

enum class CommentStyle { kBlock, kLine };

struct SyntaxProfile {
  std::string comment_begin;
  std::string comment_end;
  std::string mutation_marker;
  CommentStyle style = CommentStyle::kBlock;

  // Throws ParseError when the invariants do not hold: nonempty marker
  // without whitespace; block style needs both delimiters; line style needs
  // an empty comment_end.
  void Validate() const;

  static std::optional<SyntaxProfile> Preset(std::string_view language);
  static std::vector<std::string> PresetNames();

  bool operator==(const SyntaxProfile&) const = default;
};

struct Variant {
  std::string name;
  std::vector<std::string> tags;
  std::string body;

  bool operator==(const Variant&) const = default;
};

struct MutationBlock {
  std::string name;
  std::vector<std::string> tags;
  // Leading whitespace of the block's marker lines. Carried through every
  // representation so conversions stay lossless.
  std::string indent;
  std::string base;
  std::vector<Variant> variants;
  std::optional<std::string> active;

  const Variant* FindVariant(std::string_view variant_name) const;
  // Text of the currently selected region: the active variant or the base.
  const std::string& ActiveBody() const;

  bool operator==(const MutationBlock&) const = default;
};

struct CodeSegment {
  std::string text;

  bool operator==(const CodeSegment&) const = default;
};

using Segment = std::variant<CodeSegment, MutationBlock>;

// Location of a block inside the fully-reset program text.
struct BlockRegion {
  std::size_t begin = 0;
  std::size_t end = 0;
  // 1-based line of |begin|.
  int anchor_line = 1;
};

struct MutationDocument {
  std::string path;
  std::vector<Segment> segments;

  std::vector<const MutationBlock*> Blocks() const;
  std::vector<MutationBlock*> MutableBlocks();

  // Program text with every block at base.
  std::string RenderBase() const;
  // Program text with the active variants substituted.
  std::string RenderActive() const;

  std::vector<BlockRegion> Regions() const;

  // Merges adjacent code segments and drops empty ones so that structurally
  // equal documents compare equal.
  void Canonicalize();

  bool operator==(const MutationDocument&) const = default;
};

// Builds a canonical document from the reset program text and a list of
// disjoint, ordered regions together with their blocks. Each block's base
// must equal the text of its region.
MutationDocument BuildDocument(std::string path, std::string_view base_text,
                               const std::vector<BlockRegion>& regions,
                               std::vector<MutationBlock> blocks);

// A block is line-aligned when it starts at the beginning of a line and its
// base and every variant body are empty or end with '\n'.
bool IsLineAligned(const MutationDocument& doc, std::size_t block_index);

// Widens every block that is not line-aligned to cover whole lines. The
// partial lines around the region are copied into the base and each variant,
// so every activated program text is preserved byte-for-byte. The one
// exception: a body that would leave the last line of the file open gets a
// final newline.
void AlignToLines(MutationDocument* doc);

// Text of the program when |variant| of |block_index| alone is active.
std::string RenderWithSingle(const MutationDocument& doc,
                             std::size_t block_index,
                             const std::string* variant);

}  // namespace mutforge

#endif  // MUTFORGE_DOCUMENT_H_
