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

#include "mutforge/document.h"

#include <utility>

#include "mutforge/errors.h"
#include "mutforge/text_util.h"

namespace mutforge {

void SyntaxProfile::Validate() const {
  if (mutation_marker.empty()) {
    Fail(ErrorKind::kParseError, "mutation marker must be nonempty");
  }
  for (char c : mutation_marker) {
    if (IsSpace(c)) {
      Fail(ErrorKind::kParseError, "mutation marker contains whitespace");
    }
  }
  if (style == CommentStyle::kBlock) {
    if (comment_begin.empty() || comment_end.empty()) {
      Fail(ErrorKind::kParseError,
           "block-style profile needs both comment delimiters");
    }
  } else {
    if (comment_begin.empty() || !comment_end.empty()) {
      Fail(ErrorKind::kParseError,
           "line-style profile needs a comment start and no comment end");
    }
  }
}

std::optional<SyntaxProfile> SyntaxProfile::Preset(std::string_view language) {
  if (language == "haskell") {
    return SyntaxProfile{"{-", "-}", "!", CommentStyle::kBlock};
  }
  if (language == "rocq" || language == "coq" || language == "ocaml") {
    return SyntaxProfile{"(*", "*)", "!", CommentStyle::kBlock};
  }
  if (language == "racket") {
    return SyntaxProfile{"#|", "|#", "!", CommentStyle::kBlock};
  }
  if (language == "rust") {
    // Rust reserves "/*!" for inner doc comments.
    return SyntaxProfile{"/*", "*/", "|", CommentStyle::kBlock};
  }
  if (language == "python") {
    return SyntaxProfile{"#", "", "|", CommentStyle::kLine};
  }
  return std::nullopt;
}

std::vector<std::string> SyntaxProfile::PresetNames() {
  return {"haskell", "rocq", "ocaml", "racket", "rust", "python"};
}

const Variant* MutationBlock::FindVariant(std::string_view variant_name) const {
  for (const auto& variant : variants) {
    if (variant.name == variant_name) {
      return &variant;
    }
  }
  return nullptr;
}

const std::string& MutationBlock::ActiveBody() const {
  if (active) {
    if (const Variant* variant = FindVariant(*active)) {
      return variant->body;
    }
  }
  return base;
}

std::vector<const MutationBlock*> MutationDocument::Blocks() const {
  std::vector<const MutationBlock*> blocks;
  for (const auto& segment : segments) {
    if (const auto* block = std::get_if<MutationBlock>(&segment)) {
      blocks.push_back(block);
    }
  }
  return blocks;
}

std::vector<MutationBlock*> MutationDocument::MutableBlocks() {
  std::vector<MutationBlock*> blocks;
  for (auto& segment : segments) {
    if (auto* block = std::get_if<MutationBlock>(&segment)) {
      blocks.push_back(block);
    }
  }
  return blocks;
}

std::string MutationDocument::RenderBase() const {
  std::string out;
  for (const auto& segment : segments) {
    if (const auto* code = std::get_if<CodeSegment>(&segment)) {
      out += code->text;
    } else {
      out += std::get<MutationBlock>(segment).base;
    }
  }
  return out;
}

std::string MutationDocument::RenderActive() const {
  std::string out;
  for (const auto& segment : segments) {
    if (const auto* code = std::get_if<CodeSegment>(&segment)) {
      out += code->text;
    } else {
      out += std::get<MutationBlock>(segment).ActiveBody();
    }
  }
  return out;
}

std::vector<BlockRegion> MutationDocument::Regions() const {
  std::vector<BlockRegion> regions;
  std::size_t offset = 0;
  int line = 1;
  for (const auto& segment : segments) {
    if (const auto* code = std::get_if<CodeSegment>(&segment)) {
      offset += code->text.size();
      line += static_cast<int>(CountNewlines(code->text));
    } else {
      const auto& block = std::get<MutationBlock>(segment);
      regions.push_back({offset, offset + block.base.size(), line});
      offset += block.base.size();
      line += static_cast<int>(CountNewlines(block.base));
    }
  }
  return regions;
}

void MutationDocument::Canonicalize() {
  std::vector<Segment> merged;
  for (auto& segment : segments) {
    if (auto* code = std::get_if<CodeSegment>(&segment)) {
      if (code->text.empty()) {
        continue;
      }
      if (!merged.empty()) {
        if (auto* last = std::get_if<CodeSegment>(&merged.back())) {
          last->text += code->text;
          continue;
        }
      }
    }
    merged.push_back(std::move(segment));
  }
  segments = std::move(merged);
}

MutationDocument BuildDocument(std::string path, std::string_view base_text,
                               const std::vector<BlockRegion>& regions,
                               std::vector<MutationBlock> blocks) {
  MutationDocument doc;
  doc.path = std::move(path);
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const BlockRegion& region = regions[i];
    if (region.begin < cursor || region.end < region.begin ||
        region.end > base_text.size()) {
      Fail(ErrorKind::kParseError,
           doc.path + ": overlapping or out-of-range mutation regions");
    }
    if (base_text.substr(region.begin, region.end - region.begin) !=
        blocks[i].base) {
      Fail(ErrorKind::kParseError,
           doc.path + ": block '" + blocks[i].name +
               "' base does not match its region");
    }
    doc.segments.emplace_back(
        CodeSegment{std::string(base_text.substr(cursor, region.begin - cursor))});
    doc.segments.emplace_back(std::move(blocks[i]));
    cursor = region.end;
  }
  doc.segments.emplace_back(CodeSegment{std::string(base_text.substr(cursor))});
  doc.Canonicalize();
  return doc;
}

namespace {

bool BodyEndsLine(std::string_view body) {
  return body.empty() || body.back() == '\n';
}

}  // namespace

bool IsLineAligned(const MutationDocument& doc, std::size_t block_index) {
  const std::string base = doc.RenderBase();
  const auto regions = doc.Regions();
  const auto blocks = doc.Blocks();
  const BlockRegion& region = regions.at(block_index);
  if (region.begin > 0 && base[region.begin - 1] != '\n') {
    return false;
  }
  const MutationBlock& block = *blocks[block_index];
  if (!BodyEndsLine(block.base)) {
    return false;
  }
  for (const auto& variant : block.variants) {
    if (!BodyEndsLine(variant.body)) {
      return false;
    }
  }
  return true;
}

void AlignToLines(MutationDocument* doc) {
  const std::string base = doc->RenderBase();
  std::vector<BlockRegion> regions = doc->Regions();
  std::vector<MutationBlock> blocks;
  for (const MutationBlock* block : doc->Blocks()) {
    blocks.push_back(*block);
  }
  bool changed = false;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (IsLineAligned(*doc, i)) {
      continue;
    }
    changed = true;
    BlockRegion& region = regions[i];
    std::size_t line_start = region.begin;
    while (line_start > 0 && base[line_start - 1] != '\n') {
      --line_start;
    }
    std::size_t line_end = region.end;
    bool ends_at_line = BodyEndsLine(blocks[i].base);
    for (const auto& variant : blocks[i].variants) {
      ends_at_line = ends_at_line && BodyEndsLine(variant.body);
    }
    if (!ends_at_line || (region.end > 0 && base[region.end - 1] != '\n')) {
      std::size_t newline = base.find('\n', region.end);
      line_end = newline == std::string::npos ? base.size() : newline + 1;
    }
    const std::string prefix = base.substr(line_start, region.begin - line_start);
    // A body that drops the newline joins the next line; take that line too.
    auto open_end = [&](const std::string& body) {
      const std::string out = prefix + body + base.substr(region.end, line_end - region.end);
      return !out.empty() && out.back() != '\n';
    };
    while (line_end < base.size()) {
      bool open = open_end(blocks[i].base);
      for (const auto& variant : blocks[i].variants) {
        open = open || open_end(variant.body);
      }
      if (!open) {
        break;
      }
      const std::size_t newline = base.find('\n', line_end);
      line_end = newline == std::string::npos ? base.size() : newline + 1;
    }
    // At end of file a body may leave the last line open even when the
    // file itself ends with a newline.
    if ((i > 0 && regions[i - 1].end > line_start) ||
        (i + 1 < regions.size() && regions[i + 1].begin < line_end)) {
      Fail(ErrorKind::kNotLineAligned,
           doc->path + ": block '" + blocks[i].name +
               "' shares a line with another block");
    }
    const std::string suffix = base.substr(region.end, line_end - region.end);
    const bool at_eof = line_end == base.size();
    auto widen = [&](const std::string& body) {
      std::string out = prefix + body + suffix;
      if (at_eof && !out.empty() && out.back() != '\n') {
        out += '\n';
      }
      return out;
    };
    blocks[i].base = widen(blocks[i].base);
    for (auto& variant : blocks[i].variants) {
      variant.body = widen(variant.body);
    }
    if (blocks[i].indent.empty()) {
      std::string_view first = blocks[i].base;
      std::size_t n = 0;
      while (n < first.size() && (first[n] == ' ' || first[n] == '\t')) {
        ++n;
      }
      blocks[i].indent = std::string(first.substr(0, n));
    }
    region.begin = line_start;
    region.end = line_end;
  }
  if (!changed) {
    return;
  }
  // Rebuild against the widened base text; only the trailing newline can
  // differ from the original base.
  std::string widened_base;
  std::size_t cursor = 0;
  std::vector<BlockRegion> new_regions;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    widened_base += base.substr(cursor, regions[i].begin - cursor);
    BlockRegion region{widened_base.size(), 0, 1};
    widened_base += blocks[i].base;
    region.end = widened_base.size();
    new_regions.push_back(region);
    cursor = regions[i].end;
  }
  widened_base += base.substr(cursor);
  *doc = BuildDocument(doc->path, widened_base, new_regions, std::move(blocks));
}

std::string RenderWithSingle(const MutationDocument& doc,
                             std::size_t block_index,
                             const std::string* variant) {
  std::string out;
  std::size_t index = 0;
  for (const auto& segment : doc.segments) {
    if (const auto* code = std::get_if<CodeSegment>(&segment)) {
      out += code->text;
      continue;
    }
    const auto& block = std::get<MutationBlock>(segment);
    if (index == block_index && variant != nullptr) {
      const Variant* selected = block.FindVariant(*variant);
      out += selected != nullptr ? selected->body : block.base;
    } else {
      out += block.base;
    }
    ++index;
  }
  return out;
}

}  // namespace mutforge
