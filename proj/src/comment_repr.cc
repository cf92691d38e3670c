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

#include "mutforge/comment_repr.h"

#include <optional>
#include <utility>
#include <vector>

#include "mutforge/errors.h"
#include "mutforge/text_util.h"

namespace mutforge {
namespace {

struct NameAndTags {
  std::string name;
  std::vector<std::string> tags;
};

std::optional<NameAndTags> ParseNameAndTags(std::string_view text) {
  text = Trim(text);
  NameAndTags result;
  std::size_t bracket = text.find('[');
  std::string_view name = Trim(text.substr(0, bracket));
  if (!IsIdentifier(name)) {
    return std::nullopt;
  }
  result.name = std::string(name);
  if (bracket != std::string_view::npos) {
    if (text.back() != ']' ||
        !ParseTagList(text.substr(bracket + 1, text.size() - bracket - 2),
                      &result.tags)) {
      return std::nullopt;
    }
  }
  return result;
}

std::string FormatNameAndTags(const std::string& name,
                              const std::vector<std::string>& tags) {
  return tags.empty() ? name : name + " " + FormatTagList(tags);
}

// Marker vocabulary derived from a profile.
class Grammar {
 public:
  explicit Grammar(const SyntaxProfile& profile)
      : block_(profile.style == CommentStyle::kBlock),
        close_(profile.comment_end),
        open_(profile.comment_begin + profile.mutation_marker),
        header_(open_ + profile.mutation_marker),
        end_(profile.comment_begin + " " + profile.mutation_marker +
             profile.comment_end) {
    profile.Validate();
  }

  bool block() const { return block_; }
  const std::string& open() const { return open_; }
  const std::string& close() const { return close_; }

  bool IsEnd(std::string_view trimmed) const { return trimmed == end_; }

  std::optional<NameAndTags> Header(std::string_view trimmed) const {
    std::string lead = header_ + " ";
    if (!StartsWith(trimmed, lead)) {
      return std::nullopt;
    }
    std::string_view inner = trimmed.substr(lead.size());
    if (block_) {
      if (!EndsWith(inner, close_)) {
        return std::nullopt;
      }
      inner.remove_suffix(close_.size());
    }
    return ParseNameAndTags(inner);
  }

  // Returns a name-less result for the legacy unnamed opener.
  std::optional<NameAndTags> Opening(std::string_view trimmed) const {
    if (!StartsWith(trimmed, open_) || StartsWith(trimmed, header_)) {
      return std::nullopt;
    }
    std::string_view inner = trimmed.substr(open_.size());
    if (block_) {
      if (!EndsWith(inner, close_)) {
        return std::nullopt;
      }
      inner.remove_suffix(close_.size());
      if (inner.empty() || inner[0] != ' ') {
        return std::nullopt;
      }
      if (Trim(inner).empty()) {
        return NameAndTags{};
      }
    } else if (inner.empty() || inner[0] != ' ') {
      return std::nullopt;
    }
    return ParseNameAndTags(inner);
  }

  bool IsMarker(std::string_view trimmed) const {
    return IsEnd(trimmed) || Header(trimmed) || Opening(trimmed);
  }

  // Block style "<ws><cb><mm> text <ce>": returns the unwrapped line.
  std::optional<std::string> SingleWrapped(std::string_view line) const {
    std::string_view trimmed = Trim(line);
    std::string lead = open_ + " ";
    std::string tail = " " + close_;
    if (!block_ || trimmed.size() < lead.size() + tail.size() + 1 ||
        !StartsWith(trimmed, lead) || !EndsWith(trimmed, tail)) {
      return std::nullopt;
    }
    std::string_view inner = trimmed.substr(
        lead.size(), trimmed.size() - lead.size() - tail.size());
    if (inner.empty() || IsSpace(inner[0])) {
      return std::nullopt;
    }
    std::string_view indent = LeadingWhitespace(line);
    return std::string(indent) + std::string(inner) + "\n";
  }

  // Line style "<ws><cb><mm> text": returns the unwrapped line.
  std::optional<std::string> LineWrapped(std::string_view line) const {
    std::string_view rest = TrimLeft(line);
    std::string lead = open_ + " ";
    if (block_ || !StartsWith(rest, lead)) {
      return std::nullopt;
    }
    std::string out(rest.substr(lead.size()));
    if (out.empty() || out.back() != '\n') {
      out += '\n';
    }
    return out;
  }

  std::string OpeningText(const MutationBlock& block) const {
    std::string text = open_ + " " + FormatNameAndTags(block.name, block.tags);
    return block_ ? text + " " + close_ : text;
  }

  std::string HeaderText(const Variant& variant) const {
    std::string text =
        header_ + " " + FormatNameAndTags(variant.name, variant.tags);
    return block_ ? text + " " + close_ : text;
  }

  const std::string& EndText() const { return end_; }

 private:
  bool block_;
  std::string close_;
  std::string open_;
  std::string header_;
  std::string end_;
};

std::string IndentOf(std::string_view line) {
  std::size_t n = 0;
  while (n < line.size() && (line[n] == ' ' || line[n] == '\t')) {
    ++n;
  }
  return std::string(line.substr(0, n));
}

class CommentParser {
 public:
  CommentParser(std::string_view text, const SyntaxProfile& profile,
                const std::string& path)
      : text_(NormalizeNewlines(text)), grammar_(profile), path_(path) {
    lines_ = SplitLines(text_);
  }

  MutationDocument Parse() {
    MutationDocument doc;
    doc.path = path_;
    std::string code;
    int block_index = 0;
    while (pos_ < lines_.size()) {
      std::string_view trimmed = Trim(lines_[pos_]);
      if (grammar_.IsEnd(trimmed) || grammar_.Header(trimmed)) {
        Error("mutation marker outside a block");
      }
      if (auto opening = grammar_.Opening(trimmed)) {
        doc.segments.emplace_back(CodeSegment{std::move(code)});
        code.clear();
        doc.segments.emplace_back(ParseBlock(*opening, block_index++));
        continue;
      }
      code.append(lines_[pos_]);
      ++pos_;
    }
    doc.segments.emplace_back(CodeSegment{std::move(code)});
    doc.Canonicalize();
    return doc;
  }

 private:
  struct Region {
    bool wrapped = false;
    std::string body;
    bool legacy_closed = false;
  };

  [[noreturn]] void Error(const std::string& message) const {
    Fail(ErrorKind::kParseError,
         path_ + ":" + std::to_string(pos_ + 1) + ": " + message);
  }

  bool AtBoundary() const {
    if (pos_ >= lines_.size()) {
      return false;
    }
    std::string_view trimmed = Trim(lines_[pos_]);
    return grammar_.IsEnd(trimmed) || grammar_.Header(trimmed).has_value();
  }

  Region ReadRegion(bool allow_legacy_close) {
    Region region;
    if (pos_ < lines_.size() && !AtBoundary()) {
      std::string_view first = lines_[pos_];
      std::string_view trimmed = Trim(first);
      if (grammar_.block()) {
        if (trimmed == grammar_.open()) {
          std::size_t close = pos_ + 1;
          while (close < lines_.size() && Trim(lines_[close]) != grammar_.close()) {
            ++close;
          }
          if (close >= lines_.size()) {
            Error("unterminated wrapped region");
          }
          for (std::size_t i = pos_ + 1; i < close; ++i) {
            region.body.append(lines_[i]);
          }
          region.wrapped = true;
          pos_ = close + 1;
        } else if (auto unwrapped = grammar_.SingleWrapped(first)) {
          region.body = *unwrapped;
          region.wrapped = true;
          ++pos_;
        }
      } else {
        // "#|" alone is an empty region; "#| " is a wrapped blank line.
        std::string_view bare = TrimLeft(first);
        if (!bare.empty() && bare.back() == '\n') {
          bare.remove_suffix(1);
        }
        if (bare == grammar_.open()) {
          region.wrapped = true;
          ++pos_;
        } else if (grammar_.LineWrapped(first)) {
          region.wrapped = true;
          while (pos_ < lines_.size() && !AtBoundary()) {
            auto unwrapped = grammar_.LineWrapped(lines_[pos_]);
            if (!unwrapped) {
              Error("plain line inside a wrapped region");
            }
            region.body += *unwrapped;
            ++pos_;
          }
        }
      }
      if (region.wrapped) {
        if (pos_ < lines_.size() && !AtBoundary()) {
          if (!allow_legacy_close) {
            Error("code after a wrapped region");
          }
          region.legacy_closed = true;
        } else if (pos_ >= lines_.size()) {
          if (!allow_legacy_close) {
            Error("missing end marker");
          }
          region.legacy_closed = true;
        }
        return region;
      }
    }
    while (pos_ < lines_.size() && !AtBoundary()) {
      region.body.append(lines_[pos_]);
      ++pos_;
    }
    return region;
  }

  MutationBlock ParseBlock(const NameAndTags& opening, int block_index) {
    MutationBlock block;
    block.name = opening.name.empty() ? "m" + std::to_string(block_index)
                                      : opening.name;
    block.tags = opening.tags;
    block.indent = IndentOf(lines_[pos_]);
    ++pos_;

    Region base = ReadRegion(false);
    std::vector<Region> bodies;
    bool closed = false;
    while (pos_ < lines_.size()) {
      std::string_view trimmed = Trim(lines_[pos_]);
      if (grammar_.IsEnd(trimmed)) {
        ++pos_;
        closed = true;
        break;
      }
      auto header = grammar_.Header(trimmed);
      if (!header) {
        Error("expected a variant header or end marker");
      }
      ++pos_;
      Region body = ReadRegion(grammar_.block());
      block.variants.push_back(Variant{header->name, header->tags, body.body});
      bodies.push_back(std::move(body));
      if (bodies.back().legacy_closed) {
        closed = true;
        break;
      }
    }
    if (!closed) {
      Error("block '" + block.name + "' is missing its end marker");
    }
    if (block.variants.empty()) {
      Error("block '" + block.name + "' has no variants");
    }
    bool legacy = !bodies.empty() && bodies.back().legacy_closed;
    int plain = base.wrapped ? 0 : 1;
    for (std::size_t i = 0; i < bodies.size(); ++i) {
      if (!bodies[i].wrapped) {
        ++plain;
        block.active = block.variants[i].name;
      }
    }
    if (legacy && plain == 1 && base.wrapped) {
      Error("block '" + block.name + "' is missing its end marker");
    }
    if (plain == 0) {
      Error("block '" + block.name + "' has no plain region");
    }
    if (plain > 1) {
      Error("block '" + block.name + "' has more than one plain region");
    }
    block.base = std::move(base.body);
    return block;
  }

  std::string text_;
  Grammar grammar_;
  std::string path_;
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
};

void CheckNoMarkerLines(const Grammar& grammar, std::string_view text,
                        const std::string& where) {
  for (auto line : SplitLines(text)) {
    if (grammar.IsMarker(Trim(line))) {
      Fail(ErrorKind::kWrapFailure,
           where + ": line '" + std::string(Trim(line)) +
               "' collides with mutation marker syntax");
    }
  }
}

void CheckBodyLines(const Grammar& grammar, std::string_view text,
                    const std::string& where) {
  for (auto line : SplitLines(text)) {
    std::string_view trimmed = Trim(line);
    if (grammar.IsEnd(trimmed) || grammar.Header(trimmed)) {
      Fail(ErrorKind::kWrapFailure,
           where + ": line '" + std::string(trimmed) +
               "' collides with mutation marker syntax");
    }
  }
}

void RenderRegion(const Grammar& grammar, const std::string& indent,
                  const std::string& body, bool plain, const std::string& where,
                  std::string* out) {
  CheckBodyLines(grammar, body, where);
  auto lines = SplitLines(body);
  if (plain) {
    if (!lines.empty()) {
      std::string_view first = lines.front();
      bool looks_wrapped =
          Trim(first) == grammar.open() ||
          (grammar.block() ? grammar.SingleWrapped(first).has_value()
                           : grammar.LineWrapped(first).has_value());
      if (looks_wrapped) {
        Fail(ErrorKind::kWrapFailure,
             where + ": first line would read as a wrapped region");
      }
    }
    *out += body;
    return;
  }
  if (grammar.block()) {
    if (body.find(grammar.close()) != std::string::npos) {
      Fail(ErrorKind::kWrapFailure,
           where + ": region contains the closing delimiter '" +
               grammar.close() + "'");
    }
    if (lines.size() == 1) {
      std::string_view line = lines.front();
      std::string_view ws = LeadingWhitespace(line);
      std::string_view content = line.substr(ws.size());
      if (!content.empty() && content.back() == '\n') {
        content.remove_suffix(1);
      }
      if (!content.empty()) {
        *out += std::string(ws) + grammar.open() + " " + std::string(content) +
                " " + grammar.close() + "\n";
        return;
      }
    }
    *out += indent + grammar.open() + "\n" + body + indent + grammar.close() + "\n";
    return;
  }
  if (body.empty()) {
    *out += indent + grammar.open() + "\n";
    return;
  }
  for (auto line : lines) {
    *out += indent + grammar.open() + " " + std::string(line);
  }
}

}  // namespace

MutationDocument ParseComment(std::string_view text,
                              const SyntaxProfile& profile,
                              const std::string& path) {
  return CommentParser(text, profile, path).Parse();
}

std::string RenderComment(const MutationDocument& doc,
                          const SyntaxProfile& profile) {
  Grammar grammar(profile);
  std::string out;
  for (const auto& segment : doc.segments) {
    if (const auto* code = std::get_if<CodeSegment>(&segment)) {
      CheckNoMarkerLines(grammar, code->text, doc.path);
      out += code->text;
      continue;
    }
    const auto& block = std::get<MutationBlock>(segment);
    const std::string where = doc.path + ": block '" + block.name + "'";
    auto ends_line = [](const std::string& body) {
      return body.empty() || body.back() == '\n';
    };
    bool aligned = (out.empty() || out.back() == '\n') && ends_line(block.base);
    for (const auto& variant : block.variants) {
      aligned = aligned && ends_line(variant.body);
    }
    if (!aligned) {
      Fail(ErrorKind::kNotLineAligned, where + " does not cover whole lines");
    }
    out += block.indent + grammar.OpeningText(block) + "\n";
    RenderRegion(grammar, block.indent, block.base, !block.active.has_value(),
                 where, &out);
    for (const auto& variant : block.variants) {
      out += block.indent + grammar.HeaderText(variant) + "\n";
      RenderRegion(grammar, block.indent, variant.body,
                   block.active == variant.name, where, &out);
    }
    out += block.indent + grammar.EndText() + "\n";
  }
  return out;
}

}  // namespace mutforge
