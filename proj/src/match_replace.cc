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

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <utility>

#include "json.hpp"
#include "mutforge/errors.h"
#include "mutforge/text_util.h"

namespace mutforge {
namespace {

using Json = nlohmann::ordered_json;

struct Entry {
  MutationBlock block;
  std::string path;
  int line = 1;
  std::optional<int> column;
};

std::vector<std::string> ReadTags(const Json& object, const std::string& where) {
  std::vector<std::string> tags;
  if (!object.contains("tags")) {
    return tags;
  }
  const Json& value = object["tags"];
  if (!value.is_array()) {
    Fail(ErrorKind::kParseError, where + ": tags must be an array");
  }
  for (const auto& tag : value) {
    if (!tag.is_string() || !IsIdentifier(tag.get<std::string>())) {
      Fail(ErrorKind::kParseError, where + ": invalid tag");
    }
    tags.push_back(tag.get<std::string>());
  }
  return tags;
}

std::string RequireString(const Json& object, const char* key,
                          const std::string& where) {
  if (!object.contains(key) || !object[key].is_string()) {
    Fail(ErrorKind::kParseError,
         where + ": missing or non-string field '" + key + "'");
  }
  return object[key].get<std::string>();
}

Entry ReadEntry(const Json& object, std::size_t index) {
  std::string where = std::string(kMatchReplaceSidecar) + " entry " +
                      std::to_string(index);
  if (!object.is_object()) {
    Fail(ErrorKind::kParseError, where + ": expected an object");
  }
  Entry entry;
  entry.block.name = RequireString(object, "name", where);
  where += " ('" + entry.block.name + "')";
  if (!IsIdentifier(entry.block.name)) {
    Fail(ErrorKind::kParseError, where + ": block name is not an identifier");
  }
  const std::string scope = RequireString(object, "scope", where);
  const std::size_t colon = scope.rfind(':');
  int line = 0;
  if (colon == std::string::npos || colon == 0 ||
      std::from_chars(scope.data() + colon + 1, scope.data() + scope.size(), line)
              .ptr != scope.data() + scope.size() ||
      line < 1) {
    Fail(ErrorKind::kParseError, where + ": scope must be 'path:line'");
  }
  entry.path = scope.substr(0, colon);
  entry.line = line;
  if (object.contains("column")) {
    if (!object["column"].is_number_integer() || object["column"].get<int>() < 1) {
      Fail(ErrorKind::kParseError, where + ": column must be a positive integer");
    }
    entry.column = object["column"].get<int>();
  }
  entry.block.base = NormalizeNewlines(RequireString(object, "match", where));
  entry.block.tags = ReadTags(object, where);
  if (object.contains("indent")) {
    entry.block.indent = RequireString(object, "indent", where);
  }
  if (!object.contains("variants") || !object["variants"].is_array() ||
      object["variants"].empty()) {
    Fail(ErrorKind::kParseError, where + ": needs a nonempty variants array");
  }
  for (const auto& item : object["variants"]) {
    if (!item.is_object()) {
      Fail(ErrorKind::kParseError, where + ": variant must be an object");
    }
    Variant variant;
    variant.name = RequireString(item, "name", where);
    if (!IsIdentifier(variant.name)) {
      Fail(ErrorKind::kParseError,
           where + ": variant name '" + variant.name + "' is not an identifier");
    }
    variant.body = NormalizeNewlines(RequireString(item, "replacement", where));
    variant.tags = ReadTags(item, where);
    entry.block.variants.push_back(std::move(variant));
  }
  if (object.contains("active") && !object["active"].is_null()) {
    std::string active = RequireString(object, "active", where);
    if (!entry.block.FindVariant(active)) {
      Fail(ErrorKind::kParseError,
           where + ": active variant '" + active + "' is not listed");
    }
    entry.block.active = std::move(active);
  }
  return entry;
}

// Walks the working text of one file, tracking the position of the cursor
// in fully-reset coordinates. Code between blocks is identical in both.
class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void SkipCode(std::size_t to) {
    Advance(std::string_view(text_).substr(pos_, to - pos_));
    pos_ = to;
  }

  // Consumes |needle| from the working text; |reset_text| is what stands in
  // its place in the reset file.
  void SkipBlock(std::size_t length, std::string_view reset_text) {
    pos_ += length;
    Advance(reset_text);
  }

  // Moves to the start of reset line |line|, or leaves the cursor in place
  // when it already sits on that line. Returns false if the line is behind
  // the cursor or past the end of the file.
  bool SeekLine(int line) {
    if (line_ < line) {
      while (line_ < line) {
        std::size_t newline = text_.find('\n', pos_);
        if (newline == std::string::npos) {
          return false;
        }
        SkipCode(newline + 1);
      }
    }
    return line_ == line;
  }

  bool SeekColumn(int column) {
    std::size_t want = static_cast<std::size_t>(column - 1);
    if (col_ > want) {
      return false;
    }
    std::size_t to = pos_ + (want - col_);
    if (to > text_.size() ||
        std::string_view(text_).substr(pos_, to - pos_).find('\n') !=
            std::string_view::npos) {
      return false;
    }
    SkipCode(to);
    return true;
  }

 private:
  void Advance(std::string_view consumed) {
    for (char c : consumed) {
      if (c == '\n') {
        ++line_;
        col_ = 0;
      } else {
        ++col_;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::size_t col_ = 0;
};

MutationDocument ParseFile(const std::string& path, const std::string& working,
                           std::vector<Entry> entries) {
  // Blocks sharing a scope line keep their sidecar order.
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.line < b.line; });
  MutationDocument doc;
  doc.path = path;
  Cursor cursor(working);
  for (Entry& entry : entries) {
    const std::string where = path + ":" + std::to_string(entry.line) +
                              ": block '" + entry.block.name + "'";
    const std::string& needle = entry.block.ActiveBody();
    const bool active = entry.block.active.has_value();
    auto miss = [&](const std::string& why) {
      Fail(active ? ErrorKind::kAmbiguousState : ErrorKind::kScopeMiss,
           where + ": " + (active ? "active replacement" : "match") +
               " not found (" + why + ")");
    };
    const std::size_t code_begin = cursor.pos();
    if (!cursor.SeekLine(entry.line)) {
      miss("scope line overlaps an earlier block or lies past the end");
    }
    std::size_t found = 0;
    if (entry.column) {
      if (!cursor.SeekColumn(*entry.column) ||
          working.compare(cursor.pos(), needle.size(), needle) != 0) {
        miss("not at the recorded column");
      }
      found = cursor.pos();
    } else {
      std::size_t line_end = working.find('\n', cursor.pos());
      if (line_end == std::string::npos) {
        line_end = working.size();
      }
      found = working.find(needle, cursor.pos());
      if (found == std::string::npos || found > line_end) {
        miss("not on the scope line");
      }
    }
    doc.segments.emplace_back(
        CodeSegment{working.substr(code_begin, found - code_begin)});
    cursor.SkipCode(found);
    cursor.SkipBlock(needle.size(), entry.block.base);
    doc.segments.emplace_back(std::move(entry.block));
  }
  doc.segments.emplace_back(CodeSegment{working.substr(cursor.pos())});
  doc.Canonicalize();
  return doc;
}

// True when a plain search from the start of the scope line (or the end of
// the previous block) would not land on |region|.
bool NeedsColumn(const std::string& reset, const BlockRegion& region,
                 std::size_t previous_end, const MutationBlock& block) {
  std::size_t line_start =
      region.begin == 0 ? 0 : reset.rfind('\n', region.begin - 1);
  line_start = line_start == std::string::npos || region.begin == 0
                   ? 0
                   : line_start + 1;
  if (region.begin == line_start) {
    return false;
  }
  const std::size_t from = std::max(previous_end, line_start);
  std::size_t line_end = reset.find('\n', region.end);
  line_end = line_end == std::string::npos ? reset.size() : line_end + 1;
  const std::string before = reset.substr(from, region.begin - from);
  const std::string after = reset.substr(region.end, line_end - region.end);
  std::vector<const std::string*> needles = {&block.base};
  for (const auto& variant : block.variants) {
    needles.push_back(&variant.body);
  }
  for (const std::string* needle : needles) {
    if ((before + *needle + after).find(*needle) != before.size()) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<MutationDocument> ParseMatchReplace(std::string_view sidecar,
                                                const FileMap& sources) {
  std::map<std::string, std::vector<Entry>> by_path;
  if (!Trim(sidecar).empty()) {
    Json json;
    try {
      json = Json::parse(sidecar);
    } catch (const Json::exception& e) {
      Fail(ErrorKind::kParseError,
           std::string(kMatchReplaceSidecar) + ": " + e.what());
    }
    if (json.is_object()) {
      json = Json::array({json});
    }
    if (!json.is_array()) {
      Fail(ErrorKind::kParseError,
           std::string(kMatchReplaceSidecar) + ": expected an array of blocks");
    }
    for (std::size_t i = 0; i < json.size(); ++i) {
      Entry entry = ReadEntry(json[i], i);
      if (!sources.count(entry.path)) {
        Fail(ErrorKind::kScopeMiss, std::string(kMatchReplaceSidecar) +
                                        ": block '" + entry.block.name +
                                        "' names missing file " + entry.path);
      }
      by_path[entry.path].push_back(std::move(entry));
    }
  }
  std::vector<MutationDocument> docs;
  for (const auto& [path, text] : sources) {
    const std::string working = NormalizeNewlines(text);
    auto it = by_path.find(path);
    docs.push_back(ParseFile(path, working,
                             it == by_path.end() ? std::vector<Entry>{}
                                                 : std::move(it->second)));
  }
  return docs;
}

MatchReplaceFiles RenderMatchReplace(const std::vector<MutationDocument>& docs) {
  MatchReplaceFiles files;
  Json sidecar = Json::array();
  for (const auto& doc : docs) {
    const std::string reset = doc.RenderBase();
    const auto regions = doc.Regions();
    const auto blocks = doc.Blocks();
    std::size_t previous_end = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const MutationBlock& block = *blocks[i];
      Json entry;
      entry["name"] = block.name;
      entry["scope"] = doc.path + ":" + std::to_string(regions[i].anchor_line);
      if (NeedsColumn(reset, regions[i], previous_end, block)) {
        std::size_t line_start =
            regions[i].begin == 0 ? std::string::npos
                                  : reset.rfind('\n', regions[i].begin - 1);
        std::size_t column = line_start == std::string::npos
                                 ? regions[i].begin + 1
                                 : regions[i].begin - line_start;
        entry["column"] = column;
      }
      entry["match"] = block.base;
      Json variants = Json::array();
      for (const auto& variant : block.variants) {
        Json item;
        item["name"] = variant.name;
        item["replacement"] = variant.body;
        if (!variant.tags.empty()) {
          item["tags"] = variant.tags;
        }
        variants.push_back(std::move(item));
      }
      entry["variants"] = std::move(variants);
      if (!block.tags.empty()) {
        entry["tags"] = block.tags;
      }
      if (block.active) {
        entry["active"] = *block.active;
      }
      if (!block.indent.empty()) {
        entry["indent"] = block.indent;
      }
      sidecar.push_back(std::move(entry));
      previous_end = regions[i].end;
    }
    files.sources[doc.path] = doc.RenderActive();
  }
  files.sidecar = sidecar.dump(2) + "\n";
  return files;
}

std::string ApplyMatchReplace(std::string_view text, const MutationBlock& block,
                              int scope_line, const std::string* target) {
  const std::string where =
      "block '" + block.name + "' at line " + std::to_string(scope_line);
  std::size_t line_start = 0;
  for (int line = 1; line < scope_line; ++line) {
    std::size_t newline = text.find('\n', line_start);
    if (newline == std::string_view::npos) {
      Fail(ErrorKind::kScopeMiss, where + ": line past end of file");
    }
    line_start = newline + 1;
  }
  std::size_t line_end = text.find('\n', line_start);
  if (line_end == std::string_view::npos) {
    line_end = text.size();
  }
  const std::string& current = block.ActiveBody();
  std::size_t found = text.find(current, line_start);
  if (found == std::string_view::npos || found > line_end) {
    Fail(ErrorKind::kScopeMiss, where + ": pattern not found on the scope line");
  }
  const std::string* replacement = &block.base;
  if (target) {
    const Variant* variant = block.FindVariant(*target);
    if (!variant) {
      Fail(ErrorKind::kUnknownMutant,
           where + ": no variant named '" + *target + "'");
    }
    replacement = &variant->body;
  }
  std::string out(text.substr(0, found));
  out += *replacement;
  out.append(text.substr(found + current.size()));
  return out;
}

}  // namespace mutforge
