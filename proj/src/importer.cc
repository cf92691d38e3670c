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

#include "mutforge/importer.h"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "json.hpp"
#include "mutforge/errors.h"
#include "mutforge/inast_repr.h"
#include "mutforge/text_util.h"

namespace mutforge {
namespace {

using Json = nlohmann::json;

std::string Field(const Json& record, const char* key, const std::string& where,
                  bool required) {
  if (!record.contains(key)) {
    if (required) {
      Fail(ErrorKind::kRecordError, where + ": missing field '" + key + "'");
    }
    return "";
  }
  if (!record[key].is_string()) {
    Fail(ErrorKind::kRecordError, where + ": field '" + key + "' must be a string");
  }
  return record[key].get<std::string>();
}

// "src/calc.rs" -> "calc"; anything that is not an identifier character
// becomes '_'.
std::string StemName(const std::string& file) {
  std::string stem = std::filesystem::path(file).stem().string();
  for (char& c : stem) {
    if (!IsIdentChar(c)) {
      c = '_';
    }
  }
  if (stem.empty() || !IsIdentifier(stem)) {
    stem = "m_" + stem;
  }
  return stem;
}

struct Group {
  std::string file;
  int line = 1;
  std::string original;
  std::vector<const MutantRecord*> records;
};

std::size_t LineStart(const std::string& text, int line) {
  std::size_t pos = 0;
  for (int i = 1; i < line; ++i) {
    pos = text.find('\n', pos);
    if (pos == std::string::npos) {
      return std::string::npos;
    }
    ++pos;
  }
  return pos;
}

}  // namespace

std::vector<MutantRecord> ParseMutantRecords(std::string_view json_text) {
  Json parsed = Json::parse(json_text, nullptr, false);
  if (parsed.is_discarded()) {
    Fail(ErrorKind::kRecordError, "mutant records are not valid JSON");
  }
  if (!parsed.is_array()) {
    Fail(ErrorKind::kRecordError, "mutant records must be a JSON array");
  }
  std::vector<MutantRecord> records;
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    const Json& item = parsed[i];
    const std::string where = "record " + std::to_string(i);
    if (!item.is_object()) {
      Fail(ErrorKind::kRecordError, where + ": expected an object");
    }
    MutantRecord record;
    record.file = Field(item, "file", where, true);
    if (!item.contains("line") || !item["line"].is_number_integer() ||
        item["line"].get<int>() < 1) {
      Fail(ErrorKind::kRecordError, where + ": 'line' must be a positive integer");
    }
    record.line = item["line"].get<int>();
    record.original = NormalizeNewlines(Field(item, "original", where, true));
    record.replacement = NormalizeNewlines(Field(item, "replacement", where, true));
    record.name = Field(item, "name", where, false);
    record.block = Field(item, "block", where, false);
    for (const std::string* name : {&record.name, &record.block}) {
      if (!name->empty() && !IsIdentifier(*name)) {
        Fail(ErrorKind::kRecordError,
             where + ": '" + *name + "' is not an identifier");
      }
    }
    if (item.contains("tags")) {
      if (!item["tags"].is_array()) {
        Fail(ErrorKind::kRecordError, where + ": 'tags' must be an array");
      }
      for (const auto& tag : item["tags"]) {
        if (!tag.is_string() || !IsIdentifier(tag.get<std::string>())) {
          Fail(ErrorKind::kRecordError, where + ": tags must be identifiers");
        }
        record.tags.push_back(tag.get<std::string>());
      }
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<MutationDocument> ImportRecords(const std::vector<MutantRecord>& records,
                                            const FileMap& sources,
                                            std::vector<MutationDocument> existing) {
  std::set<std::string> taken;
  for (const auto& doc : existing) {
    for (const MutationBlock* block : doc.Blocks()) {
      taken.insert(block->name);
      for (const auto& variant : block->variants) {
        taken.insert(variant.name);
      }
    }
  }
  auto claim = [&](const std::string& name) {
    if (!taken.insert(name).second) {
      Fail(ErrorKind::kNameCollision, "name '" + name + "' is already taken");
    }
  };

  std::vector<Group> groups;
  for (const MutantRecord& record : records) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
      return std::tie(g.file, g.line, g.original) ==
             std::tie(record.file, record.line, record.original);
    });
    if (it == groups.end()) {
      groups.push_back(Group{record.file, record.line, record.original, {}});
      it = groups.end() - 1;
    }
    it->records.push_back(&record);
  }

  std::map<std::string, MutationDocument> docs;
  for (auto& doc : existing) {
    std::string path = doc.path;
    docs.emplace(std::move(path), std::move(doc));
  }
  // New regions per file, each with its block.
  std::map<std::string, std::vector<std::pair<BlockRegion, MutationBlock>>> added;

  for (const Group& group : groups) {
    const std::string where = group.file + ":" + std::to_string(group.line);
    auto source = sources.find(group.file);
    if (source == sources.end()) {
      Fail(ErrorKind::kRecordError, where + ": no such source file");
    }
    if (!docs.count(group.file)) {
      MutationDocument doc;
      doc.path = group.file;
      doc.segments.emplace_back(CodeSegment{NormalizeNewlines(source->second)});
      doc.Canonicalize();
      docs.emplace(group.file, std::move(doc));
    }
    const std::string reset = docs[group.file].RenderBase();
    const std::size_t line_start = LineStart(reset, group.line);
    if (line_start == std::string::npos) {
      Fail(ErrorKind::kRecordError, where + ": line is past the end of the file");
    }
    std::size_t line_end = reset.find('\n', line_start);
    line_end = line_end == std::string::npos ? reset.size() : line_end;
    const std::size_t found = reset.find(group.original, line_start);
    if (found == std::string::npos || found > line_end) {
      Fail(ErrorKind::kRecordError,
           where + ": original text '" + group.original + "' is not on this line");
    }
    BlockRegion region{found, found + group.original.size(), group.line};

    MutationBlock block;
    block.base = group.original;
    std::vector<std::string> given_names;
    for (const MutantRecord* record : group.records) {
      if (block.name.empty() && !record->block.empty()) {
        block.name = record->block;
      }
      if (!record->name.empty()) {
        given_names.push_back(record->name);
      }
    }
    if (block.name.empty() && !given_names.empty()) {
      block.name = DeriveBlockName(given_names);
    } else if (block.name.empty()) {
      // Several groups can sit on one line.
      const std::string stem = StemName(group.file) + "_" + std::to_string(group.line);
      block.name = stem;
      for (int k = 2; taken.count(block.name); ++k) {
        block.name = stem + "_" + std::to_string(k);
      }
    }
    claim(block.name);
    for (std::size_t k = 0; k < group.records.size(); ++k) {
      const MutantRecord* record = group.records[k];
      Variant variant;
      variant.name = record->name.empty()
                         ? block.name + "_" + std::to_string(k + 1)
                         : record->name;
      claim(variant.name);
      variant.tags = record->tags;
      variant.body = record->replacement;
      block.variants.push_back(std::move(variant));
    }
    added[group.file].emplace_back(region, std::move(block));
  }

  for (auto& [path, fresh] : added) {
    MutationDocument& doc = docs[path];
    const std::string reset = doc.RenderBase();
    std::vector<std::pair<BlockRegion, MutationBlock>> all = std::move(fresh);
    const std::vector<BlockRegion> regions = doc.Regions();
    const std::vector<const MutationBlock*> blocks = doc.Blocks();
    for (std::size_t i = 0; i < regions.size(); ++i) {
      all.emplace_back(regions[i], *blocks[i]);
    }
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
      return a.first.begin < b.first.begin;
    });
    for (std::size_t i = 1; i < all.size(); ++i) {
      const BlockRegion& prev = all[i - 1].first;
      const BlockRegion& next = all[i].first;
      if (next.begin < prev.end ||
          (next.begin == prev.begin && (next.end > next.begin || prev.end > prev.begin))) {
        Fail(ErrorKind::kRecordError,
             path + ":" + std::to_string(next.anchor_line) + ": mutation '" +
                 all[i].second.name + "' overlaps mutation '" +
                 all[i - 1].second.name + "'");
      }
    }
    std::vector<BlockRegion> sorted_regions;
    std::vector<MutationBlock> sorted_blocks;
    for (auto& [region, block] : all) {
      sorted_regions.push_back(region);
      sorted_blocks.push_back(std::move(block));
    }
    doc = BuildDocument(path, reset, sorted_regions, std::move(sorted_blocks));
  }

  std::vector<MutationDocument> out;
  for (auto& [path, doc] : docs) {
    out.push_back(std::move(doc));
  }
  return out;
}

}  // namespace mutforge
