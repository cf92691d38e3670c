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

#include "mutforge/patch_bundle.h"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "json.hpp"
#include "mutforge/errors.h"
#include "mutforge/text_util.h"

namespace mutforge {
namespace {

using Json = nlohmann::ordered_json;

struct VariantEntry {
  std::string name;
  std::vector<std::string> tags;
  std::optional<std::string> diff;
};

struct Manifest {
  std::string dir;
  std::string block;
  std::string source;
  int ordinal = 0;
  int anchor = 1;
  int base_lines = 0;
  std::string indent;
  std::vector<std::string> tags;
  std::optional<std::string> active;
  std::vector<VariantEntry> variants;
};

std::vector<std::string> ReadTags(const Json& value, const std::string& where) {
  std::vector<std::string> tags;
  if (value.is_null()) {
    return tags;
  }
  if (!value.is_array()) {
    Fail(ErrorKind::kManifestError, where + ": tags must be an array");
  }
  for (const auto& tag : value) {
    if (!tag.is_string() || !IsIdentifier(tag.get<std::string>())) {
      Fail(ErrorKind::kManifestError, where + ": invalid tag");
    }
    tags.push_back(tag.get<std::string>());
  }
  return tags;
}

Manifest ReadManifest(const std::string& dir, const std::string& text) {
  const std::string where = "patches/" + dir + "/manifest.json";
  Json json;
  try {
    json = Json::parse(text);
  } catch (const Json::exception& e) {
    Fail(ErrorKind::kManifestError, where + ": " + e.what());
  }
  Manifest manifest;
  manifest.dir = dir;
  try {
    manifest.block = json.at("block").get<std::string>();
    manifest.source = json.at("source").get<std::string>();
    manifest.ordinal = json.value("ordinal", 0);
    manifest.anchor = json.at("anchor").get<int>();
    manifest.base_lines = json.at("base_lines").get<int>();
    manifest.indent = json.value("indent", std::string());
    manifest.tags = ReadTags(json.value("tags", Json()), where);
    if (json.contains("active") && !json["active"].is_null()) {
      manifest.active = json["active"].get<std::string>();
    }
    for (const auto& entry : json.at("variants")) {
      VariantEntry variant;
      variant.name = entry.at("name").get<std::string>();
      variant.tags = ReadTags(entry.value("tags", Json()), where);
      if (entry.contains("diff") && !entry["diff"].is_null()) {
        variant.diff = entry["diff"].get<std::string>();
      }
      manifest.variants.push_back(std::move(variant));
    }
  } catch (const Json::exception& e) {
    Fail(ErrorKind::kManifestError, where + ": " + e.what());
  }
  if (!IsIdentifier(manifest.block) || manifest.variants.empty() ||
      manifest.anchor < 1 || manifest.base_lines < 0) {
    Fail(ErrorKind::kManifestError, where + ": invalid block description");
  }
  if (manifest.active) {
    bool known = std::any_of(
        manifest.variants.begin(), manifest.variants.end(),
        [&](const VariantEntry& v) { return v.name == *manifest.active; });
    if (!known) {
      Fail(ErrorKind::kManifestError,
           where + ": active variant '" + *manifest.active + "' is not listed");
    }
  }
  return manifest;
}

std::string JoinRange(const std::vector<std::string_view>& lines,
                      std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    out.append(lines[i]);
  }
  return out;
}

}  // namespace

std::string MaterializeDiffs(const std::string& reset_text,
                             std::vector<std::pair<int, std::vector<Hunk>>> diffs) {
  // Callers list diffs in file order; reversing first keeps later blocks
  // ahead of earlier ones that share an anchor line.
  std::reverse(diffs.begin(), diffs.end());
  std::stable_sort(diffs.begin(), diffs.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::string text = reset_text;
  for (const auto& [anchor, hunks] : diffs) {
    text = ApplyUnifiedDiff(text, hunks, PatchDirection::kForward);
  }
  return text;
}

std::vector<MutationDocument> ParsePatchBundle(const FileMap& sources,
                                               const FileMap& patches) {
  std::map<std::string, std::vector<Manifest>> by_source;
  std::set<std::string> referenced;
  for (const auto& [path, text] : patches) {
    if (!EndsWith(path, "/manifest.json")) {
      continue;
    }
    std::string dir = path.substr(0, path.size() - std::string("/manifest.json").size());
    Manifest manifest = ReadManifest(dir, text);
    for (const auto& variant : manifest.variants) {
      if (!variant.diff) {
        continue;
      }
      std::string diff_path = dir + "/" + *variant.diff;
      if (!patches.count(diff_path)) {
        Fail(ErrorKind::kManifestError,
             "patches/" + dir + ": missing diff file " + *variant.diff);
      }
      if (!referenced.insert(diff_path).second) {
        Fail(ErrorKind::kManifestError,
             "patches/" + diff_path + " is referenced more than once");
      }
    }
    if (!sources.count(manifest.source)) {
      Fail(ErrorKind::kManifestError,
           "patches/" + dir + ": source " + manifest.source + " does not exist");
    }
    by_source[manifest.source].push_back(std::move(manifest));
  }
  for (const auto& [path, text] : patches) {
    if (EndsWith(path, ".diff") && !referenced.count(path)) {
      Fail(ErrorKind::kManifestError,
           "patches/" + path + " is not referenced by any manifest");
    }
  }

  std::vector<MutationDocument> docs;
  for (const auto& [source, raw_text] : sources) {
    const std::string working = NormalizeNewlines(raw_text);
    auto it = by_source.find(source);
    if (it == by_source.end()) {
      MutationDocument doc;
      doc.path = source;
      doc.segments.emplace_back(CodeSegment{working});
      doc.Canonicalize();
      docs.push_back(std::move(doc));
      continue;
    }
    std::vector<Manifest>& manifests = it->second;
    std::stable_sort(manifests.begin(), manifests.end(),
                     [](const Manifest& a, const Manifest& b) {
                       return a.ordinal < b.ordinal;
                     });
    auto load_hunks = [&](const Manifest& manifest, const VariantEntry& variant) {
      if (!variant.diff) {
        return std::vector<Hunk>{};
      }
      return ParseUnifiedDiff(patches.at(manifest.dir + "/" + *variant.diff)).hunks;
    };

    // Route through base: undo active variants front to back.
    std::string reset = working;
    for (const Manifest& manifest : manifests) {
      if (!manifest.active) {
        continue;
      }
      for (const auto& variant : manifest.variants) {
        if (variant.name == *manifest.active) {
          reset = ApplyUnifiedDiff(reset, load_hunks(manifest, variant),
                                   PatchDirection::kReverse);
        }
      }
    }

    const auto reset_lines = SplitLines(reset);
    std::vector<BlockRegion> regions;
    std::vector<MutationBlock> blocks;
    std::vector<std::size_t> line_offsets(reset_lines.size() + 1, 0);
    for (std::size_t i = 0; i < reset_lines.size(); ++i) {
      line_offsets[i + 1] = line_offsets[i] + reset_lines[i].size();
    }
    for (const Manifest& manifest : manifests) {
      const std::string where = "patches/" + manifest.dir;
      std::size_t first = static_cast<std::size_t>(manifest.anchor - 1);
      std::size_t last = first + static_cast<std::size_t>(manifest.base_lines);
      if (last > reset_lines.size()) {
        Fail(ErrorKind::kManifestError, where + ": block region past end of file");
      }
      MutationBlock block;
      block.name = manifest.block;
      block.tags = manifest.tags;
      block.indent = manifest.indent;
      block.active = manifest.active;
      block.base = JoinRange(reset_lines, first, last);
      for (const auto& entry : manifest.variants) {
        Variant variant{entry.name, entry.tags, block.base};
        if (entry.diff) {
          std::string patched = ApplyUnifiedDiff(
              reset, load_hunks(manifest, entry), PatchDirection::kForward);
          const auto patched_lines = SplitLines(patched);
          long delta = static_cast<long>(patched_lines.size()) -
                       static_cast<long>(reset_lines.size());
          long body_end = static_cast<long>(last) + delta;
          if (body_end < static_cast<long>(first) ||
              JoinRange(patched_lines, 0, first) != JoinRange(reset_lines, 0, first) ||
              JoinRange(patched_lines, static_cast<std::size_t>(body_end),
                        patched_lines.size()) !=
                  JoinRange(reset_lines, last, reset_lines.size())) {
            Fail(ErrorKind::kManifestError,
                 where + ": diff for '" + entry.name + "' leaves the block region");
          }
          variant.body = JoinRange(patched_lines, first,
                                   static_cast<std::size_t>(body_end));
        }
        block.variants.push_back(std::move(variant));
      }
      regions.push_back({line_offsets[first], line_offsets[last], manifest.anchor});
      blocks.push_back(std::move(block));
    }
    docs.push_back(BuildDocument(source, reset, regions, std::move(blocks)));
  }
  return docs;
}

PatchBundleFiles RenderPatchBundle(const std::vector<MutationDocument>& docs) {
  PatchBundleFiles files;
  for (const auto& doc : docs) {
    const std::string reset = doc.RenderBase();
    const auto regions = doc.Regions();
    const auto blocks = doc.Blocks();
    std::vector<std::pair<int, std::vector<Hunk>>> active_diffs;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (!IsLineAligned(doc, i)) {
        Fail(ErrorKind::kNotLineAligned,
             doc.path + ": block '" + blocks[i]->name +
                 "' does not cover whole lines");
      }
      const MutationBlock& block = *blocks[i];
      const int shift = regions[i].anchor_line - 1;
      Json manifest;
      manifest["block"] = block.name;
      manifest["source"] = doc.path;
      manifest["ordinal"] = i;
      manifest["anchor"] = regions[i].anchor_line;
      manifest["base_lines"] = CountNewlines(block.base);
      manifest["indent"] = block.indent;
      manifest["tags"] = block.tags;
      manifest["active"] = block.active ? Json(*block.active) : Json();
      Json variants = Json::array();
      for (const auto& variant : block.variants) {
        std::vector<Hunk> hunks = DiffLines(block.base, variant.body, 0);
        for (Hunk& hunk : hunks) {
          hunk.old_start += shift;
          hunk.new_start += shift;
        }
        Json entry;
        entry["name"] = variant.name;
        entry["tags"] = variant.tags;
        if (hunks.empty()) {
          entry["diff"] = nullptr;
        } else {
          std::string file = variant.name + ".diff";
          entry["diff"] = file;
          files.patches[block.name + "/" + file] = FormatUnifiedDiff(doc.path, hunks);
        }
        if (block.active == variant.name) {
          active_diffs.emplace_back(regions[i].anchor_line, hunks);
        }
        variants.push_back(std::move(entry));
      }
      manifest["variants"] = std::move(variants);
      std::string manifest_path = block.name + "/manifest.json";
      if (files.patches.count(manifest_path)) {
        Fail(ErrorKind::kDuplicateName,
             "block name '" + block.name + "' is used more than once");
      }
      files.patches[manifest_path] = manifest.dump(2) + "\n";
    }
    std::string working = MaterializeDiffs(reset, std::move(active_diffs));
    if (working != doc.RenderActive()) {
      Fail(ErrorKind::kManifestError,
           doc.path + ": materialized diffs disagree with the model");
    }
    files.sources[doc.path] = std::move(working);
  }
  return files;
}

}  // namespace mutforge
