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

#include "mutforge/project.h"

#include <algorithm>
#include <map>
#include <system_error>
#include <utility>

#include "json.hpp"
#include "mutforge/comment_repr.h"
#include "mutforge/errors.h"
#include "mutforge/inast_repr.h"
#include "mutforge/match_replace.h"
#include "mutforge/preprocessor_repr.h"
#include "mutforge/rust_lite_oracle.h"
#include "mutforge/text_util.h"

namespace mutforge {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr char kPatchDir[] = "patches/";

const RustLiteOracle& Oracle() {
  static const RustLiteOracle oracle;
  return oracle;
}

bool SkippedDirectory(const std::string& name, bool top_level) {
  return StartsWith(name, ".") || name == "target" || name == "build" ||
         name == "node_modules" || name == "__pycache__" ||
         (top_level && name == "patches");
}

bool SkippedFile(const std::string& relative) {
  return relative == kMatchReplaceSidecar || relative == kInAstHelperFile;
}

bool Excluded(const std::string& relative, const std::vector<std::string>& exclude) {
  for (const auto& prefix : exclude) {
    if (relative == prefix || StartsWith(relative, prefix + "/")) {
      return true;
    }
  }
  return false;
}

std::string Relative(const fs::path& root, const fs::path& path) {
  return path.lexically_relative(root).generic_string();
}

// Every regular file under |dir| keyed by root-relative path.
FileMap ReadTree(const fs::path& root, const fs::path& dir) {
  FileMap files;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    return files;
  }
  for (auto it = fs::recursive_directory_iterator(dir);
       it != fs::recursive_directory_iterator(); ++it) {
    if (it->is_regular_file()) {
      files[Relative(root, it->path())] = ReadFile(it->path());
    }
  }
  return files;
}

void ApplyStateActive(const std::vector<std::string>& active,
                      std::vector<MutationDocument>* docs) {
  for (const std::string& name : active) {
    MutationBlock* owner = nullptr;
    for (auto& doc : *docs) {
      for (MutationBlock* block : doc.MutableBlocks()) {
        if (block->FindVariant(name)) {
          owner = block;
        }
      }
    }
    if (!owner) {
      Fail(ErrorKind::kUnknownMutant,
           std::string(kStateFile) + " activates unknown mutant '" + name + "'");
    }
    if (owner->active && *owner->active != name) {
      Fail(ErrorKind::kActivationError,
           std::string(kStateFile) + " activates both '" + *owner->active +
               "' and '" + name + "' of mutation '" + owner->name + "'");
    }
    owner->active = name;
  }
}

Json ProfileJson(const SyntaxProfile& profile) {
  Json json;
  json["comment_begin"] = profile.comment_begin;
  json["comment_end"] = profile.comment_end;
  json["mutation_marker"] = profile.mutation_marker;
  json["style"] = profile.style == CommentStyle::kBlock ? "block" : "line";
  return json;
}

}  // namespace

std::string_view RepresentationName(Representation representation) {
  switch (representation) {
    case Representation::kComment:
      return "comment";
    case Representation::kPreprocessor:
      return "preprocessor";
    case Representation::kPatch:
      return "patch";
    case Representation::kMatchReplace:
      return "matchreplace";
    case Representation::kInAst:
      return "inast";
  }
  return "comment";
}

std::optional<Representation> ParseRepresentation(std::string_view name) {
  for (Representation r : AllRepresentations()) {
    if (RepresentationName(r) == name) {
      return r;
    }
  }
  return std::nullopt;
}

std::vector<Representation> AllRepresentations() {
  return {Representation::kComment, Representation::kPreprocessor,
          Representation::kPatch, Representation::kMatchReplace,
          Representation::kInAst};
}

bool RewritesSources(Representation representation) {
  return representation == Representation::kComment ||
         representation == Representation::kPatch ||
         representation == Representation::kMatchReplace;
}

std::string RenderState(const ProjectState& state) {
  Json json;
  json["version"] = 1;
  json["representation"] = std::string(RepresentationName(state.representation));
  json["profile"] = ProfileJson(state.profile);
  json["active"] = state.active;
  json["exclude"] = state.exclude;
  return json.dump(2) + "\n";
}

ProjectState ParseState(std::string_view text) {
  ProjectState state;
  try {
    Json json = Json::parse(text);
    if (json.value("version", 1) != 1) {
      Fail(ErrorKind::kParseError, std::string(kStateFile) + ": unsupported version");
    }
    std::string name = json.at("representation").get<std::string>();
    auto representation = ParseRepresentation(name);
    if (!representation) {
      Fail(ErrorKind::kParseError,
           std::string(kStateFile) + ": unknown representation '" + name + "'");
    }
    state.representation = *representation;
    if (json.contains("profile")) {
      const Json& profile = json["profile"];
      state.profile.comment_begin = profile.value("comment_begin", "");
      state.profile.comment_end = profile.value("comment_end", "");
      state.profile.mutation_marker = profile.value("mutation_marker", "");
      std::string style = profile.value("style", "block");
      if (style != "block" && style != "line") {
        Fail(ErrorKind::kParseError,
             std::string(kStateFile) + ": style must be 'block' or 'line'");
      }
      state.profile.style = style == "line" ? CommentStyle::kLine : CommentStyle::kBlock;
    }
    state.active = json.value("active", std::vector<std::string>{});
    state.exclude = json.value("exclude", std::vector<std::string>{});
  } catch (const Json::exception& e) {
    Fail(ErrorKind::kParseError, std::string(kStateFile) + ": " + e.what());
  }
  if (state.representation == Representation::kComment) {
    state.profile.Validate();
  }
  return state;
}

FileMap ScanSources(const fs::path& root, const std::vector<std::string>& exclude) {
  FileMap sources;
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    Fail(ErrorKind::kIoError, root.string() + " is not a directory");
  }
  for (auto it = fs::recursive_directory_iterator(root);
       it != fs::recursive_directory_iterator(); ++it) {
    const std::string relative = Relative(root, it->path());
    const std::string name = it->path().filename().string();
    if (it->is_directory()) {
      if (SkippedDirectory(name, it.depth() == 0) || Excluded(relative, exclude)) {
        it.disable_recursion_pending();
      }
      continue;
    }
    if (!it->is_regular_file() || StartsWith(name, ".") || SkippedFile(relative) ||
        Excluded(relative, exclude)) {
      continue;
    }
    std::string content = ReadFile(it->path());
    if (content.find('\0') != std::string::npos) {
      continue;
    }
    sources[relative] = std::move(content);
  }
  return sources;
}

std::vector<std::string> ArtifactPrefixes(Representation representation) {
  switch (representation) {
    case Representation::kPatch:
      return {kPatchDir};
    case Representation::kMatchReplace:
      return {kMatchReplaceSidecar};
    case Representation::kInAst:
      return {kInAstHelperFile, kInAstMetadataFile};
    default:
      return {};
  }
}

ProjectInput ReadProjectInput(const fs::path& root, const ProjectState& state) {
  ProjectInput input;
  input.sources = ScanSources(root, state.exclude);
  for (const auto& prefix : ArtifactPrefixes(state.representation)) {
    if (EndsWith(prefix, "/")) {
      FileMap tree = ReadTree(root, root / prefix);
      input.artifacts.insert(tree.begin(), tree.end());
    } else if (fs::is_regular_file(root / prefix)) {
      input.artifacts[prefix] = ReadFile(root / prefix);
    }
  }
  return input;
}

std::vector<MutationDocument> LoadDocuments(const ProjectState& state,
                                            const ProjectInput& input) {
  std::vector<MutationDocument> docs;
  switch (state.representation) {
    case Representation::kComment:
      for (const auto& [path, text] : input.sources) {
        MutationDocument doc = ParseComment(text, state.profile, path);
        doc.path = path;
        docs.push_back(std::move(doc));
      }
      break;
    case Representation::kPreprocessor:
      for (const auto& [path, text] : input.sources) {
        MutationDocument doc = ParsePreprocessor(text, path);
        doc.path = path;
        docs.push_back(std::move(doc));
      }
      ApplyStateActive(state.active, &docs);
      break;
    case Representation::kPatch: {
      FileMap patches;
      for (const auto& [path, text] : input.artifacts) {
        if (StartsWith(path, kPatchDir)) {
          patches[path.substr(std::string(kPatchDir).size())] = text;
        }
      }
      docs = ParsePatchBundle(input.sources, patches);
      break;
    }
    case Representation::kMatchReplace: {
      auto it = input.artifacts.find(kMatchReplaceSidecar);
      docs = ParseMatchReplace(it == input.artifacts.end() ? "" : it->second,
                               input.sources);
      break;
    }
    case Representation::kInAst: {
      InAstMetadata metadata;
      auto it = input.artifacts.find(kInAstMetadataFile);
      if (it != input.artifacts.end()) {
        metadata = ParseInAstMetadata(it->second);
      }
      for (const auto& [path, text] : input.sources) {
        docs.push_back(ExtractInAst(text, path, Oracle(), metadata));
      }
      ApplyStateActive(state.active, &docs);
      break;
    }
  }
  CheckUniqueNames(docs);
  return docs;
}

RenderedProject RenderDocuments(const ProjectState& state,
                                const std::vector<MutationDocument>& docs) {
  RenderedProject out;
  for (const auto& prefix : ArtifactPrefixes(state.representation)) {
    out.owned_prefixes.push_back(prefix);
  }
  switch (state.representation) {
    case Representation::kComment:
      for (const auto& doc : docs) {
        out.files[doc.path] = RenderComment(doc, state.profile);
      }
      break;
    case Representation::kPreprocessor:
      for (const auto& doc : docs) {
        out.files[doc.path] = RenderPreprocessor(doc);
      }
      break;
    case Representation::kPatch: {
      PatchBundleFiles bundle = RenderPatchBundle(docs);
      out.files = std::move(bundle.sources);
      for (auto& [path, text] : bundle.patches) {
        out.files[kPatchDir + path] = std::move(text);
      }
      break;
    }
    case Representation::kMatchReplace: {
      MatchReplaceFiles rendered = RenderMatchReplace(docs);
      out.files = std::move(rendered.sources);
      out.files[kMatchReplaceSidecar] = std::move(rendered.sidecar);
      break;
    }
    case Representation::kInAst:
      for (const auto& doc : docs) {
        out.files[doc.path] = RenderInAst(doc, Oracle());
      }
      out.files[kInAstHelperFile] = InAstHelperSource();
      out.files[kInAstMetadataFile] = RenderInAstMetadata(docs);
      break;
  }
  return out;
}

void CheckUniqueNames(const std::vector<MutationDocument>& docs) {
  std::map<std::string, std::string> blocks;
  std::map<std::string, std::string> variants;
  for (const auto& doc : docs) {
    const auto regions = doc.Regions();
    const auto list = doc.Blocks();
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = doc.path + ":" + std::to_string(regions[i].anchor_line);
      auto [it, fresh] = blocks.emplace(list[i]->name, where);
      if (!fresh) {
        Fail(ErrorKind::kDuplicateName, "mutation '" + list[i]->name +
                                            "' is defined at " + it->second +
                                            " and " + where);
      }
      for (const Variant& variant : list[i]->variants) {
        auto [vit, vfresh] = variants.emplace(variant.name, where);
        if (!vfresh) {
          Fail(ErrorKind::kDuplicateName, "mutant '" + variant.name +
                                              "' is defined at " + vit->second +
                                              " and " + where);
        }
      }
    }
  }
}

std::vector<BlockListing> ListBlocks(const std::vector<MutationDocument>& docs) {
  std::vector<BlockListing> listing;
  for (const auto& doc : docs) {
    const auto regions = doc.Regions();
    const auto blocks = doc.Blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      BlockListing entry;
      entry.path = doc.path;
      entry.anchor = regions[i].anchor_line;
      entry.name = blocks[i]->name;
      entry.tags = blocks[i]->tags;
      for (const Variant& variant : blocks[i]->variants) {
        entry.variants.push_back({variant.name, variant.tags, ""});
      }
      entry.active = blocks[i]->active;
      listing.push_back(std::move(entry));
    }
  }
  std::stable_sort(listing.begin(), listing.end(),
                   [](const BlockListing& a, const BlockListing& b) {
                     return std::tie(a.path, a.anchor) < std::tie(b.path, b.anchor);
                   });
  return listing;
}

std::vector<std::string> ActiveVariants(const std::vector<MutationDocument>& docs) {
  std::vector<std::string> active;
  for (const auto& entry : ListBlocks(docs)) {
    if (entry.active) {
      active.push_back(*entry.active);
    }
  }
  return active;
}

bool Project::Exists(const fs::path& root) {
  return fs::is_regular_file(root / kStateFile);
}

Project Project::Open(const fs::path& root) {
  if (!Exists(root)) {
    Fail(ErrorKind::kUsageError,
         root.string() + " is not a mutforge project (no " + kStateFile +
             "); run 'mutforge init' first");
  }
  ProjectState state = ParseState(ReadFile(root / kStateFile));
  std::vector<MutationDocument> docs =
      LoadDocuments(state, ReadProjectInput(root, state));
  return Project(root, std::move(state), std::move(docs));
}

Project Project::Init(const fs::path& root, ProjectState state) {
  if (Exists(root)) {
    Fail(ErrorKind::kUsageError, root.string() + " already has " + kStateFile);
  }
  if (state.representation == Representation::kComment) {
    state.profile.Validate();
  }
  std::vector<MutationDocument> docs =
      LoadDocuments(state, ReadProjectInput(root, state));
  if (RewritesSources(state.representation)) {
    state.active = ActiveVariants(docs);
  }
  WriteFileIfChanged(root / kStateFile, RenderState(state));
  return Project(root, std::move(state), std::move(docs));
}

MutationBlock* Project::FindBlockOf(std::vector<MutationDocument>* docs,
                                    const std::string& variant) {
  for (auto& doc : *docs) {
    for (MutationBlock* block : doc.MutableBlocks()) {
      if (block->FindVariant(variant)) {
        return block;
      }
    }
  }
  Fail(ErrorKind::kUnknownMutant, "no mutant named '" + variant + "'");
}

void Project::SetActive(const std::string& variant) {
  std::vector<MutationDocument> docs = docs_;
  FindBlockOf(&docs, variant)->active = variant;
  Store(state_, std::move(docs));
}

void Project::UnsetActive(const std::string& variant) {
  std::vector<MutationDocument> docs = docs_;
  MutationBlock* block = FindBlockOf(&docs, variant);
  if (block->active != variant) {
    return;
  }
  block->active.reset();
  Store(state_, std::move(docs));
}

void Project::Reset() { Activate({}); }

void Project::Activate(const std::vector<std::string>& variants) {
  std::vector<MutationDocument> docs = docs_;
  for (auto& doc : docs) {
    for (MutationBlock* block : doc.MutableBlocks()) {
      block->active.reset();
    }
  }
  for (const std::string& variant : variants) {
    MutationBlock* owner = FindBlockOf(&docs, variant);
    if (owner->active && *owner->active != variant) {
      Fail(ErrorKind::kActivationError,
           "'" + *owner->active + "' and '" + variant + "' belong to mutation '" +
               owner->name + "' and cannot be active together");
    }
    owner->active = variant;
  }
  Store(state_, std::move(docs));
}

void Project::Replace(ProjectState state, std::vector<MutationDocument> docs) {
  Store(state, std::move(docs));
}

void Project::Store(const ProjectState& base_state, std::vector<MutationDocument> docs) {
  ProjectState state = base_state;
  state.active = ActiveVariants(docs);
  RenderedProject rendered = RenderDocuments(state, docs);

  // Owned artifacts of both the old and the new representation that are not
  // part of the new rendering get removed.
  std::vector<std::string> prefixes = rendered.owned_prefixes;
  for (const auto& prefix : ArtifactPrefixes(state_.representation)) {
    prefixes.push_back(prefix);
  }
  std::vector<fs::path> stale;
  for (const auto& prefix : prefixes) {
    if (EndsWith(prefix, "/")) {
      for (const auto& [path, text] : ReadTree(root_, root_ / prefix)) {
        if (!rendered.files.count(path)) {
          stale.push_back(root_ / path);
        }
      }
    } else if (!rendered.files.count(prefix) && fs::exists(root_ / prefix)) {
      stale.push_back(root_ / prefix);
    }
  }

  for (const auto& [path, text] : rendered.files) {
    const fs::path full = root_ / path;
    if (fs::is_regular_file(full) && NormalizeNewlines(ReadFile(full)) == text) {
      continue;  // Keep the original bytes, line endings included.
    }
    WriteFileIfChanged(full, text);
  }
  for (const fs::path& path : stale) {
    fs::remove(path);
  }
  for (const auto& prefix : prefixes) {
    std::error_code ec;
    if (EndsWith(prefix, "/") && fs::is_directory(root_ / prefix, ec)) {
      // Drop directories left empty, deepest first.
      std::vector<fs::path> dirs;
      for (auto it = fs::recursive_directory_iterator(root_ / prefix);
           it != fs::recursive_directory_iterator(); ++it) {
        if (it->is_directory()) {
          dirs.push_back(it->path());
        }
      }
      dirs.push_back(root_ / prefix);
      std::sort(dirs.rbegin(), dirs.rend());
      for (const auto& dir : dirs) {
        if (fs::is_empty(dir, ec)) {
          fs::remove(dir, ec);
        }
      }
    }
  }
  WriteFileIfChanged(root_ / kStateFile, RenderState(state));
  state_ = std::move(state);
  docs_ = std::move(docs);
}

}  // namespace mutforge
