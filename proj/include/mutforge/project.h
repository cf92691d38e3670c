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

// A project is a directory tree in one representation plus the state file
// .mutforge/state:
//
//   {
//     "version": 1,
//     "representation": "comment",
//     "profile": {"comment_begin": "/*", "comment_end": "*/",
//                 "mutation_marker": "|", "style": "block"},
//     "active": ["insert_1"],
//     "exclude": ["vendor"]
//   }
//
// "active" lists active variants in (file, anchor) order. It is the only
// record of activation for the preprocessor and in-AST representations and a
// mirror of the sources for the others. "exclude" holds extra path prefixes
// to skip when scanning for sources.

#ifndef MUTFORGE_PROJECT_H_
#define MUTFORGE_PROJECT_H_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mutforge/document.h"
#include "mutforge/patch_bundle.h"

namespace mutforge {

enum class Representation { kComment, kPreprocessor, kPatch, kMatchReplace, kInAst };

std::string_view RepresentationName(Representation representation);
std::optional<Representation> ParseRepresentation(std::string_view name);
std::vector<Representation> AllRepresentations();

// Comment, patch and match-and-replace activation rewrites sources.
bool RewritesSources(Representation representation);

inline constexpr char kStateFile[] = ".mutforge/state";

struct ProjectState {
  Representation representation = Representation::kComment;
  SyntaxProfile profile;
  std::vector<std::string> active;
  std::vector<std::string> exclude;

  bool operator==(const ProjectState&) const = default;
};

std::string RenderState(const ProjectState& state);
ProjectState ParseState(std::string_view text);

// Source files as found on disk, relative paths with '/' separators.
// Directories starting with '.', build output directories, representation
// artifacts and files containing NUL bytes are skipped.
FileMap ScanSources(const std::filesystem::path& root,
                    const std::vector<std::string>& exclude);

// Everything a representation reads: the scanned sources plus its own
// artifact files (keyed by root-relative path).
struct ProjectInput {
  FileMap sources;
  FileMap artifacts;
};

ProjectInput ReadProjectInput(const std::filesystem::path& root,
                              const ProjectState& state);

// Parses |input| in |state.representation|. Active variants come from the
// state file for the preprocessor and in-AST representations. Documents are
// ordered by path. Throws ParseError, DuplicateName or UnknownMutant.
std::vector<MutationDocument> LoadDocuments(const ProjectState& state,
                                            const ProjectInput& input);

// Rendered project files (root-relative) plus the artifact paths this
// representation owns; stale owned files not in |files| are removed.
struct RenderedProject {
  FileMap files;
  std::vector<std::string> owned_prefixes;
};

RenderedProject RenderDocuments(const ProjectState& state,
                                const std::vector<MutationDocument>& docs);

// Artifact prefixes (root-relative) of a representation; a prefix ending in
// '/' names a directory.
std::vector<std::string> ArtifactPrefixes(Representation representation);

// Throws DuplicateName when two blocks or two variants share a name.
void CheckUniqueNames(const std::vector<MutationDocument>& docs);

struct BlockListing {
  std::string path;
  int anchor = 1;
  std::string name;
  std::vector<std::string> tags;
  std::vector<Variant> variants;  // bodies left empty
  std::optional<std::string> active;
};

std::vector<BlockListing> ListBlocks(const std::vector<MutationDocument>& docs);

// Active variants in (file, anchor) order.
std::vector<std::string> ActiveVariants(const std::vector<MutationDocument>& docs);

class Project {
 public:
  // Reads the state file and parses every source.
  static Project Open(const std::filesystem::path& root);

  // Creates the state file for an existing tree and parses it.
  static Project Init(const std::filesystem::path& root, ProjectState state);

  static bool Exists(const std::filesystem::path& root);

  const std::filesystem::path& root() const { return root_; }
  const ProjectState& state() const { return state_; }
  const std::vector<MutationDocument>& documents() const { return docs_; }

  std::vector<BlockListing> List() const { return ListBlocks(docs_); }

  // Each of these updates the model, renders it and writes changed files
  // and the state file. Nothing is written when rendering fails.
  void SetActive(const std::string& variant);
  void UnsetActive(const std::string& variant);
  void Reset();
  // Makes exactly |variants| active (after a reset), in one write.
  void Activate(const std::vector<std::string>& variants);

  // Replaces the model and representation wholesale (used by conversion).
  void Replace(ProjectState state, std::vector<MutationDocument> docs);

 private:
  Project(std::filesystem::path root, ProjectState state,
          std::vector<MutationDocument> docs)
      : root_(std::move(root)), state_(std::move(state)), docs_(std::move(docs)) {}

  static MutationBlock* FindBlockOf(std::vector<MutationDocument>* docs,
                                    const std::string& variant);
  void Store(const ProjectState& state, std::vector<MutationDocument> docs);

  std::filesystem::path root_;
  ProjectState state_;
  std::vector<MutationDocument> docs_;
};

}  // namespace mutforge

#endif  // MUTFORGE_PROJECT_H_
