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

// Patch bundles. Source files stay in place (with active variants applied)
// and every block gets a directory under patches/:
//
//   patches/<block>/manifest.json
//   patches/<block>/<variant>.diff
//
// manifest.json fields:
//   block       block name
//   source      source path relative to the project root
//   ordinal     0-based position of the block among its file's blocks
//   anchor      1-based first line of the block in the fully-reset file
//   base_lines  number of lines in the base region
//   indent      marker indentation (kept for lossless conversion)
//   tags        block tags
//   active      active variant name or null
//   variants    [{name, tags, diff}], diff is the file name or null when
//               the variant is textually identical to the base
//
// Diffs always go from the fully-reset file to the file with only that
// variant active, carry no context lines, and stay inside the block region.

#ifndef MUTFORGE_PATCH_BUNDLE_H_
#define MUTFORGE_PATCH_BUNDLE_H_

#include <map>
#include <string>
#include <vector>

#include "mutforge/document.h"
#include "mutforge/unified_diff.h"

namespace mutforge {

// Path -> contents. Patch paths are relative to the patches directory.
using FileMap = std::map<std::string, std::string>;

struct PatchBundleFiles {
  FileMap sources;
  FileMap patches;
};

// |sources| holds the working (possibly activated) source files. Files
// without manifests come back as documents without blocks.
std::vector<MutationDocument> ParsePatchBundle(const FileMap& sources,
                                               const FileMap& patches);

PatchBundleFiles RenderPatchBundle(const std::vector<MutationDocument>& docs);

// Applies the given per-block diffs to |reset_text| in descending anchor
// order so earlier hunk positions stay valid.
std::string MaterializeDiffs(const std::string& reset_text,
                             std::vector<std::pair<int, std::vector<Hunk>>> diffs);

}  // namespace mutforge

#endif  // MUTFORGE_PATCH_BUNDLE_H_
