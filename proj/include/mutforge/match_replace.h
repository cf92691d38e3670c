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

// Match-and-replace blocks live in one JSON sidecar (mutations.json at the
// project root), an array of
//
//   {
//     "name": "add",
//     "scope": "calc.rs:2",
//     "match": "a + b",
//     "variants": [{"name": "add_1", "replacement": "a - b"}, ...],
//     "tags": [...],        optional, also allowed per variant
//     "active": "add_1",    optional
//     "indent": "    ",     optional, marker indentation for conversions
//     "column": 9           optional, 1-based column in the reset file; only
//                           written when the first occurrence on the scope
//                           line would be the wrong one
//   }
//
// Matching is exact substring search anchored at the scope line of the
// fully-reset file. A lone object instead of an array is accepted on read.

#ifndef MUTFORGE_MATCH_REPLACE_H_
#define MUTFORGE_MATCH_REPLACE_H_

#include <string>
#include <string_view>
#include <vector>

#include "mutforge/document.h"
#include "mutforge/patch_bundle.h"

namespace mutforge {

inline constexpr char kMatchReplaceSidecar[] = "mutations.json";

// |sources| holds the current working files. Every file in |sources| yields
// a document; files not named by the sidecar have no blocks.
std::vector<MutationDocument> ParseMatchReplace(std::string_view sidecar,
                                                const FileMap& sources);

struct MatchReplaceFiles {
  std::string sidecar;
  FileMap sources;
};

MatchReplaceFiles RenderMatchReplace(const std::vector<MutationDocument>& docs);

// Replaces the block's currently active body, found at |scope_line|, with
// |target| (a variant name, or nullptr for the base).
std::string ApplyMatchReplace(std::string_view text, const MutationBlock& block,
                              int scope_line, const std::string* target);

}  // namespace mutforge

#endif  // MUTFORGE_MATCH_REPLACE_H_
