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

// In-AST mutations: every block becomes a runtime dispatch
//
//   <I>match () {
//   <I>  _ if mutation_active("insert_1") => {
//   <I>    T(E, k, v, E)
//   <I>  }
//   <I>  _ => { // base
//   <I>    if k < k2 { ... }
//   <I>  }
//   <I>}
//
// where <I> is the block indent and bodies are re-indented to <I> plus four
// spaces. A block that does not cover whole lines is written on one line as
// `match () { _ if mutation_active("v") => { B } _ => { BASE } }`.
//
// Block names and tags have no place in the marker. They are kept in a
// metadata file keyed by the first variant name; without it a block is named
// after the common prefix of its variant names.

#ifndef MUTFORGE_INAST_REPR_H_
#define MUTFORGE_INAST_REPR_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mutforge/document.h"
#include "mutforge/parse_oracle.h"

namespace mutforge {

inline constexpr char kInAstHelperFile[] = "mutforge_runtime.rs";
inline constexpr char kInAstMetadataFile[] = ".mutforge/inast.json";

struct InAstBlockInfo {
  std::string name;
  std::vector<std::string> tags;
  std::map<std::string, std::vector<std::string>> variant_tags;
};

// Keyed by the block's first variant name.
using InAstMetadata = std::map<std::string, InAstBlockInfo>;

InAstMetadata ParseInAstMetadata(std::string_view json_text);
std::string RenderInAstMetadata(const std::vector<MutationDocument>& docs);

// Longest common prefix of the variant names with trailing digits and
// underscores removed ("insert_1", "insert_2" -> "insert").
std::string DeriveBlockName(const std::vector<std::string>& variant_names);

// Blocks come back with no active variant. Throws ParseError when a file
// holding markers does not parse, MalformedMarker for a marker whose guard
// is not a string literal or that lacks the default arm.
MutationDocument ExtractInAst(std::string_view text, const std::string& path,
                              const ParseOracle& oracle,
                              const InAstMetadata& metadata);

// Throws NotNormalized when bodies of a block are not units of one category
// or the result does not parse.
std::string RenderInAst(const MutationDocument& doc, const ParseOracle& oracle);

// The Rust source defining mutation_active().
std::string InAstHelperSource();

// Widens block |block_index| to the smallest enclosing syntax node whose
// text, with the base or any variant substituted, is a unit of one common
// category. Activated program texts only change in whitespace. Throws
// NoValidUnit when no enclosing node works.
MutationDocument NormalizeBlock(const MutationDocument& doc,
                                std::size_t block_index,
                                const ParseOracle& oracle);

// NormalizeBlock for every block in order.
void NormalizeDocument(MutationDocument* doc, const ParseOracle& oracle);

}  // namespace mutforge

#endif  // MUTFORGE_INAST_REPR_H_
