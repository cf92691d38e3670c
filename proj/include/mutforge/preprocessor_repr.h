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

// Preprocessor conditionals as mutation blocks:
//
//   #if defined(M_INSERT_1) /* variation=insert tags=[easy] */
//   ...variant insert_1...
//   #elif defined(M_INSERT_2)
//   ...variant insert_2...
//   #else
//   ...base...
//   #endif
//
// Flags are "M_" plus the upper-cased variant name. Mixed-case variant names
// and per-variant tags ride along in the trailer comment as
// "mutant=<name>" and "mutant_tags=[...]". Activation never touches the
// source; it is recorded in the project state and reaches the compiler as
// -D flags.

#ifndef MUTFORGE_PREPROCESSOR_REPR_H_
#define MUTFORGE_PREPROCESSOR_REPR_H_

#include <string>
#include <string_view>
#include <vector>

#include "mutforge/document.h"

namespace mutforge {

std::string FlagForVariant(std::string_view variant_name);

// Blocks come back with |active| unset; the caller restores it from state.
MutationDocument ParsePreprocessor(std::string_view text,
                                   const std::string& path = "");

// Output does not depend on which variants are active.
std::string RenderPreprocessor(const MutationDocument& doc);

// One flag per active variant across |docs|, sorted.
std::vector<std::string> EmitDefines(const std::vector<MutationDocument>& docs);

}  // namespace mutforge

#endif  // MUTFORGE_PREPROCESSOR_REPR_H_
