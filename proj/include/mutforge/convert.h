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

// Conversion between representations goes through the document model:
// blocks are reset, reshaped for the target (whole lines for the comment,
// preprocessor and patch forms, syntax units for in-AST) and the previous
// activation is replayed.

#ifndef MUTFORGE_CONVERT_H_
#define MUTFORGE_CONVERT_H_

#include <optional>
#include <vector>

#include "mutforge/document.h"
#include "mutforge/parse_oracle.h"
#include "mutforge/project.h"

namespace mutforge {

// Returns |docs| reshaped so that |target| can render them. Names, tags and
// active variants are kept. Throws NoValidUnit when an in-AST target has no
// syntax unit for some block.
std::vector<MutationDocument> ConvertDocuments(std::vector<MutationDocument> docs,
                                               Representation target,
                                               const ParseOracle& oracle);

// Rewrites |project| in |target|. Converting to the comment representation
// takes |profile|, or the project's profile when none is given. A project
// already in |target| is left alone.
void ConvertProject(Project* project, Representation target,
                    const std::optional<SyntaxProfile>& profile);

}  // namespace mutforge

#endif  // MUTFORGE_CONVERT_H_
