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

#include "mutforge/convert.h"

#include <string>
#include <utility>

#include "mutforge/errors.h"
#include "mutforge/inast_repr.h"
#include "mutforge/rust_lite_oracle.h"

namespace mutforge {

std::vector<MutationDocument> ConvertDocuments(std::vector<MutationDocument> docs,
                                               Representation target,
                                               const ParseOracle& oracle) {
  for (auto& doc : docs) {
    // Reshaping works on reset blocks; the selection is put back after.
    std::vector<std::optional<std::string>> active;
    for (MutationBlock* block : doc.MutableBlocks()) {
      active.push_back(std::move(block->active));
      block->active.reset();
    }
    switch (target) {
      case Representation::kComment:
      case Representation::kPreprocessor:
      case Representation::kPatch:
        AlignToLines(&doc);
        break;
      case Representation::kInAst:
        NormalizeDocument(&doc, oracle);
        break;
      case Representation::kMatchReplace:
        break;
    }
    std::size_t i = 0;
    for (MutationBlock* block : doc.MutableBlocks()) {
      block->active = std::move(active[i++]);
    }
  }
  return docs;
}

void ConvertProject(Project* project, Representation target,
                    const std::optional<SyntaxProfile>& profile) {
  ProjectState state = project->state();
  if (state.representation == target) {
    return;
  }
  if (target == Representation::kComment) {
    if (profile) {
      state.profile = *profile;
    }
    if (state.profile.mutation_marker.empty()) {
      Fail(ErrorKind::kUsageError,
           "converting to the comment representation needs a syntax profile");
    }
    state.profile.Validate();
  }
  const RustLiteOracle oracle;
  std::vector<MutationDocument> docs =
      ConvertDocuments(project->documents(), target, oracle);
  state.representation = target;
  project->Replace(std::move(state), std::move(docs));
}

}  // namespace mutforge
