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

// Comment-based mutation blocks. With <cb>, <ce> and <mm> taken from the
// SyntaxProfile, a block in block style reads
//
//   <cb><mm> name [tags] <ce>          opening marker
//   ...base...                         plain or wrapped
//   <cb><mm><mm> variant [tags] <ce>   one header per variant
//   ...body...                         plain or wrapped
//   <cb> <mm><ce>                      end marker
//
// Exactly one region (the base or one variant) is plain code; every other
// region is wrapped. A one-line region is wrapped in place as
// "<ws><cb><mm> text <ce>"; anything else is wrapped between a
// "<cb><mm>" line and a "<ce>" line. In line style the markers drop <ce>,
// every wrapped line is prefixed with "<cb><mm> ", and a lone "<cb><mm>"
// line stands for an empty wrapped region.
//
// Unnamed legacy openers ("<cb><mm> <ce>") and blocks without an end marker
// whose variant bodies are all wrapped are accepted on parse; the renderer
// always emits names and end markers.

#ifndef MUTFORGE_COMMENT_REPR_H_
#define MUTFORGE_COMMENT_REPR_H_

#include <string>
#include <string_view>

#include "mutforge/document.h"

namespace mutforge {

MutationDocument ParseComment(std::string_view text,
                              const SyntaxProfile& profile,
                              const std::string& path = "");

// Throws WrapFailure if a region that must be wrapped contains the closing
// delimiter or if any line would be mistaken for marker syntax, and
// NotLineAligned for blocks that do not cover whole lines.
std::string RenderComment(const MutationDocument& doc,
                          const SyntaxProfile& profile);

}  // namespace mutforge

#endif  // MUTFORGE_COMMENT_REPR_H_
