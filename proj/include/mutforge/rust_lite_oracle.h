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

// A parser for a practical subset of Rust: items (fn, use, mod, const,
// static, struct, enum, impl, type), statements, the usual operator
// precedence, calls, methods, indexing, '?', casts, closures, macros,
// if/match/while/loop/for, and patterns. Generic parameters, attributes,
// struct bodies and macro arguments are skipped as balanced token trees.
// Struct literal expressions are not supported.

#ifndef MUTFORGE_RUST_LITE_ORACLE_H_
#define MUTFORGE_RUST_LITE_ORACLE_H_

#include "mutforge/parse_oracle.h"

namespace mutforge {

class RustLiteOracle : public ParseOracle {
 public:
  bool Handles(std::string_view path) const override;
  bool ParseFile(std::string_view text) const override;
  std::vector<NodeSpan> NodeSpans(std::string_view text) const override;
  std::optional<UnitCategory> ParseUnit(std::string_view text) const override;
};

}  // namespace mutforge

#endif  // MUTFORGE_RUST_LITE_ORACLE_H_
