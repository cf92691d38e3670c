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

// Language knowledge needed by the in-AST representation.

#ifndef MUTFORGE_PARSE_ORACLE_H_
#define MUTFORGE_PARSE_ORACLE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mutforge {

struct NodeSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  // "file", "item", "stmt", "expr", "block", "match", "arm", "pattern",
  // "guard" or "type".
  std::string kind;
  // Index of the enclosing node, -1 for the root.
  int parent = -1;
};

enum class UnitCategory { kExpr, kStmts };

class ParseOracle {
 public:
  virtual ~ParseOracle() = default;

  // True when |path| is a source file in the oracle's language.
  virtual bool Handles(std::string_view path) const = 0;

  virtual bool ParseFile(std::string_view text) const = 0;

  // Every node of the file. Throws ParseError when the file does not parse.
  virtual std::vector<NodeSpan> NodeSpans(std::string_view text) const = 0;

  // Category of a standalone fragment, or nullopt when the fragment is not a
  // self-contained unit (a lone expression, or statements that declare
  // nothing visible outside them).
  virtual std::optional<UnitCategory> ParseUnit(std::string_view text) const = 0;
};

}  // namespace mutforge

#endif  // MUTFORGE_PARSE_ORACLE_H_
