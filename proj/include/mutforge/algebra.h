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

// Mutation expressions:
//
//   sum  := prod ('+' prod)*
//   prod := atom ('*' atom)*
//   atom := IDENT | '+' IDENT | '*' IDENT | '(' sum ')'
//
// '+' runs its operands one after the other, '*' activates them together.
// A bare identifier names a mutant (variant) or a mutation (block, meaning
// the sum of its variants); +tag and *tag are the sum and the product of
// every mutant carrying the tag.

#ifndef MUTFORGE_ALGEBRA_H_
#define MUTFORGE_ALGEBRA_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mutforge/document.h"

namespace mutforge {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { kSeq, kPar, kTagSum, kTagProd, kName, kMutant, kMutation };

  Kind kind = Kind::kName;
  // Identifier or tag for the leaf kinds.
  std::string name;
  ExprPtr left;
  ExprPtr right;

  static ExprPtr Leaf(Kind kind, std::string name);
  static ExprPtr Binary(Kind kind, ExprPtr left, ExprPtr right);
};

// Structural equality.
bool SameExpr(const Expr& a, const Expr& b);

// Fully parenthesized binary operators, e.g. "(a + (b * +t))".
std::string FormatExpr(const Expr& expr);

// Throws SyntaxError with the 0-based offset and the expected tokens.
ExprPtr ParseExpr(std::string_view text);

// Every mutant of a project in (file, anchor, variant) order.
struct CatalogEntry {
  std::string variant;
  std::string block;
  // Variant tags followed by the tags of its block.
  std::vector<std::string> tags;
};

struct MutantCatalog {
  std::vector<CatalogEntry> entries;

  // |docs| must be ordered by path.
  static MutantCatalog FromDocuments(const std::vector<MutationDocument>& docs);

  const CatalogEntry* FindVariant(std::string_view name) const;
  bool HasBlock(std::string_view name) const;
};

// Replaces names and tag expansions by mutant leaves. Throws UnknownName,
// AmbiguousName or EmptyTag.
ExprPtr ExpandExpr(const ExprPtr& expr, const MutantCatalog& catalog);

// Sets of mutants to activate together, in execution order. A set lists
// each mutant once, in the order it first appears.
using MutantSet = std::vector<std::string>;
using MutantPlan = std::vector<MutantSet>;

// Distributes '*' over '+' on an expanded expression. Throws
// MutualExclusion when a set holds two variants of one block.
MutantPlan ToPlan(const ExprPtr& expanded, const MutantCatalog& catalog);

// ParseExpr, ExpandExpr and ToPlan in one go.
MutantPlan EvaluateExpr(std::string_view text, const MutantCatalog& catalog);

}  // namespace mutforge

#endif  // MUTFORGE_ALGEBRA_H_
