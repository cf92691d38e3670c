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

#include "mutforge/algebra.h"

#include <algorithm>
#include <map>
#include <utility>

#include "mutforge/errors.h"
#include "mutforge/text_util.h"

namespace mutforge {
namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ExprPtr Parse() {
    ExprPtr expr = Sum();
    SkipSpace();
    if (pos_ != text_.size()) {
      Error("'+', '*' or end of expression");
    }
    return expr;
  }

 private:
  ExprPtr Sum() {
    ExprPtr expr = Product();
    while (Accept('+')) {
      expr = Expr::Binary(Expr::Kind::kSeq, expr, Product());
    }
    return expr;
  }

  ExprPtr Product() {
    ExprPtr expr = Atom();
    while (Accept('*')) {
      expr = Expr::Binary(Expr::Kind::kPar, expr, Atom());
    }
    return expr;
  }

  ExprPtr Atom() {
    if (Accept('(')) {
      ExprPtr expr = Sum();
      if (!Accept(')')) {
        Error("')'");
      }
      return expr;
    }
    if (Accept('+')) {
      return Expr::Leaf(Expr::Kind::kTagSum, Identifier("tag name"));
    }
    if (Accept('*')) {
      return Expr::Leaf(Expr::Kind::kTagProd, Identifier("tag name"));
    }
    return Expr::Leaf(Expr::Kind::kName,
                      Identifier("identifier, '+tag', '*tag' or '('"));
  }

  std::string Identifier(const char* expected) {
    SkipSpace();
    std::size_t begin = pos_;
    while (pos_ < text_.size() && IsIdentChar(text_[pos_])) {
      ++pos_;
    }
    std::string_view word = text_.substr(begin, pos_ - begin);
    if (!IsIdentifier(word)) {
      pos_ = begin;
      Error(expected);
    }
    return std::string(word);
  }

  bool Accept(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void SkipSpace() {
    while (pos_ < text_.size() && IsSpace(text_[pos_])) {
      ++pos_;
    }
  }

  [[noreturn]] void Error(const char* expected) {
    std::string found = pos_ < text_.size()
                            ? "'" + std::string(1, text_[pos_]) + "'"
                            : std::string("end of expression");
    Fail(ErrorKind::kSyntaxError, "at offset " + std::to_string(pos_) +
                                      ": expected " + expected + ", found " +
                                      found);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool HasTag(const CatalogEntry& entry, const std::string& tag) {
  return std::find(entry.tags.begin(), entry.tags.end(), tag) != entry.tags.end();
}

ExprPtr Fold(Expr::Kind kind, const std::vector<ExprPtr>& items) {
  ExprPtr expr = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) {
    expr = Expr::Binary(kind, expr, items[i]);
  }
  return expr;
}

// Pushes '*' below '+' until no product has a sum beneath it.
ExprPtr Distribute(const ExprPtr& expr) {
  if (expr->kind == Expr::Kind::kMutant) {
    return expr;
  }
  ExprPtr left = Distribute(expr->left);
  ExprPtr right = Distribute(expr->right);
  if (expr->kind == Expr::Kind::kSeq) {
    return Expr::Binary(Expr::Kind::kSeq, left, right);
  }
  if (left->kind == Expr::Kind::kSeq) {
    return Expr::Binary(
        Expr::Kind::kSeq,
        Distribute(Expr::Binary(Expr::Kind::kPar, left->left, right)),
        Distribute(Expr::Binary(Expr::Kind::kPar, left->right, right)));
  }
  if (right->kind == Expr::Kind::kSeq) {
    return Expr::Binary(
        Expr::Kind::kSeq,
        Distribute(Expr::Binary(Expr::Kind::kPar, left, right->left)),
        Distribute(Expr::Binary(Expr::Kind::kPar, left, right->right)));
  }
  return Expr::Binary(Expr::Kind::kPar, left, right);
}

void CollectProduct(const Expr& expr, MutantSet* set) {
  if (expr.kind == Expr::Kind::kMutant) {
    if (std::find(set->begin(), set->end(), expr.name) == set->end()) {
      set->push_back(expr.name);
    }
    return;
  }
  CollectProduct(*expr.left, set);
  CollectProduct(*expr.right, set);
}

void CollectSum(const Expr& expr, MutantPlan* plan) {
  if (expr.kind == Expr::Kind::kSeq) {
    CollectSum(*expr.left, plan);
    CollectSum(*expr.right, plan);
    return;
  }
  MutantSet set;
  CollectProduct(expr, &set);
  plan->push_back(std::move(set));
}

}  // namespace

ExprPtr Expr::Leaf(Kind kind, std::string name) {
  auto expr = std::make_shared<Expr>();
  expr->kind = kind;
  expr->name = std::move(name);
  return expr;
}

ExprPtr Expr::Binary(Kind kind, ExprPtr left, ExprPtr right) {
  auto expr = std::make_shared<Expr>();
  expr->kind = kind;
  expr->left = std::move(left);
  expr->right = std::move(right);
  return expr;
}

bool SameExpr(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.name != b.name) {
    return false;
  }
  if (a.kind == Expr::Kind::kSeq || a.kind == Expr::Kind::kPar) {
    return SameExpr(*a.left, *b.left) && SameExpr(*a.right, *b.right);
  }
  return true;
}

std::string FormatExpr(const Expr& expr) {
  switch (expr.kind) {
    case Expr::Kind::kSeq:
      return "(" + FormatExpr(*expr.left) + " + " + FormatExpr(*expr.right) + ")";
    case Expr::Kind::kPar:
      return "(" + FormatExpr(*expr.left) + " * " + FormatExpr(*expr.right) + ")";
    case Expr::Kind::kTagSum:
      return "+" + expr.name;
    case Expr::Kind::kTagProd:
      return "*" + expr.name;
    default:
      return expr.name;
  }
}

ExprPtr ParseExpr(std::string_view text) { return ExprParser(text).Parse(); }

MutantCatalog MutantCatalog::FromDocuments(const std::vector<MutationDocument>& docs) {
  MutantCatalog catalog;
  for (const auto& doc : docs) {
    for (const MutationBlock* block : doc.Blocks()) {
      for (const Variant& variant : block->variants) {
        CatalogEntry entry{variant.name, block->name, variant.tags};
        for (const auto& tag : block->tags) {
          if (!HasTag(entry, tag)) {
            entry.tags.push_back(tag);
          }
        }
        catalog.entries.push_back(std::move(entry));
      }
    }
  }
  return catalog;
}

const CatalogEntry* MutantCatalog::FindVariant(std::string_view name) const {
  for (const auto& entry : entries) {
    if (entry.variant == name) {
      return &entry;
    }
  }
  return nullptr;
}

bool MutantCatalog::HasBlock(std::string_view name) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const CatalogEntry& e) { return e.block == name; });
}

ExprPtr ExpandExpr(const ExprPtr& expr, const MutantCatalog& catalog) {
  switch (expr->kind) {
    case Expr::Kind::kSeq:
    case Expr::Kind::kPar:
      return Expr::Binary(expr->kind, ExpandExpr(expr->left, catalog),
                          ExpandExpr(expr->right, catalog));
    case Expr::Kind::kMutant:
      return expr;
    case Expr::Kind::kTagSum:
    case Expr::Kind::kTagProd: {
      std::vector<ExprPtr> items;
      for (const auto& entry : catalog.entries) {
        if (HasTag(entry, expr->name)) {
          items.push_back(Expr::Leaf(Expr::Kind::kMutant, entry.variant));
        }
      }
      if (items.empty()) {
        Fail(ErrorKind::kEmptyTag,
             "no mutant is tagged '" + expr->name + "'");
      }
      return Fold(expr->kind == Expr::Kind::kTagSum ? Expr::Kind::kSeq
                                                    : Expr::Kind::kPar,
                  items);
    }
    case Expr::Kind::kName:
    case Expr::Kind::kMutation: {
      const bool is_mutant = expr->kind == Expr::Kind::kName &&
                             catalog.FindVariant(expr->name) != nullptr;
      const bool is_mutation = catalog.HasBlock(expr->name);
      if (is_mutant && is_mutation) {
        Fail(ErrorKind::kAmbiguousName,
             "'" + expr->name + "' names both a mutant and a mutation");
      }
      if (is_mutant) {
        return Expr::Leaf(Expr::Kind::kMutant, expr->name);
      }
      if (!is_mutation) {
        Fail(ErrorKind::kUnknownName,
             "no mutant or mutation named '" + expr->name + "'");
      }
      std::vector<ExprPtr> items;
      for (const auto& entry : catalog.entries) {
        if (entry.block == expr->name) {
          items.push_back(Expr::Leaf(Expr::Kind::kMutant, entry.variant));
        }
      }
      return Fold(Expr::Kind::kSeq, items);
    }
  }
  return expr;
}

MutantPlan ToPlan(const ExprPtr& expanded, const MutantCatalog& catalog) {
  MutantPlan plan;
  CollectSum(*Distribute(expanded), &plan);
  for (const MutantSet& set : plan) {
    std::map<std::string, std::string> seen;
    for (const std::string& mutant : set) {
      const CatalogEntry* entry = catalog.FindVariant(mutant);
      if (!entry) {
        Fail(ErrorKind::kUnknownName, "no mutant named '" + mutant + "'");
      }
      auto [it, inserted] = seen.emplace(entry->block, mutant);
      if (!inserted) {
        Fail(ErrorKind::kMutualExclusion,
             "'" + it->second + "' and '" + mutant + "' belong to mutation '" +
                 entry->block + "' and cannot be active together");
      }
    }
  }
  return plan;
}

MutantPlan EvaluateExpr(std::string_view text, const MutantCatalog& catalog) {
  return ToPlan(ExpandExpr(ParseExpr(text), catalog), catalog);
}

}  // namespace mutforge
