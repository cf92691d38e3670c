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

// Shared test helpers: temporary project trees, random documents and
// programs, and oracles written independently of the library code they
// check.

#ifndef MUTFORGE_TESTS_SUPPORT_TEST_SUPPORT_H_
#define MUTFORGE_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mutforge/document.h"
#include "mutforge/errors.h"
#include "mutforge/patch_bundle.h"

namespace mutforge::testing {

using Rng = std::mt19937_64;

std::filesystem::path FixtureDir();
std::string ReadFixture(const std::string& relative);

// Path of the mutforge binary under test.
std::filesystem::path CliPath();

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

void WriteTree(const std::filesystem::path& root, const FileMap& files);

// Every regular file below |root| (dot directories included), keyed by
// relative path.
FileMap ReadAllFiles(const std::filesystem::path& root);

// FNV-1a over the sorted (path, bytes) pairs of ReadAllFiles.
std::uint64_t HashTree(const std::filesystem::path& root);

// Hands out project-unique block and variant names.
class NameSource {
 public:
  std::string NextBlock();

 private:
  int next_ = 0;
};

struct DocOptions {
  // Allows blocks that start or end in the middle of a line.
  bool sub_line = false;
  // Upper bound on blocks per file.
  int max_blocks = 4;
  bool random_active = true;
};

// A random document over line-oriented text that never collides with the
// marker syntax of any preset profile.
MutationDocument RandomDocument(Rng& rng, const std::string& path,
                                NameSource& names, const DocOptions& options);

std::vector<MutationDocument> RandomProject(Rng& rng, NameSource& names,
                                            const DocOptions& options);

// A random Rust program with blocks over expressions, statements, tail
// expressions and token ranges that cut across syntax (as in "foo(\n 0)").
MutationDocument RandomRustDocument(Rng& rng, const std::string& path,
                                    NameSource& names);

// src/main.rs with block "insert" (insert_1..3), block "first" holding "a"
// tagged easy and block "second", itself tagged easy, holding "b".
std::vector<MutationDocument> InsertEasyProject();

// A Rust project with |blocks| blocks of three variants each, all of which
// survive normalization unchanged.
std::vector<MutationDocument> RustProject(int blocks);

// Base program text and the text with each single variant active, in
// catalog order, labelled "" for the base and the variant name otherwise.
std::vector<std::pair<std::string, std::string>> ActivatedTexts(
    const std::vector<MutationDocument>& docs);

std::vector<MutationDocument> WithoutActive(std::vector<MutationDocument> docs);

// Plain names, tags and variant names in file order; for comparing the
// mutation structure of two projects that differ in region shapes.
std::string Structure(const std::vector<MutationDocument>& docs);

// Error kind thrown by |fn|, or nullopt when it returns normally.
template <typename Fn>
std::optional<ErrorKind> KindOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

// Algebra oracle. Expressions are built as trees by the generator and
// evaluated here by direct set semantics, without rewriting.
struct OracleExpr {
  enum class Op { kSeq, kPar, kTagSum, kTagProd, kName };
  Op op = Op::kName;
  std::string name;
  std::vector<OracleExpr> children;

  // Fully parenthesized source text.
  std::string Text() const;
  int InternalNodes() const;
};

struct OracleCatalog {
  struct Entry {
    std::string variant;
    std::string block;
    std::vector<std::string> tags;  // variant tags plus block tags
  };
  std::vector<Entry> entries;
  std::vector<std::string> blocks;
  std::vector<std::string> tags;
};

// A small catalog (at most |max_mutants| variants, |max_tags| tags) and the
// documents that define it.
std::pair<OracleCatalog, std::vector<MutationDocument>> RandomCatalog(
    Rng& rng, int max_mutants, int max_tags);

OracleExpr RandomExpr(Rng& rng, const OracleCatalog& catalog, int max_internal);

struct OracleResult {
  std::vector<std::vector<std::string>> plan;
  std::optional<ErrorKind> error;
};

// Number of sets the expression denotes, without evaluating it.
double PlanSize(const OracleExpr& expr, const OracleCatalog& catalog);

OracleResult BruteForcePlan(const OracleExpr& expr, const OracleCatalog& catalog);

}  // namespace mutforge::testing

#endif  // MUTFORGE_TESTS_SUPPORT_TEST_SUPPORT_H_
