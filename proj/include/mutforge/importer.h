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

// Imports mutants produced by an external generator. Each record is one
// mutant:
//
//   [{"file": "calc.rs", "line": 2, "original": "a + b",
//     "replacement": "a - b", "name": "add_1", "tags": ["arith"],
//     "block": "add"}]
//
// "name", "tags" and "block" are optional. Records sharing (file, line,
// original) become variants of one match-and-replace block. A block without
// a "block" field is named after its variant names, or "<stem>_<line>" (with
// a "_2", "_3" suffix when taken) if none are given; unnamed variants get
// "<block>_<k>".

#ifndef MUTFORGE_IMPORTER_H_
#define MUTFORGE_IMPORTER_H_

#include <string>
#include <string_view>
#include <vector>

#include "mutforge/document.h"
#include "mutforge/patch_bundle.h"

namespace mutforge {

struct MutantRecord {
  std::string file;
  int line = 1;
  std::string original;
  std::string replacement;
  std::string name;   // empty: generated
  std::vector<std::string> tags;
  std::string block;  // empty: derived
};

// Throws RecordError on malformed JSON or missing fields.
std::vector<MutantRecord> ParseMutantRecords(std::string_view json_text);

// Adds the records to |existing| (documents over |sources|, ordered by
// path). Throws RecordError when a file is unknown, the original text is not
// on the given line or overlaps an existing block, NameCollision when a
// block or variant name is already taken.
std::vector<MutationDocument> ImportRecords(const std::vector<MutantRecord>& records,
                                            const FileMap& sources,
                                            std::vector<MutationDocument> existing);

}  // namespace mutforge

#endif  // MUTFORGE_IMPORTER_H_
