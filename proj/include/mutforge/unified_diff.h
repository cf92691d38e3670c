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

// Line-based unified diffs: parsing, zero-fuzz application in either
// direction, and generation from a minimal (Myers) edit script.
//
// Dialect: optional "diff --git" preamble, "--- a/<path>", "+++ b/<path>",
// hunks "@@ -l,c +l,c @@" with lines prefixed ' ', '-' or '+', and
// "\ No newline at end of file" after a line lacking its newline. A hunk
// with count 0 names the line after which the change applies.

#ifndef MUTFORGE_UNIFIED_DIFF_H_
#define MUTFORGE_UNIFIED_DIFF_H_

#include <string>
#include <string_view>
#include <vector>

namespace mutforge {

struct DiffLine {
  char op = ' ';  // ' ', '-' or '+'
  // Line text including its '\n' unless it is the unterminated last line.
  std::string text;

  bool operator==(const DiffLine&) const = default;
};

struct Hunk {
  int old_start = 0;
  int old_count = 0;
  int new_start = 0;
  int new_count = 0;
  std::vector<DiffLine> lines;

  bool operator==(const Hunk&) const = default;
};

struct UnifiedDiff {
  std::string old_path;
  std::string new_path;
  std::vector<Hunk> hunks;
};

enum class PatchDirection { kForward, kReverse };

// Throws MalformedDiff on bad headers, a hunk whose body disagrees with its
// counts, or (unless |allow_empty|) a diff with no hunks.
UnifiedDiff ParseUnifiedDiff(std::string_view diff_text,
                             bool allow_empty = false);

// Throws ContextMismatch naming the hunk and the first mismatching line.
std::string ApplyUnifiedDiff(std::string_view text,
                             const std::vector<Hunk>& hunks,
                             PatchDirection direction);

// Hunks for turning |old_text| into |new_text| with |context| lines of
// context; overlapping or touching hunks are merged.
std::vector<Hunk> DiffLines(std::string_view old_text, std::string_view new_text,
                            int context = 3);

// Complete diff text with headers; empty when the inputs are equal.
std::string GenerateUnifiedDiff(std::string_view old_text,
                                std::string_view new_text,
                                const std::string& path, int context = 3);

std::string FormatUnifiedDiff(const std::string& path,
                              const std::vector<Hunk>& hunks);

}  // namespace mutforge

#endif  // MUTFORGE_UNIFIED_DIFF_H_
