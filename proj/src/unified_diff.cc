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

#include "mutforge/unified_diff.h"

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>

#include "mutforge/errors.h"
#include "mutforge/text_util.h"

namespace mutforge {
namespace {

std::string HeaderPath(std::string_view rest) {
  std::size_t tab = rest.find('\t');
  if (tab != std::string_view::npos) {
    rest = rest.substr(0, tab);
  }
  rest = Trim(rest);
  if (StartsWith(rest, "a/") || StartsWith(rest, "b/")) {
    rest.remove_prefix(2);
  }
  return std::string(rest);
}

bool ParseRange(std::string_view text, int* start, int* count) {
  std::size_t comma = text.find(',');
  std::string_view first = text.substr(0, comma);
  auto parse_int = [](std::string_view s, int* out) {
    if (s.empty()) {
      return false;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
    return ec == std::errc() && ptr == s.data() + s.size() && *out >= 0;
  };
  if (!parse_int(first, start)) {
    return false;
  }
  if (comma == std::string_view::npos) {
    *count = 1;
    return true;
  }
  return parse_int(text.substr(comma + 1), count);
}

std::optional<Hunk> ParseHunkHeader(std::string_view line) {
  // @@ -l,c +l,c @@ optional section text
  if (!StartsWith(line, "@@ -")) {
    return std::nullopt;
  }
  std::size_t close = line.find(" @@", 3);
  if (close == std::string_view::npos) {
    return std::nullopt;
  }
  std::string_view ranges = line.substr(4, close - 4);
  std::size_t plus = ranges.find(" +");
  if (plus == std::string_view::npos) {
    return std::nullopt;
  }
  Hunk hunk;
  if (!ParseRange(ranges.substr(0, plus), &hunk.old_start, &hunk.old_count) ||
      !ParseRange(ranges.substr(plus + 2), &hunk.new_start, &hunk.new_count)) {
    return std::nullopt;
  }
  return hunk;
}

}  // namespace

UnifiedDiff ParseUnifiedDiff(std::string_view diff_text, bool allow_empty) {
  const std::string text = NormalizeNewlines(diff_text);
  const auto lines = SplitLines(text);
  UnifiedDiff diff;
  std::size_t i = 0;
  while (i < lines.size() && !StartsWith(lines[i], "--- ")) {
    ++i;
  }
  if (i >= lines.size()) {
    Fail(ErrorKind::kMalformedDiff, "missing '---' header");
  }
  diff.old_path = HeaderPath(lines[i].substr(4));
  ++i;
  if (i >= lines.size() || !StartsWith(lines[i], "+++ ")) {
    Fail(ErrorKind::kMalformedDiff, "missing '+++' header");
  }
  diff.new_path = HeaderPath(lines[i].substr(4));
  ++i;
  while (i < lines.size()) {
    std::string_view header_line = TrimRight(lines[i]);
    auto hunk = ParseHunkHeader(header_line);
    if (!hunk) {
      Fail(ErrorKind::kMalformedDiff,
           "line " + std::to_string(i + 1) + ": expected a hunk header");
    }
    ++i;
    int old_seen = 0;
    int new_seen = 0;
    while (old_seen < hunk->old_count || new_seen < hunk->new_count) {
      if (i >= lines.size()) {
        Fail(ErrorKind::kMalformedDiff,
             "hunk " + std::to_string(diff.hunks.size() + 1) +
                 " ends before its line counts are met");
      }
      std::string_view line = lines[i];
      if (line.empty()) {
        break;
      }
      char op = line[0];
      if (op == '\\') {
        if (hunk->lines.empty()) {
          Fail(ErrorKind::kMalformedDiff, "stray no-newline marker");
        }
        std::string& last = hunk->lines.back().text;
        if (!last.empty() && last.back() == '\n') {
          last.pop_back();
        }
        ++i;
        continue;
      }
      DiffLine diff_line;
      if (line == "\n") {
        // Some tools drop the space of an empty context line.
        diff_line.op = ' ';
        diff_line.text = "\n";
      } else if (op == ' ' || op == '-' || op == '+') {
        diff_line.op = op;
        diff_line.text = std::string(line.substr(1));
        if (diff_line.text.empty() || diff_line.text.back() != '\n') {
          diff_line.text += '\n';
        }
      } else {
        Fail(ErrorKind::kMalformedDiff,
             "line " + std::to_string(i + 1) + ": unexpected hunk line");
      }
      old_seen += diff_line.op != '+' ? 1 : 0;
      new_seen += diff_line.op != '-' ? 1 : 0;
      hunk->lines.push_back(std::move(diff_line));
      ++i;
    }
    if (old_seen != hunk->old_count || new_seen != hunk->new_count) {
      Fail(ErrorKind::kMalformedDiff,
           "hunk " + std::to_string(diff.hunks.size() + 1) +
               " line counts do not match its body");
    }
    if (i < lines.size() && StartsWith(lines[i], "\\")) {
      std::string& last = hunk->lines.back().text;
      if (!last.empty() && last.back() == '\n') {
        last.pop_back();
      }
      ++i;
    }
    diff.hunks.push_back(std::move(*hunk));
  }
  if (diff.hunks.empty() && !allow_empty) {
    Fail(ErrorKind::kMalformedDiff, "diff has no hunks");
  }
  return diff;
}

std::string ApplyUnifiedDiff(std::string_view text,
                             const std::vector<Hunk>& hunks,
                             PatchDirection direction) {
  const bool forward = direction == PatchDirection::kForward;
  const auto lines = SplitLines(text);
  std::string out;
  std::size_t cursor = 0;
  for (std::size_t h = 0; h < hunks.size(); ++h) {
    const Hunk& hunk = hunks[h];
    const char removed = forward ? '-' : '+';
    const int start = forward ? hunk.old_start : hunk.new_start;
    const int count = forward ? hunk.old_count : hunk.new_count;
    std::size_t index = count == 0 ? static_cast<std::size_t>(start)
                                   : static_cast<std::size_t>(std::max(start, 1) - 1);
    const std::string where = "hunk " + std::to_string(h + 1);
    if (index < cursor) {
      Fail(ErrorKind::kContextMismatch, where + " overlaps the previous hunk");
    }
    if (index > lines.size()) {
      Fail(ErrorKind::kContextMismatch,
           where + " starts past the end of the file (line " +
               std::to_string(index + 1) + ")");
    }
    for (std::size_t k = cursor; k < index; ++k) {
      out.append(lines[k]);
    }
    std::size_t position = index;
    for (const DiffLine& line : hunk.lines) {
      if (line.op != ' ' && line.op != removed) {
        continue;
      }
      if (position >= lines.size() || lines[position] != line.text) {
        std::string found =
            position < lines.size() ? std::string(TrimRight(lines[position]))
                                    : std::string("<end of file>");
        Fail(ErrorKind::kContextMismatch,
             where + ": line " + std::to_string(position + 1) +
                 " expected '" + std::string(TrimRight(line.text)) +
                 "' but found '" + found + "'");
      }
      ++position;
    }
    for (const DiffLine& line : hunk.lines) {
      if (line.op != removed) {
        out += line.text;
      }
    }
    cursor = position;
  }
  for (std::size_t k = cursor; k < lines.size(); ++k) {
    out.append(lines[k]);
  }
  return out;
}

namespace {

enum class EditOp { kEqual, kDelete, kInsert };

struct Edit {
  EditOp op;
  std::size_t old_index;
  std::size_t new_index;
};

// Myers' O((N+M)D) shortest edit script.
std::vector<Edit> ShortestEditScript(const std::vector<std::string_view>& a,
                                     const std::vector<std::string_view>& b) {
  const long n = static_cast<long>(a.size());
  const long m = static_cast<long>(b.size());
  const long max = n + m;
  const long offset = max + 1;
  std::vector<long> v(2 * max + 3, 0);
  std::vector<std::vector<long>> trace;
  long final_d = 0;
  for (long d = 0; d <= max; ++d) {
    trace.push_back(v);
    bool done = false;
    for (long k = -d; k <= d; k += 2) {
      long x;
      if (k == -d || (k != d && v[offset + k - 1] < v[offset + k + 1])) {
        x = v[offset + k + 1];
      } else {
        x = v[offset + k - 1] + 1;
      }
      long y = x - k;
      while (x < n && y < m && a[x] == b[y]) {
        ++x;
        ++y;
      }
      v[offset + k] = x;
      if (x >= n && y >= m) {
        done = true;
        break;
      }
    }
    if (done) {
      final_d = d;
      trace.push_back(v);
      break;
    }
  }
  std::vector<Edit> edits;
  long x = n;
  long y = m;
  for (long d = final_d; d > 0; --d) {
    const std::vector<long>& prev = trace[d];
    long k = x - y;
    long prev_k;
    if (k == -d || (k != d && prev[offset + k - 1] < prev[offset + k + 1])) {
      prev_k = k + 1;
    } else {
      prev_k = k - 1;
    }
    long prev_x = prev[offset + prev_k];
    long prev_y = prev_x - prev_k;
    while (x > prev_x && y > prev_y) {
      --x;
      --y;
      edits.push_back({EditOp::kEqual, static_cast<std::size_t>(x),
                       static_cast<std::size_t>(y)});
    }
    if (x == prev_x) {
      --y;
      edits.push_back({EditOp::kInsert, static_cast<std::size_t>(x),
                       static_cast<std::size_t>(y)});
    } else {
      --x;
      edits.push_back({EditOp::kDelete, static_cast<std::size_t>(x),
                       static_cast<std::size_t>(y)});
    }
  }
  while (x > 0 && y > 0) {
    --x;
    --y;
    edits.push_back({EditOp::kEqual, static_cast<std::size_t>(x),
                     static_cast<std::size_t>(y)});
  }
  std::reverse(edits.begin(), edits.end());
  return edits;
}

}  // namespace

std::vector<Hunk> DiffLines(std::string_view old_text, std::string_view new_text,
                            int context) {
  const auto a = SplitLines(old_text);
  const auto b = SplitLines(new_text);
  const auto edits = ShortestEditScript(a, b);
  std::vector<std::size_t> changes;
  for (std::size_t i = 0; i < edits.size(); ++i) {
    if (edits[i].op != EditOp::kEqual) {
      changes.push_back(i);
    }
  }
  std::vector<Hunk> hunks;
  const std::size_t ctx = static_cast<std::size_t>(std::max(context, 0));
  std::size_t g = 0;
  while (g < changes.size()) {
    std::size_t first = changes[g];
    std::size_t last = first;
    while (g + 1 < changes.size() && changes[g + 1] - last <= 2 * ctx + 1) {
      last = changes[++g];
    }
    ++g;
    std::size_t begin = first >= ctx ? first - ctx : 0;
    std::size_t end = std::min(last + ctx, edits.size() - 1);
    Hunk hunk;
    // Old/new lines preceding the hunk.
    std::size_t old_before = edits[begin].old_index;
    std::size_t new_before = edits[begin].new_index;
    for (std::size_t i = begin; i <= end; ++i) {
      const Edit& edit = edits[i];
      switch (edit.op) {
        case EditOp::kEqual:
          hunk.lines.push_back({' ', std::string(a[edit.old_index])});
          ++hunk.old_count;
          ++hunk.new_count;
          break;
        case EditOp::kDelete:
          hunk.lines.push_back({'-', std::string(a[edit.old_index])});
          ++hunk.old_count;
          break;
        case EditOp::kInsert:
          hunk.lines.push_back({'+', std::string(b[edit.new_index])});
          ++hunk.new_count;
          break;
      }
    }
    hunk.old_start = static_cast<int>(old_before) + (hunk.old_count > 0 ? 1 : 0);
    hunk.new_start = static_cast<int>(new_before) + (hunk.new_count > 0 ? 1 : 0);
    hunks.push_back(std::move(hunk));
  }
  return hunks;
}

std::string FormatUnifiedDiff(const std::string& path,
                              const std::vector<Hunk>& hunks) {
  std::string out = "diff --git a/" + path + " b/" + path + "\n";
  out += "--- a/" + path + "\n";
  out += "+++ b/" + path + "\n";
  for (const Hunk& hunk : hunks) {
    out += "@@ -" + std::to_string(hunk.old_start) + "," +
           std::to_string(hunk.old_count) + " +" +
           std::to_string(hunk.new_start) + "," +
           std::to_string(hunk.new_count) + " @@\n";
    for (const DiffLine& line : hunk.lines) {
      out += line.op;
      out += line.text;
      if (line.text.empty() || line.text.back() != '\n') {
        out += "\n\\ No newline at end of file\n";
      }
    }
  }
  return out;
}

std::string GenerateUnifiedDiff(std::string_view old_text,
                                std::string_view new_text,
                                const std::string& path, int context) {
  auto hunks = DiffLines(old_text, new_text, context);
  if (hunks.empty()) {
    return "";
  }
  return FormatUnifiedDiff(path, hunks);
}

}  // namespace mutforge
