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

#include "mutforge/preprocessor_repr.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "mutforge/errors.h"
#include "mutforge/text_util.h"

namespace mutforge {
namespace {

struct Directive {
  std::string word;
  std::string_view rest;
};

std::optional<Directive> ParseDirective(std::string_view line) {
  std::string_view text = Trim(line);
  if (text.empty() || text[0] != '#') {
    return std::nullopt;
  }
  text.remove_prefix(1);
  text = TrimLeft(text);
  std::size_t n = 0;
  while (n < text.size() && IsIdentChar(text[n])) {
    ++n;
  }
  return Directive{std::string(text.substr(0, n)), Trim(text.substr(n))};
}

struct Trailer {
  std::map<std::string, std::string> fields;
};

// Parses "/* key=value key=[a, b] */". Returns nullopt when |text| is not a
// comment at all.
std::optional<Trailer> ParseTrailer(std::string_view text,
                                    const std::string& where) {
  text = Trim(text);
  if (!StartsWith(text, "/*") || !EndsWith(text, "*/") || text.size() < 4) {
    return std::nullopt;
  }
  std::string_view inner = Trim(text.substr(2, text.size() - 4));
  Trailer trailer;
  while (!inner.empty()) {
    std::size_t eq = inner.find('=');
    if (eq == std::string_view::npos) {
      Fail(ErrorKind::kParseError, where + ": malformed trailer field");
    }
    std::string key(Trim(inner.substr(0, eq)));
    inner = TrimLeft(inner.substr(eq + 1));
    std::size_t end;
    if (!inner.empty() && inner[0] == '[') {
      end = inner.find(']');
      if (end == std::string_view::npos) {
        Fail(ErrorKind::kParseError, where + ": unterminated tag list");
      }
      ++end;
    } else {
      end = 0;
      while (end < inner.size() && !IsSpace(inner[end])) {
        ++end;
      }
    }
    trailer.fields[key] = std::string(inner.substr(0, end));
    inner = TrimLeft(inner.substr(end));
  }
  return trailer;
}

std::vector<std::string> TagsField(const Trailer& trailer, const std::string& key,
                                   const std::string& where) {
  auto it = trailer.fields.find(key);
  if (it == trailer.fields.end()) {
    return {};
  }
  std::string_view value = it->second;
  std::vector<std::string> tags;
  if (value.size() < 2 || value.front() != '[' || value.back() != ']' ||
      !ParseTagList(value.substr(1, value.size() - 2), &tags)) {
    Fail(ErrorKind::kParseError, where + ": malformed " + key);
  }
  return tags;
}

struct Conditional {
  std::string flag;
  std::optional<Trailer> trailer;
};

// Matches "defined(M_X) [/* ... */]" where the flag carries the M_ prefix.
std::optional<Conditional> ParseMutationCondition(std::string_view rest,
                                                  const std::string& where) {
  if (!StartsWith(rest, "defined(")) {
    return std::nullopt;
  }
  std::size_t close = rest.find(')');
  if (close == std::string_view::npos) {
    return std::nullopt;
  }
  std::string_view flag = Trim(rest.substr(8, close - 8));
  if (!StartsWith(flag, "M_") || !IsIdentifier(flag)) {
    return std::nullopt;
  }
  Conditional cond;
  cond.flag = std::string(flag);
  std::string_view after = Trim(rest.substr(close + 1));
  if (!after.empty()) {
    cond.trailer = ParseTrailer(after, where);
    if (!cond.trailer) {
      Fail(ErrorKind::kParseError, where + ": unexpected text after condition");
    }
  }
  return cond;
}

std::string VariantNameFor(const Conditional& cond, const std::string& where) {
  std::string name;
  if (cond.trailer && cond.trailer->fields.count("mutant")) {
    name = cond.trailer->fields.at("mutant");
    if (FlagForVariant(name) != cond.flag) {
      Fail(ErrorKind::kParseError, where + ": flag " + cond.flag +
                                       " does not match mutant '" + name + "'");
    }
  } else {
    name = ToLowerAscii(std::string_view(cond.flag).substr(2));
  }
  if (!IsIdentifier(name)) {
    Fail(ErrorKind::kParseError, where + ": invalid mutant name '" + name + "'");
  }
  return name;
}

bool IsOpener(const std::string& word) {
  return word == "if" || word == "ifdef" || word == "ifndef";
}

std::string IndentOf(std::string_view line) {
  std::size_t n = 0;
  while (n < line.size() && (line[n] == ' ' || line[n] == '\t')) {
    ++n;
  }
  return std::string(line.substr(0, n));
}

bool IsMutationIf(std::string_view line) {
  auto directive = ParseDirective(line);
  if (!directive || directive->word != "if") {
    return false;
  }
  std::string_view rest = directive->rest;
  if (!StartsWith(rest, "defined(")) {
    return false;
  }
  std::size_t close = rest.find(')');
  return close != std::string_view::npos &&
         StartsWith(Trim(rest.substr(8, close - 8)), "M_");
}

}  // namespace

std::string FlagForVariant(std::string_view variant_name) {
  return "M_" + ToUpperAscii(variant_name);
}

MutationDocument ParsePreprocessor(std::string_view input,
                                   const std::string& path) {
  const std::string text = NormalizeNewlines(input);
  const auto lines = SplitLines(text);
  MutationDocument doc;
  doc.path = path;
  std::string code;
  std::size_t i = 0;
  auto where = [&](std::size_t line) {
    return path + ":" + std::to_string(line + 1);
  };
  while (i < lines.size()) {
    auto directive = ParseDirective(lines[i]);
    std::optional<Conditional> cond;
    if (directive && directive->word == "if") {
      cond = ParseMutationCondition(directive->rest, where(i));
    }
    if (!cond) {
      code.append(lines[i]);
      ++i;
      continue;
    }
    if (!cond->trailer || !cond->trailer->fields.count("variation")) {
      Fail(ErrorKind::kParseError, where(i) + ": missing variation trailer");
    }
    for (const auto& [key, value] : cond->trailer->fields) {
      if (key != "variation" && key != "tags" && key != "mutant" &&
          key != "mutant_tags") {
        Fail(ErrorKind::kParseError, where(i) + ": unknown trailer field " + key);
      }
    }
    MutationBlock block;
    block.name = cond->trailer->fields.at("variation");
    if (!IsIdentifier(block.name)) {
      Fail(ErrorKind::kParseError, where(i) + ": invalid variation name");
    }
    block.tags = TagsField(*cond->trailer, "tags", where(i));
    block.indent = IndentOf(lines[i]);
    block.variants.push_back(Variant{VariantNameFor(*cond, where(i)),
                                     TagsField(*cond->trailer, "mutant_tags",
                                               where(i)),
                                     ""});
    std::string* current = &block.variants.back().body;
    bool in_else = false;
    int depth = 0;
    bool closed = false;
    ++i;
    for (; i < lines.size(); ++i) {
      auto inner = ParseDirective(lines[i]);
      if (inner && IsMutationIf(lines[i])) {
        Fail(ErrorKind::kParseError, where(i) + ": nested mutation block");
      }
      if (inner && depth == 0) {
        if (inner->word == "elif") {
          if (in_else) {
            Fail(ErrorKind::kParseError, where(i) + ": #elif after #else");
          }
          auto next = ParseMutationCondition(inner->rest, where(i));
          if (!next) {
            Fail(ErrorKind::kParseError,
                 where(i) + ": #elif is not a mutation flag test");
          }
          if (next->trailer) {
            for (const auto& [key, value] : next->trailer->fields) {
              if (key != "mutant" && key != "mutant_tags") {
                Fail(ErrorKind::kParseError,
                     where(i) + ": unexpected trailer field " + key);
              }
            }
          }
          std::vector<std::string> tags;
          if (next->trailer) {
            tags = TagsField(*next->trailer, "mutant_tags", where(i));
          }
          block.variants.push_back(
              Variant{VariantNameFor(*next, where(i)), std::move(tags), ""});
          current = &block.variants.back().body;
          continue;
        }
        if (inner->word == "else") {
          if (in_else) {
            Fail(ErrorKind::kParseError, where(i) + ": duplicate #else");
          }
          in_else = true;
          current = &block.base;
          continue;
        }
        if (inner->word == "endif") {
          closed = true;
          ++i;
          break;
        }
      }
      if (inner) {
        if (IsOpener(inner->word)) {
          ++depth;
        } else if (inner->word == "endif") {
          --depth;
        }
      }
      current->append(lines[i]);
    }
    if (!closed) {
      Fail(ErrorKind::kParseError,
           path + ": unbalanced directives in block '" + block.name + "'");
    }
    if (!in_else) {
      Fail(ErrorKind::kParseError,
           path + ": block '" + block.name + "' has no #else (base) branch");
    }
    doc.segments.emplace_back(CodeSegment{std::move(code)});
    code.clear();
    doc.segments.emplace_back(std::move(block));
  }
  doc.segments.emplace_back(CodeSegment{std::move(code)});
  doc.Canonicalize();
  return doc;
}

namespace {

void CheckBranchBody(const std::string& body, const std::string& where) {
  int depth = 0;
  for (auto line : SplitLines(body)) {
    auto directive = ParseDirective(line);
    if (!directive) {
      continue;
    }
    if (IsMutationIf(line)) {
      Fail(ErrorKind::kParseError, where + ": body holds a mutation conditional");
    }
    if (IsOpener(directive->word)) {
      ++depth;
    } else if (directive->word == "endif") {
      if (depth == 0) {
        Fail(ErrorKind::kParseError, where + ": body has an unmatched #endif");
      }
      --depth;
    } else if (depth == 0 &&
               (directive->word == "elif" || directive->word == "else")) {
      Fail(ErrorKind::kParseError,
           where + ": body has a top-level #" + directive->word);
    }
  }
  if (depth != 0) {
    Fail(ErrorKind::kParseError, where + ": body has an unmatched #if");
  }
}

std::string VariantExtras(const Variant& variant) {
  std::string extras;
  if (ToLowerAscii(variant.name) != variant.name) {
    extras += " mutant=" + variant.name;
  }
  if (!variant.tags.empty()) {
    extras += " mutant_tags=" + FormatTagList(variant.tags);
  }
  return extras;
}

}  // namespace

std::string RenderPreprocessor(const MutationDocument& doc) {
  std::set<std::string> flags;
  std::string out;
  for (const auto& segment : doc.segments) {
    if (const auto* code = std::get_if<CodeSegment>(&segment)) {
      for (auto line : SplitLines(code->text)) {
        if (IsMutationIf(line)) {
          Fail(ErrorKind::kParseError,
               doc.path + ": code line looks like a mutation conditional");
        }
      }
      out += code->text;
      continue;
    }
    const auto& block = std::get<MutationBlock>(segment);
    const std::string where = doc.path + ": block '" + block.name + "'";
    auto ends_line = [](const std::string& body) {
      return body.empty() || body.back() == '\n';
    };
    bool aligned = (out.empty() || out.back() == '\n') && ends_line(block.base);
    for (const auto& variant : block.variants) {
      aligned = aligned && ends_line(variant.body);
      if (!flags.insert(FlagForVariant(variant.name)).second) {
        Fail(ErrorKind::kFlagCollision,
             where + ": flag " + FlagForVariant(variant.name) +
                 " is used by more than one variant");
      }
      CheckBranchBody(variant.body, where);
    }
    if (!aligned) {
      Fail(ErrorKind::kNotLineAligned, where + " does not cover whole lines");
    }
    CheckBranchBody(block.base, where);
    for (std::size_t k = 0; k < block.variants.size(); ++k) {
      const Variant& variant = block.variants[k];
      out += block.indent;
      if (k == 0) {
        out += "#if defined(" + FlagForVariant(variant.name) +
               ") /* variation=" + block.name;
        if (!block.tags.empty()) {
          out += " tags=" + FormatTagList(block.tags);
        }
        out += VariantExtras(variant) + " */\n";
      } else {
        out += "#elif defined(" + FlagForVariant(variant.name) + ")";
        std::string extras = VariantExtras(variant);
        if (!extras.empty()) {
          out += " /*" + extras + " */";
        }
        out += "\n";
      }
      out += variant.body;
    }
    out += block.indent + "#else\n" + block.base + block.indent + "#endif\n";
  }
  return out;
}

std::vector<std::string> EmitDefines(const std::vector<MutationDocument>& docs) {
  std::vector<std::string> defines;
  for (const auto& doc : docs) {
    for (const MutationBlock* block : doc.Blocks()) {
      if (block->active) {
        defines.push_back(FlagForVariant(*block->active));
      }
    }
  }
  std::sort(defines.begin(), defines.end());
  return defines;
}

}  // namespace mutforge
