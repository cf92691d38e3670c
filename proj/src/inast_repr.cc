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

#include "mutforge/inast_repr.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

#include "json.hpp"
#include "mutforge/errors.h"
#include "mutforge/text_util.h"

namespace mutforge {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kGuardCall = "mutation_active";
constexpr std::string_view kBaseComment = "// base";

std::size_t LineOf(std::string_view text, std::size_t offset) {
  return 1 + CountNewlines(text.substr(0, offset));
}

bool IsBlankLine(std::string_view line) { return Trim(line).empty(); }

// Replaces the common leading whitespace of the nonblank lines by |target|.
// Blank lines lose their whitespace.
std::string Reindent(std::string_view body, std::string_view target) {
  const auto lines = SplitLines(body);
  std::optional<std::string_view> common;
  for (std::string_view line : lines) {
    if (IsBlankLine(line)) {
      continue;
    }
    std::string_view ws = LeadingWhitespace(line);
    if (!common) {
      common = ws;
      continue;
    }
    std::size_t n = 0;
    while (n < common->size() && n < ws.size() && (*common)[n] == ws[n]) {
      ++n;
    }
    common = common->substr(0, n);
  }
  std::string out;
  for (std::string_view line : lines) {
    if (IsBlankLine(line)) {
      if (EndsWith(line, "\n")) {
        out += '\n';
      }
      continue;
    }
    out += target;
    out += line.substr(common->size());
  }
  return out;
}

std::string GuardText(const std::string& variant) {
  return std::string(kGuardCall) + "(\"" + variant + "\")";
}

std::string MarkerText(const MutationBlock& block, bool multiline) {
  std::string out;
  if (multiline) {
    const std::string& i = block.indent;
    const std::string body_indent = i + "    ";
    out += i + "match () {\n";
    for (const auto& variant : block.variants) {
      out += i + "  _ if " + GuardText(variant.name) + " => {\n";
      out += Reindent(variant.body, body_indent);
      out += i + "  }\n";
    }
    out += i + "  _ => { " + std::string(kBaseComment) + "\n";
    out += Reindent(block.base, body_indent);
    out += i + "  }\n";
    out += i + "}\n";
    return out;
  }
  out += "match () {";
  for (const auto& variant : block.variants) {
    out += " _ if " + GuardText(variant.name) + " => { " + variant.body + " }";
  }
  out += " _ => { " + block.base + " } }";
  return out;
}

std::optional<UnitCategory> CommonCategory(const MutationBlock& block,
                                           const ParseOracle& oracle) {
  std::optional<UnitCategory> category = oracle.ParseUnit(block.base);
  if (!category) {
    return std::nullopt;
  }
  for (const auto& variant : block.variants) {
    if (oracle.ParseUnit(variant.body) != category) {
      return std::nullopt;
    }
  }
  return category;
}

// Program text with block |marked| (or every block when nullopt) written as
// a marker and the others at base.
std::string RenderMarkers(const MutationDocument& doc,
                          std::optional<std::size_t> marked) {
  std::string out;
  std::size_t index = 0;
  for (const auto& segment : doc.segments) {
    if (const auto* code = std::get_if<CodeSegment>(&segment)) {
      out += code->text;
      continue;
    }
    const auto& block = std::get<MutationBlock>(segment);
    if (!marked || *marked == index) {
      out += MarkerText(block, IsLineAligned(doc, index));
    } else {
      out += block.base;
    }
    ++index;
  }
  return out;
}

struct Tree {
  std::vector<NodeSpan> nodes;
  std::vector<std::vector<int>> children;
};

Tree BuildTree(std::vector<NodeSpan> nodes) {
  Tree tree;
  tree.children.resize(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].parent >= 0) {
      tree.children[nodes[i].parent].push_back(static_cast<int>(i));
    }
  }
  for (auto& list : tree.children) {
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      return nodes[a].begin < nodes[b].begin;
    });
  }
  tree.nodes = std::move(nodes);
  return tree;
}

// One arm of a candidate marker.
struct ArmView {
  std::string_view pattern;
  std::optional<std::string_view> guard;
  const NodeSpan* body = nullptr;
};

std::optional<std::string> GuardVariant(std::string_view guard) {
  std::string compact = StripWhitespace(guard);
  std::string prefix = std::string(kGuardCall) + "(\"";
  if (!StartsWith(compact, prefix) || !EndsWith(compact, "\")")) {
    return std::nullopt;
  }
  std::string name = compact.substr(prefix.size(), compact.size() - prefix.size() - 2);
  if (!IsIdentifier(name)) {
    return std::nullopt;
  }
  return name;
}

// Splits a raw arm body (the text between its braces) in multi-line form.
std::optional<std::string> MultilineBody(std::string_view raw, bool base,
                                         const std::string& indent) {
  const std::size_t first_newline = raw.find('\n');
  if (base && first_newline != std::string_view::npos &&
      Trim(raw.substr(0, first_newline)) == kBaseComment) {
    raw.remove_prefix(first_newline);
  }
  if (!StartsWith(raw, "\n")) {
    return std::nullopt;
  }
  std::size_t last = raw.rfind('\n');
  if (!Trim(raw.substr(last)).empty()) {
    return std::nullopt;
  }
  return Reindent(raw.substr(1, last), indent);
}

std::string InlineBody(std::string_view raw) {
  if (raw.size() >= 2 && raw.front() == ' ' && raw.back() == ' ') {
    return std::string(raw.substr(1, raw.size() - 2));
  }
  return std::string(Trim(raw));
}

struct Marker {
  BlockRegion region;
  MutationBlock block;
};

std::optional<Marker> ReadMarker(std::string_view text, const Tree& tree,
                                 int match_index, const std::string& path,
                                 const InAstMetadata& metadata) {
  const NodeSpan& match = tree.nodes[match_index];
  const auto& kids = tree.children[match_index];
  if (kids.empty()) {
    return std::nullopt;
  }
  const NodeSpan& scrutinee = tree.nodes[kids[0]];
  if (StripWhitespace(text.substr(scrutinee.begin, scrutinee.end - scrutinee.begin)) !=
      "()") {
    return std::nullopt;
  }
  std::vector<ArmView> arms;
  bool uses_marker = false;
  for (std::size_t k = 1; k < kids.size(); ++k) {
    ArmView arm;
    for (int child : tree.children[kids[k]]) {
      const NodeSpan& node = tree.nodes[child];
      std::string_view node_text = text.substr(node.begin, node.end - node.begin);
      if (node.kind == "pattern") {
        arm.pattern = node_text;
      } else if (node.kind == "guard") {
        arm.guard = node_text;
        if (StartsWith(Trim(node_text), kGuardCall)) {
          uses_marker = true;
        }
      } else {
        arm.body = &node;
      }
    }
    arms.push_back(arm);
  }
  if (!uses_marker) {
    return std::nullopt;
  }
  const std::string where = path + ":" + std::to_string(LineOf(text, match.begin));
  if (arms.size() < 2 || arms.back().guard || Trim(arms.back().pattern) != "_") {
    Fail(ErrorKind::kMalformedMarker, where + ": mutation marker needs a final '_' arm");
  }
  std::vector<std::string> names;
  std::vector<std::string_view> raws;
  for (std::size_t k = 0; k < arms.size(); ++k) {
    const ArmView& arm = arms[k];
    if (!arm.body || arm.body->kind != "block" || Trim(arm.pattern) != "_") {
      Fail(ErrorKind::kMalformedMarker,
           where + ": every marker arm must be '_' with a braced body");
    }
    raws.push_back(text.substr(arm.body->begin + 1, arm.body->end - arm.body->begin - 2));
    if (k + 1 == arms.size()) {
      break;
    }
    std::optional<std::string> name =
        arm.guard ? GuardVariant(*arm.guard) : std::nullopt;
    if (!name) {
      Fail(ErrorKind::kMalformedMarker,
           where + ": marker guard must be " + std::string(kGuardCall) +
               "(\"<variant>\")");
    }
    names.push_back(*name);
  }

  Marker marker;
  // Multi-line form: the marker owns whole lines.
  std::size_t line_start = text.rfind('\n', match.begin == 0 ? 0 : match.begin - 1);
  line_start = match.begin == 0 || line_start == std::string_view::npos ? 0 : line_start + 1;
  std::string_view indent = text.substr(line_start, match.begin - line_start);
  bool multiline = Trim(indent).empty() &&
                   (match.end == text.size() || text[match.end] == '\n');
  std::vector<std::string> bodies;
  if (multiline) {
    const std::string body_indent(indent);
    for (std::size_t k = 0; k < raws.size() && multiline; ++k) {
      auto body = MultilineBody(raws[k], k + 1 == raws.size(), body_indent);
      if (!body) {
        multiline = false;
      } else {
        bodies.push_back(std::move(*body));
      }
    }
  }
  if (multiline) {
    marker.region.begin = line_start;
    marker.region.end = match.end == text.size() ? match.end : match.end + 1;
    marker.block.indent = std::string(indent);
  } else {
    bodies.clear();
    for (std::string_view raw : raws) {
      bodies.push_back(InlineBody(raw));
    }
    marker.region.begin = match.begin;
    marker.region.end = match.end;
  }
  marker.block.base = bodies.back();
  for (std::size_t k = 0; k < names.size(); ++k) {
    marker.block.variants.push_back({names[k], {}, bodies[k]});
  }
  auto info = metadata.find(names.front());
  if (info != metadata.end()) {
    marker.block.name = info->second.name;
    marker.block.tags = info->second.tags;
    for (auto& variant : marker.block.variants) {
      auto tags = info->second.variant_tags.find(variant.name);
      if (tags != info->second.variant_tags.end()) {
        variant.tags = tags->second;
      }
    }
  } else {
    marker.block.name = DeriveBlockName(names);
  }
  return marker;
}

bool IsCandidateKind(const std::string& kind) {
  return kind == "expr" || kind == "block" || kind == "match" || kind == "stmt";
}

// Collapses whitespace runs that contain a newline. A run becomes a single
// space between two identifier-like characters and disappears otherwise.
std::string Collapse(std::string_view text, char left, char right) {
  if (text.find("//") != std::string_view::npos ||
      text.find("/*") != std::string_view::npos) {
    return std::string(text);
  }
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!IsSpace(text[i])) {
      out += text[i++];
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && IsSpace(text[j])) {
      ++j;
    }
    std::string_view run = text.substr(i, j - i);
    if (run.find('\n') == std::string_view::npos) {
      out += run;
    } else {
      char before = out.empty() ? left : out.back();
      char after = j < text.size() ? text[j] : right;
      if (IsIdentChar(before) && IsIdentChar(after)) {
        out += ' ';
      }
    }
    i = j;
  }
  return out;
}

struct Pieces {
  std::string lead;
  std::string core;
  std::string trail;
};

Pieces SplitBody(std::string_view body) {
  std::string_view lead = LeadingWhitespace(body);
  if (lead.size() == body.size()) {
    return {std::string(body), "", ""};
  }
  std::string_view trail = TrailingWhitespace(body);
  return {std::string(lead),
          std::string(body.substr(lead.size(), body.size() - lead.size() - trail.size())),
          std::string(trail)};
}

// Rebuilds |doc| with block |index| covering [begin, end) of the reset text
// and holding |block|.
MutationDocument Replace(const MutationDocument& doc, std::size_t index,
                         std::size_t begin, std::size_t end, MutationBlock block) {
  const std::string reset = doc.RenderBase();
  const auto regions = doc.Regions();
  const auto blocks = doc.Blocks();
  MutationDocument out;
  out.path = doc.path;
  std::size_t cursor = 0;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    std::size_t b = j == index ? begin : regions[j].begin;
    std::size_t e = j == index ? end : regions[j].end;
    out.segments.emplace_back(CodeSegment{reset.substr(cursor, b - cursor)});
    out.segments.emplace_back(j == index ? block : *blocks[j]);
    cursor = e;
  }
  out.segments.emplace_back(CodeSegment{reset.substr(cursor)});
  out.Canonicalize();
  return out;
}

bool Acceptable(const MutationDocument& doc, std::size_t index,
                const ParseOracle& oracle) {
  const MutationBlock& block = *doc.Blocks()[index];
  return CommonCategory(block, oracle) &&
         oracle.ParseFile(RenderMarkers(doc, index));
}

}  // namespace

InAstMetadata ParseInAstMetadata(std::string_view json_text) {
  InAstMetadata metadata;
  try {
    Json json = Json::parse(json_text);
    for (const auto& entry : json.at("blocks")) {
      InAstBlockInfo info;
      info.name = entry.at("name").get<std::string>();
      info.tags = entry.value("tags", std::vector<std::string>{});
      if (entry.contains("variant_tags")) {
        for (const auto& [variant, tags] : entry["variant_tags"].items()) {
          info.variant_tags[variant] = tags.get<std::vector<std::string>>();
        }
      }
      metadata[entry.at("first_variant").get<std::string>()] = std::move(info);
    }
  } catch (const Json::exception& e) {
    Fail(ErrorKind::kParseError, std::string(kInAstMetadataFile) + ": " + e.what());
  }
  return metadata;
}

std::string RenderInAstMetadata(const std::vector<MutationDocument>& docs) {
  Json blocks = Json::array();
  for (const auto& doc : docs) {
    for (const MutationBlock* block : doc.Blocks()) {
      Json entry;
      entry["first_variant"] = block->variants.front().name;
      entry["name"] = block->name;
      entry["tags"] = block->tags;
      Json variant_tags = Json::object();
      for (const auto& variant : block->variants) {
        if (!variant.tags.empty()) {
          variant_tags[variant.name] = variant.tags;
        }
      }
      entry["variant_tags"] = std::move(variant_tags);
      blocks.push_back(std::move(entry));
    }
  }
  Json json;
  json["blocks"] = std::move(blocks);
  return json.dump(2) + "\n";
}

std::string DeriveBlockName(const std::vector<std::string>& variant_names) {
  if (variant_names.empty()) {
    return "mutation";
  }
  std::string prefix = variant_names.front();
  for (const auto& name : variant_names) {
    std::size_t n = 0;
    while (n < prefix.size() && n < name.size() && prefix[n] == name[n]) {
      ++n;
    }
    prefix.resize(n);
  }
  while (!prefix.empty() &&
         (prefix.back() == '_' || std::isdigit(static_cast<unsigned char>(prefix.back())))) {
    prefix.pop_back();
  }
  if (!IsIdentifier(prefix)) {
    return "mutation_" + variant_names.front();
  }
  return prefix;
}

MutationDocument ExtractInAst(std::string_view raw_text, const std::string& path,
                              const ParseOracle& oracle,
                              const InAstMetadata& metadata) {
  const std::string text = NormalizeNewlines(raw_text);
  MutationDocument doc;
  doc.path = path;
  if (text.find(kGuardCall) == std::string::npos || !oracle.Handles(path)) {
    doc.segments.emplace_back(CodeSegment{text});
    doc.Canonicalize();
    return doc;
  }
  std::vector<NodeSpan> spans;
  try {
    spans = oracle.NodeSpans(text);
  } catch (const Error& e) {
    Fail(ErrorKind::kParseError, path + ": " + e.what());
  }
  Tree tree = BuildTree(std::move(spans));
  std::vector<int> matches;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    if (tree.nodes[i].kind == "match") {
      matches.push_back(static_cast<int>(i));
    }
  }
  std::sort(matches.begin(), matches.end(), [&](int a, int b) {
    return tree.nodes[a].begin < tree.nodes[b].begin;
  });
  std::size_t cursor = 0;
  for (int index : matches) {
    if (tree.nodes[index].begin < cursor) {
      continue;  // Nested inside a marker already taken.
    }
    std::optional<Marker> marker = ReadMarker(text, tree, index, path, metadata);
    if (!marker) {
      continue;
    }
    if (marker->region.begin < cursor) {
      Fail(ErrorKind::kMalformedMarker,
           path + ":" + std::to_string(LineOf(text, marker->region.begin)) +
               ": markers share a line");
    }
    doc.segments.emplace_back(
        CodeSegment{text.substr(cursor, marker->region.begin - cursor)});
    doc.segments.emplace_back(std::move(marker->block));
    cursor = marker->region.end;
  }
  doc.segments.emplace_back(CodeSegment{text.substr(cursor)});
  doc.Canonicalize();
  return doc;
}

std::string RenderInAst(const MutationDocument& doc, const ParseOracle& oracle) {
  const auto blocks = doc.Blocks();
  if (blocks.empty()) {
    return doc.RenderBase();
  }
  const auto regions = doc.Regions();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!CommonCategory(*blocks[i], oracle)) {
      Fail(ErrorKind::kNotNormalized,
           doc.path + ":" + std::to_string(regions[i].anchor_line) + ": block '" +
               blocks[i]->name + "' is not a syntactic unit in every variant");
    }
  }
  std::string text = RenderMarkers(doc, std::nullopt);
  if (!oracle.ParseFile(text)) {
    Fail(ErrorKind::kNotNormalized,
         doc.path + ": rendered in-AST source does not parse");
  }
  return text;
}

std::string InAstHelperSource() {
  return R"(// Generated by mutforge; do not edit.
//
// mutation_active(name) is true when `name` appears in the comma-separated
// MUTFORGE_ACTIVE environment variable. The list is read once per process.

use std::collections::HashSet;
use std::sync::OnceLock;

static ACTIVE: OnceLock<HashSet<String>> = OnceLock::new();

pub fn mutation_active(name: &str) -> bool {
    ACTIVE
        .get_or_init(|| {
            std::env::var("MUTFORGE_ACTIVE")
                .map(|list| {
                    list.split(',')
                        .filter(|s| !s.is_empty())
                        .map(String::from)
                        .collect()
                })
                .unwrap_or_default()
        })
        .contains(name)
}
)";
}

MutationDocument NormalizeBlock(const MutationDocument& doc,
                                std::size_t block_index,
                                const ParseOracle& oracle) {
  const auto blocks = doc.Blocks();
  const auto regions = doc.Regions();
  const MutationBlock& block = *blocks[block_index];
  const std::string where = doc.path + ":" +
                            std::to_string(regions[block_index].anchor_line) +
                            ": block '" + block.name + "'";
  if (!oracle.Handles(doc.path)) {
    Fail(ErrorKind::kNoValidUnit,
         where + ": no in-AST grammar for this file type");
  }
  if (Acceptable(doc, block_index, oracle)) {
    return doc;
  }
  const std::string reset = doc.RenderBase();
  std::vector<NodeSpan> spans;
  try {
    spans = oracle.NodeSpans(reset);
  } catch (const Error& e) {
    Fail(ErrorKind::kParseError, doc.path + ": " + e.what());
  }
  const std::size_t s = regions[block_index].begin;
  const std::size_t e = regions[block_index].end;
  const Pieces base_pieces = SplitBody(block.base);
  const std::size_t cs = s + base_pieces.lead.size();
  const std::size_t ce = cs + base_pieces.core.size();

  // Smallest node covering the base core; deeper wins ties.
  auto depth = [&](int n) {
    int d = 0;
    for (; n >= 0; n = spans[n].parent) {
      ++d;
    }
    return d;
  };
  int start = -1;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (spans[i].begin > cs || spans[i].end < ce) {
      continue;
    }
    if (start < 0) {
      start = static_cast<int>(i);
      continue;
    }
    std::size_t len = spans[i].end - spans[i].begin;
    std::size_t best = spans[start].end - spans[start].begin;
    if (len < best || (len == best && depth(static_cast<int>(i)) > depth(start))) {
      start = static_cast<int>(i);
    }
  }

  auto line_start = [&](std::size_t pos) {
    std::size_t nl = pos == 0 ? std::string::npos : reset.rfind('\n', pos - 1);
    return nl == std::string::npos ? 0 : nl + 1;
  };

  for (int n = start; n >= 0; n = spans[n].parent) {
    if (!IsCandidateKind(spans[n].kind)) {
      continue;
    }
    const std::size_t ns = spans[n].begin;
    const std::size_t ne = spans[n].end;
    if (ns >= s && ne <= e) {
      continue;  // Same text as the region itself.
    }
    const std::string_view before_on_line =
        std::string_view(reset).substr(line_start(ns), ns - line_start(ns));
    const bool own_line_start = ns < s && Trim(before_on_line).empty();
    std::size_t new_begin = ns < s ? (own_line_start ? line_start(ns) : ns) : s;
    std::size_t new_end = e;
    bool own_line_end = false;
    if (ne > e) {
      std::size_t line_end = reset.find('\n', ne);
      std::size_t stop = line_end == std::string::npos ? reset.size() : line_end;
      own_line_end = Trim(std::string_view(reset).substr(ne, stop - ne)).empty();
      new_end = own_line_end
                    ? (line_end == std::string::npos ? reset.size() : line_end + 1)
                    : ne;
    }
    for (std::size_t j = 0; j < regions.size(); ++j) {
      if (j == block_index) {
        continue;
      }
      bool overlaps = regions[j].begin < new_end && new_begin < regions[j].end;
      bool inside_empty = regions[j].begin == regions[j].end &&
                          new_begin < regions[j].begin && regions[j].begin < new_end;
      if (overlaps || inside_empty) {
        Fail(ErrorKind::kNoValidUnit,
             where + ": enclosing syntax overlaps block '" + blocks[j]->name + "'");
      }
    }
    const bool starts_line = new_begin == line_start(new_begin);
    const bool region_has_newline = new_end > 0 && reset[new_end - 1] == '\n';

    auto widen = [&](const std::string& body) {
      Pieces p = SplitBody(body);
      std::string lead;
      std::string prefix;
      if (ns < s) {
        prefix = reset.substr(ns, s - ns);
        if (own_line_start) {
          lead = p.lead;
        } else {
          prefix += p.lead;
        }
      } else {
        lead = p.lead;
      }
      std::string suffix;
      std::string trail;
      if (ne > e) {
        suffix = p.trail + reset.substr(e, ne - e);
        trail = own_line_end && region_has_newline ? "\n" : "";
      } else {
        trail = p.trail;
      }
      std::string core_text = p.core;
      char core_first = core_text.empty() ? '\0' : core_text.front();
      char core_last = core_text.empty() ? '\0' : core_text.back();
      std::string out = lead;
      out += Collapse(prefix, lead.empty() ? '\0' : lead.back(),
                      core_first ? core_first : (suffix.empty() ? '\0' : suffix.front()));
      char last = out.empty() ? '\0' : out.back();
      out += core_text;
      out += Collapse(suffix, core_last ? core_last : last,
                      trail.empty() ? '\0' : trail.front());
      out += trail;
      if (starts_line && region_has_newline && !out.empty() && out.back() != '\n') {
        out += '\n';
      }
      return out;
    };

    MutationBlock widened = block;
    widened.base = widen(block.base);
    for (auto& variant : widened.variants) {
      variant.body = widen(variant.body);
    }
    MutationDocument candidate =
        Replace(doc, block_index, new_begin, new_end, std::move(widened));
    if (Acceptable(candidate, block_index, oracle)) {
      return candidate;
    }
  }
  Fail(ErrorKind::kNoValidUnit,
       where + ": no enclosing syntax node is a unit for every variant");
}

void NormalizeDocument(MutationDocument* doc, const ParseOracle& oracle) {
  const std::size_t count = doc->Blocks().size();
  for (std::size_t i = 0; i < count; ++i) {
    *doc = NormalizeBlock(*doc, i, oracle);
  }
}

}  // namespace mutforge
