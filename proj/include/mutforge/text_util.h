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

#ifndef MUTFORGE_TEXT_UTIL_H_
#define MUTFORGE_TEXT_UTIL_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace mutforge {

// CRLF and lone CR become LF.
std::string NormalizeNewlines(std::string_view text);

// Splits into lines; every element keeps its trailing '\n' except possibly
// the last one. An empty input yields no lines.
std::vector<std::string_view> SplitLines(std::string_view text);

std::string JoinLines(const std::vector<std::string_view>& lines);

bool IsSpace(char c);
bool IsIdentChar(char c);
bool IsIdentifier(std::string_view text);

std::string_view Trim(std::string_view text);
std::string_view TrimLeft(std::string_view text);
std::string_view TrimRight(std::string_view text);
std::string_view LeadingWhitespace(std::string_view text);
std::string_view TrailingWhitespace(std::string_view text);

// Removes every whitespace character; used for "equal modulo whitespace".
std::string StripWhitespace(std::string_view text);

std::size_t CountNewlines(std::string_view text);

bool StartsWith(std::string_view text, std::string_view prefix);
bool EndsWith(std::string_view text, std::string_view suffix);

std::string ToUpperAscii(std::string_view text);
std::string ToLowerAscii(std::string_view text);

// Renders "[a, b]" for a nonempty tag list and "" otherwise.
std::string FormatTagList(const std::vector<std::string>& tags);

// Parses the inside of a "[a, b]" list (without the brackets). Returns false
// when an element is not an identifier.
bool ParseTagList(std::string_view inner, std::vector<std::string>* tags);

std::uint64_t Fnv1a64(std::string_view data);

std::string ReadFile(const std::filesystem::path& path);

// Writes |content| unless the file already holds exactly those bytes.
// Returns true when the file was written.
bool WriteFileIfChanged(const std::filesystem::path& path,
                        std::string_view content);

}  // namespace mutforge

#endif  // MUTFORGE_TEXT_UTIL_H_
