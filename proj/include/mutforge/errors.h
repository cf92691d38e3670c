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

#ifndef MUTFORGE_ERRORS_H_
#define MUTFORGE_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mutforge {

enum class ErrorKind {
  kParseError,
  kDuplicateName,
  kUnknownMutant,
  kWrapFailure,
  kNotLineAligned,
  kFlagCollision,
  kMalformedDiff,
  kContextMismatch,
  kManifestError,
  kScopeMiss,
  kAmbiguousState,
  kMalformedMarker,
  kNoValidUnit,
  kNotNormalized,
  kSyntaxError,
  kUnknownName,
  kAmbiguousName,
  kEmptyTag,
  kMutualExclusion,
  kDomainError,
  kRecordError,
  kNameCollision,
  kSpawnError,
  kActivationError,
  kIoError,
  kUsageError,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every failure raised by the toolkit carries one of the kinds above so
// callers (and tests) can dispatch on the category rather than the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void Fail(ErrorKind kind, const std::string& message);

}  // namespace mutforge

#endif  // MUTFORGE_ERRORS_H_
