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

#include "mutforge/errors.h"

namespace mutforge {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParseError:
      return "ParseError";
    case ErrorKind::kDuplicateName:
      return "DuplicateName";
    case ErrorKind::kUnknownMutant:
      return "UnknownMutant";
    case ErrorKind::kWrapFailure:
      return "WrapFailure";
    case ErrorKind::kNotLineAligned:
      return "NotLineAligned";
    case ErrorKind::kFlagCollision:
      return "FlagCollision";
    case ErrorKind::kMalformedDiff:
      return "MalformedDiff";
    case ErrorKind::kContextMismatch:
      return "ContextMismatch";
    case ErrorKind::kManifestError:
      return "ManifestError";
    case ErrorKind::kScopeMiss:
      return "ScopeMiss";
    case ErrorKind::kAmbiguousState:
      return "AmbiguousState";
    case ErrorKind::kMalformedMarker:
      return "MalformedMarker";
    case ErrorKind::kNoValidUnit:
      return "NoValidUnit";
    case ErrorKind::kNotNormalized:
      return "NotNormalized";
    case ErrorKind::kSyntaxError:
      return "SyntaxError";
    case ErrorKind::kUnknownName:
      return "UnknownName";
    case ErrorKind::kAmbiguousName:
      return "AmbiguousName";
    case ErrorKind::kEmptyTag:
      return "EmptyTag";
    case ErrorKind::kMutualExclusion:
      return "MutualExclusion";
    case ErrorKind::kDomainError:
      return "DomainError";
    case ErrorKind::kRecordError:
      return "RecordError";
    case ErrorKind::kNameCollision:
      return "NameCollision";
    case ErrorKind::kSpawnError:
      return "SpawnError";
    case ErrorKind::kActivationError:
      return "ActivationError";
    case ErrorKind::kIoError:
      return "IoError";
    case ErrorKind::kUsageError:
      return "UsageError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
      kind_(kind) {}

void Fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace mutforge
