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

// Runtime selection of in-AST mutants. The generated Rust helper implements
// the same contract; this is the reference used by the runner and tests.

#ifndef MUTFORGE_RUNTIME_H_
#define MUTFORGE_RUNTIME_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mutforge {

inline constexpr char kActiveEnvVar[] = "MUTFORGE_ACTIVE";

// Comma-separated variant names; empty elements are dropped.
std::vector<std::string> ParseActiveList(std::string_view value);
std::string FormatActiveList(const std::vector<std::string>& names);

class ActiveRegistry {
 public:
  ActiveRegistry() = default;
  explicit ActiveRegistry(const std::vector<std::string>& names);

  // Reads MUTFORGE_ACTIVE on first use and caches the result for the rest
  // of the process.
  static const ActiveRegistry& FromEnvironment();

  bool IsActive(std::string_view name) const;

 private:
  std::set<std::string, std::less<>> names_;
};

bool MutationActive(std::string_view name);

// Index of the first arm whose variant is active, in arm order, or -1 for
// the default (base) arm.
int SelectArm(const std::vector<std::string>& arm_variants,
              const ActiveRegistry& registry);

}  // namespace mutforge

#endif  // MUTFORGE_RUNTIME_H_
