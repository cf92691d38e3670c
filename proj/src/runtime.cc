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

#include "mutforge/runtime.h"

#include <cstdlib>

namespace mutforge {

std::vector<std::string> ParseActiveList(std::string_view value) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t comma = value.find(',', start);
    if (comma == std::string_view::npos) {
      comma = value.size();
    }
    if (comma > start) {
      names.emplace_back(value.substr(start, comma - start));
    }
    start = comma + 1;
  }
  return names;
}

std::string FormatActiveList(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& name : names) {
    if (!out.empty()) {
      out += ',';
    }
    out += name;
  }
  return out;
}

ActiveRegistry::ActiveRegistry(const std::vector<std::string>& names)
    : names_(names.begin(), names.end()) {}

const ActiveRegistry& ActiveRegistry::FromEnvironment() {
  static const ActiveRegistry registry = [] {
    const char* value = std::getenv(kActiveEnvVar);
    return ActiveRegistry(ParseActiveList(value ? value : ""));
  }();
  return registry;
}

bool ActiveRegistry::IsActive(std::string_view name) const {
  return names_.find(name) != names_.end();
}

bool MutationActive(std::string_view name) {
  return ActiveRegistry::FromEnvironment().IsActive(name);
}

int SelectArm(const std::vector<std::string>& arm_variants,
              const ActiveRegistry& registry) {
  for (std::size_t i = 0; i < arm_variants.size(); ++i) {
    if (registry.IsActive(arm_variants[i])) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

}  // namespace mutforge
