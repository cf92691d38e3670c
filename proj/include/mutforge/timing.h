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

// Cost model for comparing source-rewriting activation (one rebuild per
// mutant) with in-AST activation (one build, runtime selection).

#ifndef MUTFORGE_TIMING_H_
#define MUTFORGE_TIMING_H_

#include <string>
#include <string_view>
#include <vector>

namespace mutforge {

// Times in seconds. |warm| is the incremental rebuild after touching one
// mutant; |exec| is total execution time across all mutants.
struct WorkloadTiming {
  int n = 1;
  double cold = 0;
  double warm = 0;
  double exec = 0;
};

// cold + (n - 1) * warm + exec. Throws DomainError for n < 1 or a negative
// time.
double PredictComment(double cold, double warm, int n, double exec);

// cold + exec.
double PredictInAst(double cold, double exec);

struct Comparison {
  double comment_total = 0;
  double inast_total = 0;
  // (cold_c + (n - 1) * warm_c) / cold_i
  double compile_speedup = 0;
  // exec_i / exec_c
  double exec_slowdown = 0;
  // comment_total / inast_total
  double total_speedup = 0;
};

// Throws DomainError when a denominator is zero.
Comparison Compare(const WorkloadTiming& comment, const WorkloadTiming& inast);

struct Workload {
  std::string name;
  WorkloadTiming comment;
  WorkloadTiming inast;
};

// {"workloads": [{"name": "BST",
//                 "comment": {"n": 8, "cold": 20.17, "warm": 2.47, "exec": 0.04},
//                 "inast": {"cold": 20.35, "exec": 0.05}}, ...]}
// Throws ParseError or DomainError.
std::vector<Workload> ParseTimingModel(std::string_view json_text);

// A fixed-width table with one row per workload plus a totals row.
std::string FormatTimingTable(const std::vector<Workload>& workloads);

}  // namespace mutforge

#endif  // MUTFORGE_TIMING_H_
