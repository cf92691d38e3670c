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

#include "mutforge/timing.h"

#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "mutforge/errors.h"

namespace mutforge {
namespace {

void CheckTime(double value, const char* what) {
  if (!std::isfinite(value) || value < 0) {
    Fail(ErrorKind::kDomainError,
         std::string(what) + " must be a finite non-negative time");
  }
}

double Ratio(double numerator, double denominator, const char* what) {
  if (denominator == 0) {
    Fail(ErrorKind::kDomainError, std::string(what) + ": division by zero");
  }
  return numerator / denominator;
}

WorkloadTiming ReadTiming(const nlohmann::json& object, bool with_warm) {
  WorkloadTiming timing;
  timing.n = object.value("n", 1);
  timing.cold = object.at("cold").get<double>();
  timing.warm = with_warm ? object.value("warm", 0.0) : 0.0;
  timing.exec = object.at("exec").get<double>();
  return timing;
}

}  // namespace

double PredictComment(double cold, double warm, int n, double exec) {
  if (n < 1) {
    Fail(ErrorKind::kDomainError, "mutant count must be at least 1");
  }
  CheckTime(cold, "cold compile");
  CheckTime(warm, "warm compile");
  CheckTime(exec, "execution");
  return cold + (n - 1) * warm + exec;
}

double PredictInAst(double cold, double exec) {
  CheckTime(cold, "cold compile");
  CheckTime(exec, "execution");
  return cold + exec;
}

Comparison Compare(const WorkloadTiming& comment, const WorkloadTiming& inast) {
  Comparison result;
  result.comment_total =
      PredictComment(comment.cold, comment.warm, comment.n, comment.exec);
  result.inast_total = PredictInAst(inast.cold, inast.exec);
  result.compile_speedup =
      Ratio(comment.cold + (comment.n - 1) * comment.warm, inast.cold,
            "compile speedup");
  result.exec_slowdown = Ratio(inast.exec, comment.exec, "exec slowdown");
  result.total_speedup =
      Ratio(result.comment_total, result.inast_total, "total speedup");
  return result;
}

std::vector<Workload> ParseTimingModel(std::string_view json_text) {
  std::vector<Workload> workloads;
  try {
    nlohmann::json json = nlohmann::json::parse(json_text);
    for (const auto& item : json.at("workloads")) {
      Workload workload;
      workload.name = item.at("name").get<std::string>();
      workload.comment = ReadTiming(item.at("comment"), true);
      workload.inast = ReadTiming(item.at("inast"), false);
      workload.inast.n = workload.comment.n;
      workloads.push_back(std::move(workload));
    }
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorKind::kParseError, std::string("timing model: ") + e.what());
  }
  return workloads;
}

std::string FormatTimingTable(const std::vector<Workload>& workloads) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-10s %4s %9s %9s %9s %9s %9s\n",
                "workload", "n", "comment", "in-ast", "compile", "exec",
                "total");
  out += line;
  std::snprintf(line, sizeof(line), "%-10s %4s %9s %9s %9s %9s %9s\n", "", "",
                "total(s)", "total(s)", "speedup", "slowdown", "speedup");
  out += line;
  double comment_sum = 0;
  double inast_sum = 0;
  for (const Workload& workload : workloads) {
    Comparison c = Compare(workload.comment, workload.inast);
    comment_sum += c.comment_total;
    inast_sum += c.inast_total;
    std::snprintf(line, sizeof(line), "%-10s %4d %9.2f %9.2f %8.2fx %8.2fx %8.2fx\n",
                  workload.name.c_str(), workload.comment.n, c.comment_total,
                  c.inast_total, c.compile_speedup, c.exec_slowdown,
                  c.total_speedup);
    out += line;
  }
  std::snprintf(line, sizeof(line), "%-10s %4s %9.2f %9.2f %9s %9s %8.2fx\n",
                "total", "", comment_sum, inast_sum, "", "",
                Ratio(comment_sum, inast_sum, "total speedup"));
  out += line;
  return out;
}

}  // namespace mutforge
