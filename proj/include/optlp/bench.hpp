// Copyright 2026 The optlp Authors
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

#ifndef OPTLP_BENCH_HPP_
#define OPTLP_BENCH_HPP_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "optlp/model.hpp"

namespace optlp {

struct ReferenceProblem {
  std::string_view name;
  int paper_iters;   // optimalAlphaSigma iteration count of the reference table
  double optimum;    // published Netlib optimal objective
};

std::span<const ReferenceProblem> reference_problems();
// Case-insensitive lookup by problem name (file stem).
const ReferenceProblem* find_reference(std::string_view name);

enum class StartStrategy { automatic, heuristic, phase1 };
StartStrategy start_strategy_from_string(std::string_view s);

struct StartOutcome {
  std::optional<Iterate<double>> point;
  std::string kind;     // "heuristic", "phase1", "file" or "failed"
  std::string message;  // reason when no point was found
};

// heuristic_start first (automatic), or a single named strategy.
StartOutcome find_start(const StandardLp<double>& lp, StartStrategy strategy, double theta);

struct BenchOptions {
  SolverConfig<double> config;
  bool baseline = true;
  int baseline_max_iter = 200;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct BenchRow {
  std::string problem;
  Index rows = 0;
  Index cols = 0;
  std::string start;  // how the interior start was obtained, or "failed"
  std::optional<int> iters_optimal;
  std::string status_optimal;
  std::optional<double> objective;
  std::optional<int> iters_baseline;
  std::string status_baseline;
  std::optional<int> paper_iters;
  std::optional<double> reference_objective;
  std::string message;
};

// Solves one MPS file. A "<stem>.start" file next to it is used as the start
// point when present. Failures are recorded in the row, never thrown.
BenchRow bench_problem(const std::filesystem::path& mps, const BenchOptions& opts);

// Every *.mps file of dir, rows sorted by problem name.
std::vector<BenchRow> run_bench(const std::filesystem::path& dir, const BenchOptions& opts);

// Columns: problem,rows,cols,start,iters_optimal,status_optimal,objective,
// reference_objective,iters_baseline,status_baseline,paper_iters
std::string bench_csv(const std::vector<BenchRow>& rows);

// Number of reference problems present in rows that obtained an interior start.
int reference_starts(const std::vector<BenchRow>& rows);
std::string bench_summary(const std::vector<BenchRow>& rows);

}  // namespace optlp

#endif  // OPTLP_BENCH_HPP_
