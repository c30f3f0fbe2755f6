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

#ifndef OPTLP_REPORT_HPP_
#define OPTLP_REPORT_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "optlp/model.hpp"
#include "optlp/solver.hpp"

namespace optlp {

struct RunInfo {
  std::string problem;
  std::string algorithm = "optimal";
  double theta = 0.99;
  double tol = 1e-8;
  double objective_offset = 0;
  bool operator==(const RunInfo&) const = default;
};

// Report schema:
//   {problem, algorithm, theta, tol, status, message, objective, objective_offset,
//    initial_mu, iterations: [{k, mu, sigma, alpha, neighborhood_dist, primal_res,
//    dual_res, origin, backtracks}], final: {x, y, s} | null}
nlohmann::json report_to_json(const SolveReport<double>& report, const RunInfo& info);
SolveReport<double> report_from_json(const nlohmann::json& j, RunInfo* info = nullptr);

// Human-readable summary with one line per iteration.
std::string report_to_text(const SolveReport<double>& report, const RunInfo& info);

// Start-point files hold three lines "x ...", "y ...", "s ..." of
// whitespace-separated numbers; lines starting with '#' are comments.
void write_start(std::ostream& out, const Iterate<double>& it);
void write_start_file(const std::filesystem::path& path, const Iterate<double>& it);
Iterate<double> read_start(std::istream& in);
Iterate<double> read_start_file(const std::filesystem::path& path);

}  // namespace optlp

#endif  // OPTLP_REPORT_HPP_
