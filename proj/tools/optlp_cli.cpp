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

// optlp command-line front end.
//
//   optlp solve <file.mps> [--algorithm optimal|shortstep] [--output text|json] ...
//   optlp generate -n N -m M --seed S --out problem.mps
//   optlp bench <dir>
//   optlp find-start <file.mps> -o point.start
//
// Exit codes: 0 optimal (or success), 1 parse or argument error, 2 no interior
// start, 3 numerical breakdown, 4 iteration limit reached.

#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "optlp/bench.hpp"
#include "optlp/errors.hpp"
#include "optlp/mps.hpp"
#include "optlp/report.hpp"
#include "optlp/solver.hpp"
#include "optlp/synthetic.hpp"

namespace {

enum ExitCode { kOk = 0, kInputError = 1, kNoStart = 2, kBreakdown = 3, kMaxIter = 4 };

int exit_code(optlp::SolveStatus s) {
  switch (s) {
    case optlp::SolveStatus::optimal: return kOk;
    case optlp::SolveStatus::no_interior_start: return kNoStart;
    case optlp::SolveStatus::numerical_breakdown: return kBreakdown;
    case optlp::SolveStatus::max_iter: return kMaxIter;
  }
  return kBreakdown;
}

struct SolveArgs {
  std::string path;
  std::string algorithm = "optimal";
  std::optional<double> theta;
  double tol = 1e-8;
  int max_iter = 200;
  std::string start_file;
  std::string start = "auto";
  std::string output = "text";
};

int cmd_solve(const SolveArgs& args) {
  const auto sf = optlp::to_standard_form(optlp::parse_mps_file(args.path));
  const bool shortstep = args.algorithm == "shortstep";
  optlp::SolverConfig<double> cfg = shortstep ? optlp::shortstep_config() : optlp::SolverConfig<double>{};
  if (args.theta) cfg.theta = *args.theta;
  cfg.tol = args.tol;
  cfg.max_iter = args.max_iter;
  cfg.validate();

  std::optional<optlp::Iterate<double>> start;
  if (!args.start_file.empty()) {
    start = optlp::read_start_file(args.start_file);
  } else {
    auto found = optlp::find_start(sf.lp, optlp::start_strategy_from_string(args.start), cfg.theta);
    if (!found.point) {
      std::cerr << "optlp: no interior start for '" << sf.lp.name() << "': " << found.message
                << '\n';
      return kNoStart;
    }
    start = std::move(found.point);
  }

  const auto report = shortstep ? optlp::solve_shortstep_baseline(sf.lp, *start, cfg)
                                : optlp::solve(sf.lp, *start, cfg);
  optlp::RunInfo info{sf.lp.name(), args.algorithm, cfg.theta, cfg.tol, sf.objective_offset};
  if (info.problem.empty()) info.problem = std::filesystem::path(args.path).stem().string();
  if (args.output == "json") {
    std::cout << optlp::report_to_json(report, info).dump(2) << '\n';
  } else {
    std::cout << optlp::report_to_text(report, info);
  }
  if (report.status != optlp::SolveStatus::optimal && !report.message.empty())
    std::cerr << "optlp: " << report.message << '\n';
  return exit_code(report.status);
}

int cmd_generate(long n, long m, std::uint64_t seed, const std::string& out) {
  const auto inst = optlp::generate_synthetic<double>(n, m, seed);
  {
    std::ofstream f(out);
    if (!f) throw optlp::InvalidInput("cannot write '" + out + "'");
    f << optlp::write_mps(optlp::to_mps_problem(inst.lp));
  }
  std::filesystem::path sidecar(out);
  sidecar.replace_extension(".start");
  optlp::write_start_file(sidecar, inst.start);
  return kOk;
}

int cmd_bench(const std::string& dir, const optlp::BenchOptions& opts, const std::string& out) {
  if (!std::filesystem::is_directory(dir))
    throw optlp::InvalidInput("'" + dir + "' is not a directory");
  const auto rows = optlp::run_bench(dir, opts);
  const std::string csv = optlp::bench_csv(rows);
  if (out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream f(out);
    if (!f) throw optlp::InvalidInput("cannot write '" + out + "'");
    f << csv;
  }
  std::cerr << optlp::bench_summary(rows) << '\n';
  return kOk;
}

int cmd_find_start(const std::string& path, const std::string& strategy, double theta,
                   const std::string& out) {
  const auto sf = optlp::to_standard_form(optlp::parse_mps_file(path));
  auto found = optlp::find_start(sf.lp, optlp::start_strategy_from_string(strategy), theta);
  if (!found.point) {
    std::cerr << "optlp: no interior start for '" << sf.lp.name() << "': " << found.message
              << '\n';
    return kNoStart;
  }
  optlp::write_start_file(out, *found.point);
  std::cerr << "optlp: " << found.kind << " start written to " << out << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feasible primal-dual path-following LP solver"};
  app.require_subcommand(1);

  SolveArgs sargs;
  auto* solve = app.add_subcommand("solve", "Solve an LP given as an MPS file");
  solve->add_option("path", sargs.path, "MPS file")->required()->check(CLI::ExistingFile);
  solve->add_option("--algorithm", sargs.algorithm, "Step rule")
      ->check(CLI::IsMember({"optimal", "shortstep"}));
  solve->add_option("--theta", sargs.theta,
                    "Neighborhood size (default 0.99, or 0.4 with shortstep)");
  solve->add_option("--tol", sargs.tol, "Stopping tolerance")->capture_default_str();
  solve->add_option("--max-iter", sargs.max_iter, "Iteration limit")->capture_default_str();
  solve->add_option("--start-file", sargs.start_file, "Start point (x, y, s lines)")
      ->check(CLI::ExistingFile);
  solve->add_option("--start", sargs.start, "Start point search when no file is given")
      ->check(CLI::IsMember({"auto", "heuristic", "phase1"}));
  solve->add_option("--output", sargs.output, "Report format")
      ->check(CLI::IsMember({"text", "json"}));

  long gn = 0, gm = 0;
  std::uint64_t gseed = 0;
  std::string gout;
  auto* generate = app.add_subcommand("generate", "Write a synthetic instance and its start point");
  generate->add_option("-n", gn, "Number of variables")->required();
  generate->add_option("-m", gm, "Number of equality constraints")->required();
  generate->add_option("--seed", gseed, "Random seed")->capture_default_str();
  generate->add_option("--out", gout, "Output MPS path (start point goes to .start)")->required();

  std::string bdir, bout;
  optlp::BenchOptions bopts;
  bool no_baseline = false;
  auto* bench = app.add_subcommand("bench", "Solve every MPS file of a directory, CSV to stdout");
  bench->add_option("dir", bdir, "Directory of MPS files")->required();
  bench->add_option("--out", bout, "Write the CSV to a file instead of stdout");
  bench->add_option("--theta", bopts.config.theta, "Neighborhood size")->capture_default_str();
  bench->add_option("--tol", bopts.config.tol, "Stopping tolerance")->capture_default_str();
  bench->add_option("--max-iter", bopts.config.max_iter, "Iteration limit")->capture_default_str();
  bench->add_option("--baseline-max-iter", bopts.baseline_max_iter,
                    "Iteration limit of the short-step baseline")
      ->capture_default_str();
  bench->add_flag("--no-baseline", no_baseline, "Skip the short-step baseline");
  bench->add_option("--threads", bopts.threads, "Worker threads (0: all cores)")
      ->capture_default_str();

  std::string fpath, fout, fstrategy = "auto";
  double ftheta = 0.99;
  auto* find = app.add_subcommand("find-start", "Search an interior start point and save it");
  find->add_option("path", fpath, "MPS file")->required()->check(CLI::ExistingFile);
  find->add_option("-o,--out", fout, "Output start file")->required();
  find->add_option("--start", fstrategy, "Search strategy")
      ->check(CLI::IsMember({"auto", "heuristic", "phase1"}));
  find->add_option("--theta", ftheta, "Neighborhood the point must lie in")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve) return cmd_solve(sargs);
    if (*generate) return cmd_generate(gn, gm, gseed, gout);
    if (*bench) {
      bopts.baseline = !no_baseline;
      return cmd_bench(bdir, bopts, bout);
    }
    if (*find) return cmd_find_start(fpath, fstrategy, ftheta, fout);
  } catch (const optlp::ParseError& e) {
    std::cerr << "optlp: parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const optlp::UnsupportedFeature& e) {
    std::cerr << "optlp: unsupported: " << e.what() << '\n';
    return kInputError;
  } catch (const optlp::InvalidInput& e) {
    std::cerr << "optlp: invalid input: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "optlp: " << e.what() << '\n';
    return kBreakdown;
  }
  return kInputError;
}
