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

#include "optlp/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <exception>
#include <sstream>
#include <thread>

#include "optlp/errors.hpp"
#include "optlp/format.hpp"
#include "optlp/log.hpp"
#include "optlp/mps.hpp"
#include "optlp/report.hpp"
#include "optlp/solver.hpp"
#include "optlp/start.hpp"

namespace optlp {

namespace {

constexpr std::array<ReferenceProblem, 11> kReference = {{
    {"AFIRO", 4, -4.6475314286e+02},
    {"BLEND", 13, -3.0812149846e+01},
    {"SCAGR25", 5, -1.4753433061e+07},
    {"SCAGR7", 7, -2.3313892548e+06},
    {"SCSD1", 18, 8.6666666743e+00},
    {"SCSD6", 26, 5.0500000078e+01},
    {"SCSD8", 19, 9.0499999993e+02},
    {"SCTAP1", 17, 1.4122500000e+03},
    {"SCTAP2", 17, 1.7248071429e+03},
    {"SCTAP3", 18, 1.4240000000e+03},
    {"SHARE1B", 11, -7.6589318579e+04},
}};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::toupper(static_cast<unsigned char>(x)) ==
                  std::toupper(static_cast<unsigned char>(y));
         });
}

std::string opt_int(const std::optional<int>& v, std::string_view missing) {
  return v ? std::to_string(*v) : std::string(missing);
}

std::string opt_num(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

}  // namespace

std::span<const ReferenceProblem> reference_problems() { return kReference; }

const ReferenceProblem* find_reference(std::string_view name) {
  for (const auto& r : kReference)
    if (iequals(r.name, name)) return &r;
  return nullptr;
}

StartStrategy start_strategy_from_string(std::string_view s) {
  if (s == "auto") return StartStrategy::automatic;
  if (s == "heuristic") return StartStrategy::heuristic;
  if (s == "phase1") return StartStrategy::phase1;
  throw InvalidInput("unknown start strategy '" + std::string(s) + "'");
}

StartOutcome find_start(const StandardLp<double>& lp, StartStrategy strategy, double theta) {
  StartOutcome out;
  if (strategy != StartStrategy::phase1) {
    if (auto p = heuristic_start(lp, theta)) {
      out.point = std::move(p);
      out.kind = "heuristic";
      return out;
    }
    out.message = "heuristic start is not interior or not inside the neighborhood";
    if (strategy == StartStrategy::heuristic) {
      out.kind = "failed";
      return out;
    }
  }
  InteriorStartOptions opts;
  opts.target_distance = std::min(0.25, theta);
  auto res = interior_start(lp, opts);
  if (res.point) {
    out.point = std::move(res.point);
    out.kind = "phase1";
    out.message.clear();
  } else {
    out.kind = "failed";
    out.message += (out.message.empty() ? "" : "; ") + std::string("phase I: ") + res.failure;
  }
  return out;
}

BenchRow bench_problem(const std::filesystem::path& mps, const BenchOptions& opts) {
  BenchRow row;
  row.problem = mps.stem().string();
  if (const auto* ref = find_reference(row.problem)) {
    row.paper_iters = ref->paper_iters;
    row.reference_objective = ref->optimum;
  }
  row.start = "failed";
  try {
    const auto sf = to_standard_form(parse_mps_file(mps));
    const auto& lp = sf.lp;
    row.rows = lp.m();
    row.cols = lp.n();

    std::optional<Iterate<double>> start;
    auto sidecar = mps;
    sidecar.replace_extension(".start");
    if (std::filesystem::exists(sidecar)) {
      start = read_start_file(sidecar);
      row.start = "file";
    } else {
      auto found = find_start(lp, StartStrategy::automatic, opts.config.theta);
      start = std::move(found.point);
      row.start = found.kind;
      row.message = found.message;
    }
    if (!start) {
      row.status_optimal = row.status_baseline = "start-failed";
      return row;
    }

    const auto rep = solve(lp, *start, opts.config);
    row.iters_optimal = static_cast<int>(rep.iterations.size());
    row.status_optimal = std::string(to_string(rep.status));
    row.objective = rep.objective + sf.objective_offset;
    if (!rep.message.empty()) row.message = rep.message;

    if (opts.baseline) {
      auto cfg = shortstep_config();
      cfg.tol = opts.config.tol;
      cfg.max_iter = opts.baseline_max_iter;
      const auto base = solve_shortstep_baseline(lp, *start, cfg);
      row.iters_baseline = static_cast<int>(base.iterations.size());
      row.status_baseline = std::string(to_string(base.status));
    } else {
      row.status_baseline = "skipped";
    }
    log().info("bench {}: start {}, {} iterations ({})", row.problem, row.start,
               *row.iters_optimal, row.status_optimal);
  } catch (const std::exception& e) {
    row.status_optimal = "failed";
    if (row.status_baseline.empty()) row.status_baseline = "failed";
    row.message = e.what();
    log().warn("bench {}: {}", row.problem, e.what());
  }
  return row;
}

std::vector<BenchRow> run_bench(const std::filesystem::path& dir, const BenchOptions& opts) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    for (char& ch : ext) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (ext == ".mps") files.push_back(entry.path());
  }
  std::vector<BenchRow> rows(files.size());
  unsigned workers = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, files.size())));
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < files.size();) rows[i] = bench_problem(files[i], opts);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::sort(rows.begin(), rows.end(),
            [](const BenchRow& a, const BenchRow& b) { return a.problem < b.problem; });
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "problem,rows,cols,start,iters_optimal,status_optimal,objective,reference_objective,"
         "iters_baseline,status_baseline,paper_iters\n";
  for (const auto& r : rows) {
    const bool started = r.start != "failed";
    const std::string_view missing = started ? "failed" : "start-failed";
    out << r.problem << ',' << r.rows << ',' << r.cols << ',' << r.start << ','
        << opt_int(r.iters_optimal, missing) << ',' << r.status_optimal << ','
        << opt_num(r.objective) << ',' << opt_num(r.reference_objective) << ','
        << opt_int(r.iters_baseline, r.status_baseline == "skipped" ? "" : missing) << ','
        << r.status_baseline << ',' << opt_int(r.paper_iters, "") << '\n';
  }
  return out.str();
}

int reference_starts(const std::vector<BenchRow>& rows) {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const BenchRow& r) {
    return r.paper_iters && r.start != "failed";
  }));
}

std::string bench_summary(const std::vector<BenchRow>& rows) {
  const auto present = std::count_if(rows.begin(), rows.end(),
                                     [](const BenchRow& r) { return r.paper_iters.has_value(); });
  std::ostringstream out;
  out << "interior start obtained for " << reference_starts(rows) << " of "
      << kReference.size() << " reference problems (" << present << " present, "
      << rows.size() << " MPS files scanned)";
  return out.str();
}

}  // namespace optlp
