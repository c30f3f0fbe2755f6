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

#include "optlp/report.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "optlp/errors.hpp"
#include "optlp/format.hpp"

namespace optlp {

namespace {

using nlohmann::json;

json number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

double number(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw InvalidInput("report: expected a number, got " + j.dump());
}

json vector_json(const Vector<double>& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(number(v(i)));
  return a;
}

Vector<double> vector_from(const json& a) {
  Vector<double> v(static_cast<Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v(static_cast<Index>(i)) = number(a[i]);
  return v;
}

}  // namespace

json report_to_json(const SolveReport<double>& report, const RunInfo& info) {
  json j;
  j["problem"] = info.problem;
  j["algorithm"] = info.algorithm;
  j["theta"] = info.theta;
  j["tol"] = info.tol;
  j["status"] = std::string(to_string(report.status));
  j["message"] = report.message;
  j["objective"] = number(report.objective);
  j["objective_offset"] = info.objective_offset;
  j["initial_mu"] = number(report.initial_mu);
  json iters = json::array();
  for (const auto& r : report.iterations) {
    iters.push_back({{"k", r.k},
                     {"mu", number(r.mu)},
                     {"sigma", number(r.sigma)},
                     {"alpha", number(r.alpha)},
                     {"neighborhood_dist", number(r.neighborhood_dist)},
                     {"primal_res", number(r.primal_res)},
                     {"dual_res", number(r.dual_res)},
                     {"origin", std::string(to_string(r.origin))},
                     {"backtracks", r.backtracks}});
  }
  j["iterations"] = std::move(iters);
  if (report.final) {
    j["final"] = {{"x", vector_json(report.final->x())},
                  {"y", vector_json(report.final->y())},
                  {"s", vector_json(report.final->s())}};
  } else {
    j["final"] = nullptr;
  }
  return j;
}

SolveReport<double> report_from_json(const json& j, RunInfo* info) {
  SolveReport<double> report;
  report.status = status_from_string(j.at("status").get<std::string>());
  report.message = j.value("message", std::string());
  report.objective = number(j.at("objective"));
  report.initial_mu = number(j.at("initial_mu"));
  for (const auto& r : j.at("iterations")) {
    IterationRecord<double> rec;
    rec.k = r.at("k").get<int>();
    rec.mu = number(r.at("mu"));
    rec.sigma = number(r.at("sigma"));
    rec.alpha = number(r.at("alpha"));
    rec.neighborhood_dist = number(r.at("neighborhood_dist"));
    rec.primal_res = number(r.at("primal_res"));
    rec.dual_res = number(r.at("dual_res"));
    rec.origin = origin_from_string(r.at("origin").get<std::string>());
    rec.backtracks = r.at("backtracks").get<int>();
    report.iterations.push_back(rec);
  }
  const json& fin = j.at("final");
  if (!fin.is_null())
    report.final = Iterate<double>::terminal(vector_from(fin.at("x")), vector_from(fin.at("y")),
                                             vector_from(fin.at("s")));
  if (info) {
    info->problem = j.at("problem").get<std::string>();
    info->algorithm = j.at("algorithm").get<std::string>();
    info->theta = j.at("theta").get<double>();
    info->tol = j.at("tol").get<double>();
    info->objective_offset = j.value("objective_offset", 0.0);
  }
  return report;
}

std::string report_to_text(const SolveReport<double>& report, const RunInfo& info) {
  std::ostringstream out;
  out << "problem    " << info.problem << '\n'
      << "algorithm  " << info.algorithm << " (theta " << format_number(info.theta) << ", tol "
      << format_number(info.tol) << ")\n"
      << "initial mu " << format_number(report.initial_mu) << '\n';
  out << "   k  mu                      sigma                   alpha                   "
         "origin\n";
  for (const auto& r : report.iterations) {
    std::string k = std::to_string(r.k);
    out << std::string(4 - std::min<std::size_t>(4, k.size()), ' ') << k << "  ";
    for (double v : {r.mu, r.sigma, r.alpha}) {
      std::string t = format_number(v);
      out << t << std::string(t.size() < 24 ? 24 - t.size() : 1, ' ');
    }
    out << to_string(r.origin) << '\n';
  }
  out << "status     " << to_string(report.status) << '\n';
  if (!report.message.empty()) out << "message    " << report.message << '\n';
  out << "iterations " << report.iterations.size() << '\n'
      << "objective  " << format_number(report.objective + info.objective_offset) << '\n';
  return out.str();
}

void write_start(std::ostream& out, const Iterate<double>& it) {
  out << "# start point: n " << it.n() << ", m " << it.m() << '\n';
  const auto line = [&out](char tag, const Vector<double>& v) {
    out << tag;
    for (Index i = 0; i < v.size(); ++i) out << ' ' << format_number(v(i));
    out << '\n';
  };
  line('x', it.x());
  line('y', it.y());
  line('s', it.s());
}

void write_start_file(const std::filesystem::path& path, const Iterate<double>& it) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
  write_start(out, it);
}

Iterate<double> read_start(std::istream& in) {
  std::vector<double> parts[3];
  bool seen[3] = {false, false, false};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::string tag;
    if (!(ls >> tag) || tag.front() == '#') continue;
    const int slot = tag == "x" ? 0 : tag == "y" ? 1 : tag == "s" ? 2 : -1;
    if (slot < 0) throw ParseError("unknown start vector '" + tag + "'", line);
    if (seen[slot]) throw ParseError("vector '" + tag + "' given twice", line);
    seen[slot] = true;
    std::string tok;
    while (ls >> tok) {
      double v = 0;
      if (!parse_number(tok, v)) throw ParseError("malformed number '" + tok + "'", line);
      parts[slot].push_back(v);
    }
  }
  if (!seen[0] || !seen[1] || !seen[2])
    throw ParseError("start file needs x, y and s lines", line);
  const auto vec = [](const std::vector<double>& p) {
    return Vector<double>(Eigen::Map<const Vector<double>>(p.data(), static_cast<Index>(p.size())));
  };
  return Iterate<double>::make(vec(parts[0]), vec(parts[1]), vec(parts[2]));
}

Iterate<double> read_start_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  return read_start(in);
}

}  // namespace optlp
