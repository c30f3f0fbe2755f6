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

#ifndef OPTLP_SOLVER_HPP_
#define OPTLP_SOLVER_HPP_

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "optlp/direction.hpp"
#include "optlp/errors.hpp"
#include "optlp/log.hpp"
#include "optlp/model.hpp"
#include "optlp/stepsel.hpp"

namespace optlp {

enum class SolveStatus { optimal, max_iter, numerical_breakdown, no_interior_start };

inline std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::max_iter: return "max_iter";
    case SolveStatus::numerical_breakdown: return "numerical_breakdown";
    case SolveStatus::no_interior_start: return "no_interior_start";
  }
  return "unknown";
}

inline SolveStatus status_from_string(std::string_view s) {
  for (auto st : {SolveStatus::optimal, SolveStatus::max_iter, SolveStatus::numerical_breakdown,
                  SolveStatus::no_interior_start})
    if (to_string(st) == s) return st;
  throw InvalidInput("unknown solve status '" + std::string(s) + "'");
}

// State after step k (k = 1, 2, ...): mu, distance and residuals are measured
// at the new iterate; sigma and alpha are the values that produced it.
template <typename Scalar = double>
struct IterationRecord {
  int k = 0;
  Scalar mu = 0;
  Scalar sigma = 0;
  Scalar alpha = 0;
  Scalar neighborhood_dist = 0;
  Scalar primal_res = 0;
  Scalar dual_res = 0;
  CandidateOrigin origin = CandidateOrigin::grid_fallback;
  int backtracks = 0;
};

template <typename Scalar = double>
struct SolveReport {
  SolveStatus status = SolveStatus::no_interior_start;
  std::vector<IterationRecord<Scalar>> iterations;
  std::optional<Iterate<Scalar>> final;
  Scalar objective = 0;
  Scalar initial_mu = 0;
  std::string message;
};

template <typename Scalar = double>
struct StepOutcome {
  Iterate<Scalar> next;
  Scalar alpha;
  int backtracks;
};

// Applies the selected step, halving alpha until the new point is strictly
// positive and inside the neighborhood (with slack theta (1 + 1e-8)).
template <typename Scalar>
StepOutcome<Scalar> safeguarded_step(const Iterate<Scalar>& it, const Direction<Scalar>& dir,
                                     const CandidatePair<Scalar>& pair,
                                     const SolverConfig<Scalar>& cfg) {
  const Scalar slack = cfg.theta * (Scalar(1) + Scalar(1e-8));

  if (pair.origin == CandidateOrigin::a0_zero) {
    // The full step lands on the boundary; entries that cross zero by no more
    // than rounding are set to zero.
    Vector<Scalar> x = it.x() - dir.dx;
    Vector<Scalar> s = it.s() - dir.ds;
    const Scalar eps = std::sqrt(std::numeric_limits<Scalar>::epsilon());
    bool ok = true;
    for (Index i = 0; i < x.size() && ok; ++i) {
      const Scalar tx = eps * (std::abs(it.x()(i)) + std::abs(dir.dx(i)));
      const Scalar ts = eps * (std::abs(it.s()(i)) + std::abs(dir.ds(i)));
      if (x(i) < -tx || s(i) < -ts) ok = false;
      if (x(i) < tx) x(i) = std::max(x(i), Scalar(0));
      if (s(i) < ts) s(i) = std::max(s(i), Scalar(0));
    }
    if (ok) {
      Vector<Scalar> y = it.y() - dir.dy;
      return {Iterate<Scalar>::terminal(std::move(x), std::move(y), std::move(s)), Scalar(1), 0};
    }
  }

  Scalar alpha = pair.alpha;
  for (int bt = 0; bt <= cfg.safeguard_backtracks; ++bt, alpha /= Scalar(2)) {
    Vector<Scalar> x = it.x() - alpha * dir.dx;
    Vector<Scalar> s = it.s() - alpha * dir.ds;
    if (x == it.x() && s == it.s()) break;  // update below machine precision
    if (!(x.array() > Scalar(0)).all() || !(s.array() > Scalar(0)).all()) continue;
    const Scalar mu = duality_gap(x, s);
    if (!(mu < it.mu())) continue;
    if (neighborhood_distance(x, s) > slack * mu) continue;
    Vector<Scalar> y = it.y() - alpha * dir.dy;
    return {Iterate<Scalar>::make(std::move(x), std::move(y), std::move(s)), alpha, bt};
  }
  throw NoFeasibleStep("safeguarded_step: every backtracked step leaves the neighborhood");
}

namespace detail {

template <typename Scalar>
using StepRule = std::function<CandidatePair<Scalar>(const StepPolynomials<Scalar>&)>;

template <typename Scalar>
SolveReport<Scalar> run_path_following(const StandardLp<Scalar>& lp, const Iterate<Scalar>& start,
                                       const SolverConfig<Scalar>& cfg,
                                       const StepRule<Scalar>& rule) {
  cfg.validate();
  SolveReport<Scalar> report;
  report.initial_mu = start.mu();
  report.final = start;
  report.objective = lp.c().dot(start.x());

  if (start.n() != lp.n() || start.m() != lp.m()) {
    report.message = "start point dimensions do not match the problem";
    return report;
  }
  const auto res0 = residuals(lp, start);
  if (!(res0.primal <= Scalar(1e-8) && res0.dual <= Scalar(1e-8))) {
    report.message = "start point is not feasible (primal " + std::to_string(double(res0.primal)) +
                     ", dual " + std::to_string(double(res0.dual)) + ")";
    return report;
  }
  if (!start.interior() ||
      !(neighborhood_distance(start.x(), start.s()) <= cfg.theta * start.mu())) {
    report.message = "start point is outside the central-path neighborhood";
    return report;
  }

  const Matrix<Scalar> nullbasis = null_space_basis(lp.a());
  Iterate<Scalar> it = start;
  report.status = SolveStatus::max_iter;
  for (int k = 1;; ++k) {
    if (stopping_criterion(lp, it, cfg.tol)) {
      report.status = SolveStatus::optimal;
      break;
    }
    if (k > cfg.max_iter || !it.interior()) break;
    try {
      const auto cache = build_factors(lp, it, nullbasis);
      const auto dec = decompose(cache, it);
      const auto sp = step_polynomials(dec, cfg.theta, it.mu());
      const auto pair = rule(sp);
      const auto dir = assemble_direction(dec, pair.sigma);
      auto step = safeguarded_step(it, dir, pair, cfg);
      it = std::move(step.next);

      IterationRecord<Scalar> rec;
      rec.k = k;
      rec.mu = it.mu();
      rec.sigma = pair.sigma;
      rec.alpha = step.alpha;
      rec.neighborhood_dist = (it.x().cwiseProduct(it.s()).array() - it.mu()).matrix().norm();
      const auto res = residuals(lp, it);
      rec.primal_res = res.primal;
      rec.dual_res = res.dual;
      rec.origin = pair.origin;
      rec.backtracks = step.backtracks;
      report.iterations.push_back(rec);
      log().debug("{} k={} mu={:.6e} sigma={:.6f} alpha={:.6f} {}", lp.name(), k,
                  double(rec.mu), double(rec.sigma), double(rec.alpha), to_string(rec.origin));
    } catch (const IllConditioned& e) {
      report.status = SolveStatus::numerical_breakdown;
      report.message = e.what();
      break;
    } catch (const NoFeasibleStep& e) {
      report.status = SolveStatus::numerical_breakdown;
      report.message = e.what();
      break;
    }
  }
  report.final = it;
  report.objective = lp.c().dot(it.x());
  return report;
}

}  // namespace detail

// Path following with the gap-minimizing (sigma, alpha) at every iteration.
template <typename Scalar>
SolveReport<Scalar> solve(const StandardLp<Scalar>& lp, const Iterate<Scalar>& start,
                          const SolverConfig<Scalar>& cfg = {}) {
  const Scalar tol = cfg.a0_zero_rel_tol;
  return detail::run_path_following<Scalar>(
      lp, start, cfg, [tol](const StepPolynomials<Scalar>& sp) { return select_step(sp, tol); });
}

template <typename Scalar>
Scalar short_step_sigma(Index n) {
  return Scalar(1) - Scalar(0.4) / std::sqrt(static_cast<Scalar>(n));
}

// Classical short-step method: sigma = 1 - 0.4/sqrt(n), alpha = 1.
template <typename Scalar>
SolveReport<Scalar> solve_shortstep_baseline(const StandardLp<Scalar>& lp,
                                             const Iterate<Scalar>& start,
                                             const SolverConfig<Scalar>& cfg) {
  const Scalar sigma = short_step_sigma<Scalar>(lp.n());
  return detail::run_path_following<Scalar>(
      lp, start, cfg, [sigma](const StepPolynomials<Scalar>& sp) {
        return CandidatePair<Scalar>{sigma, Scalar(1), predicted_gap(sp.mu, sigma, Scalar(1)),
                                     CandidateOrigin::fixed_short_step};
      });
}

template <typename Scalar = double>
SolverConfig<Scalar> shortstep_config() {
  SolverConfig<Scalar> cfg;
  cfg.theta = Scalar(0.4);
  return cfg;
}

}  // namespace optlp

#endif  // OPTLP_SOLVER_HPP_
