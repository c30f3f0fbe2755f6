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

#ifndef OPTLP_STEPSEL_HPP_
#define OPTLP_STEPSEL_HPP_

// Joint choice of the centering parameter sigma and the step length alpha
// minimizing the next duality gap mu (1 - alpha (1 - sigma)) subject to the
// neighborhood condition f(sigma, alpha) <= 0.

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "optlp/direction.hpp"
#include "optlp/errors.hpp"
#include "optlp/quartic.hpp"

namespace optlp {

enum class CandidateOrigin { a0_zero, f_root_alpha1, g_root, grid_fallback, fixed_short_step };

inline std::string_view to_string(CandidateOrigin o) {
  switch (o) {
    case CandidateOrigin::a0_zero: return "a0_zero";
    case CandidateOrigin::f_root_alpha1: return "f_root_alpha1";
    case CandidateOrigin::g_root: return "g_root";
    case CandidateOrigin::grid_fallback: return "grid_fallback";
    case CandidateOrigin::fixed_short_step: return "fixed_short_step";
  }
  return "unknown";
}

inline CandidateOrigin origin_from_string(std::string_view s) {
  for (auto o : {CandidateOrigin::a0_zero, CandidateOrigin::f_root_alpha1, CandidateOrigin::g_root,
                 CandidateOrigin::grid_fallback, CandidateOrigin::fixed_short_step})
    if (to_string(o) == s) return o;
  throw InvalidInput("unknown candidate origin '" + std::string(s) + "'");
}

template <typename Scalar = double>
struct CandidatePair {
  Scalar sigma = 0;
  Scalar alpha = 0;
  Scalar predicted_mu = 0;
  CandidateOrigin origin = CandidateOrigin::grid_fallback;
};

template <typename Scalar>
Scalar predicted_gap(Scalar mu, Scalar sigma, Scalar alpha) {
  return mu * (Scalar(1) - alpha * (Scalar(1) - sigma));
}

// f(sigma, alpha) = a4 s^4 - a3 s^3 + (a2 - theta^2 mu^2 / alpha^2) s^2 - a1 s + a0.
template <typename Scalar>
Scalar eval_f(const StepPolynomials<Scalar>& sp, Scalar sigma, Scalar alpha) {
  if (!(alpha > Scalar(0))) throw InvalidInput("eval_f: alpha must be positive");
  const Scalar tm = sp.theta * sp.mu / alpha;
  return (((sp.a4 * sigma - sp.a3) * sigma + (sp.a2 - tm * tm)) * sigma - sp.a1) * sigma + sp.a0;
}

// g(sigma) = (2a4 - a3) s^4 + (2a2 - a3) s^3 - 3a1 s^2 + (4a0 + a1) s - 2a0.
template <typename Scalar>
Scalar eval_g(const StepPolynomials<Scalar>& sp, Scalar sigma) {
  return (((Scalar(2) * sp.a4 - sp.a3) * sigma + (Scalar(2) * sp.a2 - sp.a3)) * sigma -
          Scalar(3) * sp.a1) * sigma * sigma +
         (Scalar(4) * sp.a0 + sp.a1) * sigma - Scalar(2) * sp.a0;
}

// h(sigma) = ||p - sigma q + sigma^2 r||^2.
template <typename Scalar>
Scalar eval_h(const StepPolynomials<Scalar>& sp, Scalar sigma) {
  return (((sp.a4 * sigma - sp.a3) * sigma + sp.a2) * sigma - sp.a1) * sigma + sp.a0;
}

template <typename Scalar>
QuarticPoly<Scalar> f_poly_alpha1(const StepPolynomials<Scalar>& sp) {
  const Scalar tm = sp.theta * sp.mu;
  return {sp.a4, -sp.a3, sp.a2 - tm * tm, -sp.a1, sp.a0};
}

template <typename Scalar>
QuarticPoly<Scalar> g_poly(const StepPolynomials<Scalar>& sp) {
  return {Scalar(2) * sp.a4 - sp.a3, Scalar(2) * sp.a2 - sp.a3, Scalar(-3) * sp.a1,
          Scalar(4) * sp.a0 + sp.a1, Scalar(-2) * sp.a0};
}

namespace detail {

// Smaller predicted gap wins; ties go to larger alpha, then smaller sigma.
template <typename Scalar>
bool better(const CandidatePair<Scalar>& a, const CandidatePair<Scalar>& b) {
  if (a.predicted_mu != b.predicted_mu) return a.predicted_mu < b.predicted_mu;
  if (a.alpha != b.alpha) return a.alpha > b.alpha;
  return a.sigma < b.sigma;
}

// Largest alpha in [lo, hi] with f(sigma, alpha) <= 0, given f(sigma, lo) <= 0.
template <typename Scalar>
Scalar bisect_alpha(const StepPolynomials<Scalar>& sp, Scalar sigma, Scalar lo, Scalar hi) {
  if (eval_f(sp, sigma, hi) <= Scalar(0)) return hi;
  for (int it = 0; it < 60; ++it) {
    const Scalar mid = (lo + hi) / Scalar(2);
    if (eval_f(sp, sigma, mid) <= Scalar(0)) lo = mid;
    else hi = mid;
  }
  return lo;
}

template <typename Scalar>
std::optional<CandidatePair<Scalar>> grid_fallback(const StepPolynomials<Scalar>& sp) {
  constexpr int kGrid = 64;
  std::optional<CandidatePair<Scalar>> best;
  Scalar best_sigma_alpha_hi = 0;
  for (int i = 1; i < kGrid; ++i) {
    const Scalar sigma = Scalar(i) / Scalar(kGrid);
    for (int j = kGrid; j >= 1; --j) {
      const Scalar alpha = Scalar(j) / Scalar(kGrid);
      if (eval_f(sp, sigma, alpha) > Scalar(0)) continue;
      CandidatePair<Scalar> c{sigma, alpha, predicted_gap(sp.mu, sigma, alpha),
                              CandidateOrigin::grid_fallback};
      if (!best || better(c, *best)) {
        best = c;
        best_sigma_alpha_hi = std::min(Scalar(1), alpha + Scalar(1) / Scalar(kGrid));
      }
      break;  // f increases with alpha: the largest feasible alpha is the best for this sigma
    }
  }
  if (best) {
    best->alpha = bisect_alpha(sp, best->sigma, best->alpha, best_sigma_alpha_hi);
    best->predicted_mu = predicted_gap(sp.mu, best->sigma, best->alpha);
  }
  return best;
}

}  // namespace detail

// Optimal (sigma, alpha). Candidates are the smallest root of f(., 1) with
// alpha = 1, and every root of g in (0,1) with alpha = theta mu sigma / sqrt(h).
template <typename Scalar>
CandidatePair<Scalar> select_step(const StepPolynomials<Scalar>& sp,
                                  Scalar a0_zero_rel_tol = Scalar(1e-12)) {
  using std::sqrt;
  const Scalar mu = sp.mu;
  const Scalar n = static_cast<Scalar>(std::max<Index>(sp.n(), 1));
  if (!(std::isfinite(sp.a0) && std::isfinite(sp.a1) && std::isfinite(sp.a2) &&
        std::isfinite(sp.a3) && std::isfinite(sp.a4) && std::isfinite(mu)))
    throw InvalidInput("select_step: non-finite polynomial data");

  if (sqrt(sp.a0) <= a0_zero_rel_tol * mu * sqrt(n))
    return {Scalar(0), Scalar(1), Scalar(0), CandidateOrigin::a0_zero};

  std::optional<CandidatePair<Scalar>> best;
  const auto offer = [&](const CandidatePair<Scalar>& c) {
    if (!best || detail::better(c, *best)) best = c;
  };

  const auto f_roots = real_roots_in_open_unit(f_poly_alpha1(sp));
  if (!f_roots.empty()) {
    const Scalar sigma = f_roots.front();
    offer({sigma, Scalar(1), predicted_gap(mu, sigma, Scalar(1)), CandidateOrigin::f_root_alpha1});
  }

  for (Scalar sigma : real_roots_in_open_unit(g_poly(sp))) {
    const Scalar h = eval_h(sp, sigma);
    Scalar alpha = h > Scalar(0) ? sp.theta * mu * sigma / sqrt(h) : Scalar(1);
    if (!(alpha > Scalar(0))) continue;
    if (alpha >= Scalar(1)) {
      if (eval_f(sp, sigma, Scalar(1)) > Scalar(0)) continue;
      alpha = Scalar(1);
    }
    offer({sigma, alpha, predicted_gap(mu, sigma, alpha), CandidateOrigin::g_root});
  }

  if (best) return *best;
  if (auto fb = detail::grid_fallback(sp)) return *fb;
  throw NoFeasibleStep("select_step: no (sigma, alpha) satisfies the neighborhood condition");
}

}  // namespace optlp

#endif  // OPTLP_STEPSEL_HPP_
