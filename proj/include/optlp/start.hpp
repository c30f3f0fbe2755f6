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

#ifndef OPTLP_START_HPP_
#define OPTLP_START_HPP_

// Strategies for finding a strictly feasible start inside the central-path
// neighborhood.
//
//  heuristic_start   one least-squares correction of x = s = e; cheap, often fails.
//  interior_start    phase I: primal affine scaling on  min t  s.t.  Ax + t(b - Ae) = b,
//                    dual affine scaling on  min t  s.t.  c - A^T y + t e >= 0,
//                    then damped centering Newton steps at fixed mu.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "optlp/linalg.hpp"
#include "optlp/log.hpp"
#include "optlp/model.hpp"

namespace optlp {

template <typename Scalar>
std::optional<Iterate<Scalar>> heuristic_start(const StandardLp<Scalar>& lp, Scalar theta) {
  const Vector<Scalar> e = Vector<Scalar>::Ones(lp.n());
  Vector<Scalar> x = e + min_norm_solve<Scalar>(lp.a(), lp.b() - lp.a() * e);
  Vector<Scalar> y = least_squares_transpose<Scalar>(lp.a(), lp.c() - e);
  Vector<Scalar> s = lp.c() - lp.a().transpose() * y;
  if (!x.allFinite() || !s.allFinite()) return std::nullopt;
  if (!(x.array() > Scalar(0)).all() || !(s.array() > Scalar(0)).all()) return std::nullopt;
  if (neighborhood_distance(x, s) > theta * duality_gap(x, s)) return std::nullopt;
  return Iterate<Scalar>::make(std::move(x), std::move(y), std::move(s));
}

struct InteriorStartOptions {
  double target_distance = 0.25;  // stop centering once ||xs - mu e|| <= this * mu
  int max_phase_iter = 500;
  int max_center_iter = 500;
};

template <typename Scalar = double>
struct InteriorStartResult {
  std::optional<Iterate<Scalar>> point;
  std::string failure;  // empty on success
  int primal_iterations = 0;
  int dual_iterations = 0;
  int centering_iterations = 0;
};

namespace detail {

template <typename Scalar>
Scalar ratio_to_boundary(const Vector<Scalar>& z, const Vector<Scalar>& dz) {
  Scalar amax = std::numeric_limits<Scalar>::infinity();
  for (Index i = 0; i < z.size(); ++i)
    if (dz(i) < Scalar(0)) amax = std::min(amax, -z(i) / dz(i));
  return amax;
}

// Strictly positive x with Ax = b, or nullopt.
template <typename Scalar>
std::optional<Vector<Scalar>> primal_phase(const StandardLp<Scalar>& lp, int max_iter,
                                           int& iterations) {
  const Index m = lp.m(), n = lp.n();
  const Vector<Scalar> e = Vector<Scalar>::Ones(n);
  const Vector<Scalar> d = lp.b() - lp.a() * e;
  Matrix<Scalar> aug(m, n + 1);
  aug.leftCols(n) = lp.a();
  aug.col(n) = d;

  Vector<Scalar> z = Vector<Scalar>::Ones(n + 1);
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  if (d.norm() <= Scalar(100) * eps * (Scalar(1) + lp.b().norm())) return e;

  for (iterations = 0; iterations < max_iter; ++iterations) {
    const Scalar t = z(n);
    if (t < Scalar(1)) {
      const Vector<Scalar> x = z.head(n);
      if ((x.array() > t).all()) return ((x.array() - t) / (Scalar(1) - t)).matrix();
    }
    // Scaled steepest descent for t projected onto null([A d] Z).
    const Matrix<Scalar> scaled = aug * z.asDiagonal();
    Eigen::HouseholderQR<Matrix<Scalar>> qr(scaled.transpose());
    const Matrix<Scalar> q = qr.householderQ() * Matrix<Scalar>::Identity(n + 1, m);
    Vector<Scalar> grad = Vector<Scalar>::Zero(n + 1);
    grad(n) = t;
    const Vector<Scalar> g = grad - q * (q.transpose() * grad);
    const Vector<Scalar> dz = -z.cwiseProduct(g);
    if (!(dz(n) < Scalar(0)) || !dz.allFinite()) return std::nullopt;
    const Scalar amax = ratio_to_boundary(z, dz);
    const Scalar to_zero = -t / dz(n);
    if (to_zero <= Scalar(0.9) * amax) {
      z += to_zero * dz;
      return Vector<Scalar>(z.head(n));
    }
    z += (Scalar(2) / Scalar(3)) * amax * dz;
  }
  return std::nullopt;
}

// y with c - A^T y > 0 componentwise, or nullopt.
template <typename Scalar>
std::optional<Vector<Scalar>> dual_phase(const StandardLp<Scalar>& lp, int max_iter,
                                         int& iterations) {
  const Index m = lp.m(), n = lp.n();
  const Vector<Scalar> e = Vector<Scalar>::Ones(n);
  Vector<Scalar> y = least_squares_transpose<Scalar>(lp.a(), lp.c() - e);
  iterations = 0;
  {
    const Vector<Scalar> s = lp.c() - lp.a().transpose() * y;
    if ((s.array() > Scalar(0)).all()) return y;
  }
  Matrix<Scalar> slopes(n, m + 1);  // s(y, t) = c + slopes * (y, t)
  slopes.leftCols(m) = -lp.a().transpose();
  slopes.col(m).setOnes();
  Vector<Scalar> z(m + 1);
  z.head(m) = y;
  z(m) = Scalar(1) - (lp.c() - lp.a().transpose() * y).minCoeff();
  Vector<Scalar> w = Vector<Scalar>::Zero(m + 1);
  w(m) = Scalar(1);

  for (iterations = 1; iterations <= max_iter; ++iterations) {
    const Vector<Scalar> s = lp.c() + slopes * z;
    const Matrix<Scalar> scaled = s.cwiseInverse().asDiagonal() * slopes;
    Eigen::HouseholderQR<Matrix<Scalar>> qr(scaled);
    const auto r = qr.matrixQR().topRows(m + 1).template triangularView<Eigen::Upper>();
    const Vector<Scalar> dz = -r.solve(r.transpose().solve(w));
    const Vector<Scalar> ds = slopes * dz;
    if (!dz.allFinite() || !(dz(m) < Scalar(0))) return std::nullopt;
    Scalar step = Scalar(0.9) * ratio_to_boundary(s, ds);
    if (!std::isfinite(step)) step = (std::abs(z(m)) + Scalar(1)) / -dz(m);
    z += step * dz;
    if (z(m) < Scalar(0)) return Vector<Scalar>(z.head(m));
  }
  return std::nullopt;
}

}  // namespace detail

template <typename Scalar>
InteriorStartResult<Scalar> interior_start(const StandardLp<Scalar>& lp,
                                           const InteriorStartOptions& opts = {}) {
  InteriorStartResult<Scalar> result;
  auto x_opt = detail::primal_phase(lp, opts.max_phase_iter, result.primal_iterations);
  if (!x_opt) {
    result.failure = "primal phase found no strictly positive feasible x";
    return result;
  }
  auto y_opt = detail::dual_phase(lp, opts.max_phase_iter, result.dual_iterations);
  if (!y_opt) {
    result.failure = "dual phase found no y with c - A^T y > 0";
    return result;
  }
  Vector<Scalar> x = std::move(*x_opt);
  Vector<Scalar> y = std::move(*y_opt);
  // keep Ax = b to working precision
  x += min_norm_solve<Scalar>(lp.a(), lp.b() - lp.a() * x);
  Vector<Scalar> s = lp.c() - lp.a().transpose() * y;
  if (!(x.array() > Scalar(0)).all() || !(s.array() > Scalar(0)).all()) {
    result.failure = "phase I point lost positivity";
    return result;
  }

  const Scalar target = static_cast<Scalar>(opts.target_distance);
  constexpr int kLineSamples = 50;
  for (result.centering_iterations = 0;; ++result.centering_iterations) {
    const Scalar mu = duality_gap(x, s);
    if (neighborhood_distance(x, s) <= target * mu) break;
    if (result.centering_iterations >= opts.max_center_iter) {
      result.failure = "centering did not reach the target neighborhood";
      return result;
    }
    // Newton step towards x o s = mu e; null-space part via the complement of Q2.
    const Vector<Scalar> d = x.cwiseQuotient(s).cwiseSqrt();
    const Vector<Scalar> root_xs = x.cwiseProduct(s).cwiseSqrt();
    const Vector<Scalar> v = (x.cwiseProduct(s).array() - mu).matrix().cwiseQuotient(root_xs);
    auto qr = qr_thin(d.asDiagonal() * lp.a().transpose());
    const Vector<Scalar> t = qr.q.transpose() * v;
    const Vector<Scalar> vs = qr.q * t;
    const Vector<Scalar> dx = d.cwiseProduct(v - vs);
    const Vector<Scalar> ds = vs.cwiseQuotient(d);
    const Vector<Scalar> dy = -solve_upper(qr.r, t);

    Scalar amax = Scalar(1);
    for (Index i = 0; i < x.size(); ++i) {
      if (dx(i) > Scalar(0)) amax = std::min(amax, Scalar(0.95) * x(i) / dx(i));
      if (ds(i) > Scalar(0)) amax = std::min(amax, Scalar(0.95) * s(i) / ds(i));
    }
    Scalar best_alpha = 0, best_dist = std::numeric_limits<Scalar>::infinity();
    for (int j = 1; j <= kLineSamples; ++j) {
      const Scalar alpha = amax * Scalar(j) / Scalar(kLineSamples);
      const Vector<Scalar> xn = x - alpha * dx;
      const Vector<Scalar> sn = s - alpha * ds;
      const Scalar dist = neighborhood_distance(xn, sn) / duality_gap(xn, sn);
      if (dist < best_dist) {
        best_dist = dist;
        best_alpha = alpha;
      }
    }
    if (!(best_alpha > Scalar(0))) {
      result.failure = "centering step collapsed";
      return result;
    }
    x -= best_alpha * dx;
    s -= best_alpha * ds;
    y -= best_alpha * dy;
  }
  // re-derive s from y so dual feasibility holds to rounding
  s = lp.c() - lp.a().transpose() * y;
  if (!(x.array() > Scalar(0)).all() || !(s.array() > Scalar(0)).all()) {
    result.failure = "centered point lost positivity";
    return result;
  }
  log().info("interior start for '{}': primal {} it, dual {} it, centering {} it", lp.name(),
             result.primal_iterations, result.dual_iterations, result.centering_iterations);
  result.point = Iterate<Scalar>::make(std::move(x), std::move(y), std::move(s));
  return result;
}

}  // namespace optlp

#endif  // OPTLP_START_HPP_
