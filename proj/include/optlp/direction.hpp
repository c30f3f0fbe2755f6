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

#ifndef OPTLP_DIRECTION_HPP_
#define OPTLP_DIRECTION_HPP_

// Newton direction of the feasible path-following step, split into the part
// independent of the centering parameter sigma and the part proportional to
// it:  dx(sigma) = p_x - sigma q_x,  ds(sigma) = p_s - sigma q_s,
//      dy(sigma) = -(y_p - sigma y_q).
// Everything is computed through orthonormal QR factors of the scaled
// null-space basis and the scaled A^T, never through normal equations.

#include <cmath>
#include <string>
#include <utility>

#include "optlp/errors.hpp"
#include "optlp/linalg.hpp"
#include "optlp/model.hpp"

namespace optlp {

template <typename Scalar = double>
struct FactorCache {
  Matrix<Scalar> q1;  // n x (n-m), from QR of D^{-1} Ahat
  Matrix<Scalar> q2;  // n x m, from QR of D A^T
  Matrix<Scalar> r2;  // m x m upper triangular, D A^T = q2 r2
  Vector<Scalar> d;   // sqrt(x_i / s_i)
};

template <typename Scalar = double>
struct DirectionDecomposition {
  Vector<Scalar> p_x, q_x, p_s, q_s;
  Vector<Scalar> y_p, y_q;
};

template <typename Scalar = double>
struct Direction {
  Vector<Scalar> dx, dy, ds;
};

// Coefficients of ||p - sigma q + sigma^2 r||^2 = a4 s^4 - a3 s^3 + a2 s^2 - a1 s + a0.
template <typename Scalar = double>
struct StepPolynomials {
  Scalar a0 = 0, a1 = 0, a2 = 0, a3 = 0, a4 = 0;
  Scalar theta = 0;
  Scalar mu = 0;
  Vector<Scalar> p, q, r;

  Index n() const { return p.size(); }
};

inline constexpr double kMaxScalingRatio = 1e16;

template <typename Scalar>
FactorCache<Scalar> build_factors(const StandardLp<Scalar>& lp, const Iterate<Scalar>& it,
                                  const Matrix<Scalar>& nullbasis) {
  const Index n = lp.n();
  const Index m = lp.m();
  if (it.n() != n || it.m() != m)
    throw InvalidInput("build_factors: iterate does not match problem dimensions");
  if (nullbasis.rows() != n || nullbasis.cols() != n - m)
    throw InvalidInput("build_factors: null-space basis has wrong shape");
  if (!it.interior()) throw InvalidInput("build_factors: iterate must be strictly positive");

  FactorCache<Scalar> cache;
  cache.d.resize(n);
  const Scalar limit = static_cast<Scalar>(kMaxScalingRatio);
  for (Index i = 0; i < n; ++i) {
    const Scalar ratio = it.x()(i) / it.s()(i);
    if (!(ratio <= limit && ratio >= Scalar(1) / limit) || !std::isfinite(ratio))
      throw IllConditioned("build_factors: x/s ratio out of range at index " + std::to_string(i),
                           i);
    cache.d(i) = std::sqrt(ratio);
  }

  auto qr1 = qr_thin(cache.d.cwiseInverse().asDiagonal() * nullbasis);
  auto qr2 = qr_thin(cache.d.asDiagonal() * lp.a().transpose());
  if (!qr1.q.allFinite() || !qr2.q.allFinite() || !qr2.r.allFinite())
    throw IllConditioned("build_factors: non-finite factor", -1);
  cache.q1 = std::move(qr1.q);
  cache.q2 = std::move(qr2.q);
  cache.r2 = std::move(qr2.r);
  return cache;
}

template <typename Scalar>
DirectionDecomposition<Scalar> decompose(const FactorCache<Scalar>& cache,
                                         const Iterate<Scalar>& it) {
  const Vector<Scalar> root_xs = it.x().cwiseProduct(it.s()).cwiseSqrt();
  const Vector<Scalar> scaled_inv = it.mu() * root_xs.cwiseInverse();

  DirectionDecomposition<Scalar> dec;
  const Vector<Scalar> t1 = cache.q2.transpose() * root_xs;
  const Vector<Scalar> t2 = cache.q2.transpose() * scaled_inv;
  dec.p_x = cache.d.cwiseProduct(cache.q1 * (cache.q1.transpose() * root_xs));
  dec.q_x = cache.d.cwiseProduct(cache.q1 * (cache.q1.transpose() * scaled_inv));
  dec.p_s = (cache.q2 * t1).cwiseQuotient(cache.d);
  dec.q_s = (cache.q2 * t2).cwiseQuotient(cache.d);
  dec.y_p = solve_upper(cache.r2, t1);
  dec.y_q = solve_upper(cache.r2, t2);
  const bool finite = dec.p_x.allFinite() && dec.q_x.allFinite() && dec.p_s.allFinite() &&
                      dec.q_s.allFinite() && dec.y_p.allFinite() && dec.y_q.allFinite();
  if (!finite) throw IllConditioned("decompose: non-finite direction", -1);
  return dec;
}

template <typename Scalar>
Direction<Scalar> assemble_direction(const DirectionDecomposition<Scalar>& dec, Scalar sigma) {
  return {dec.p_x - sigma * dec.q_x, -(dec.y_p - sigma * dec.y_q), dec.p_s - sigma * dec.q_s};
}

// Coefficients from the componentwise products p, q, r directly.
template <typename Scalar>
StepPolynomials<Scalar> make_step_polynomials(Vector<Scalar> p, Vector<Scalar> q, Vector<Scalar> r,
                                              Scalar theta, Scalar mu) {
  StepPolynomials<Scalar> sp;
  sp.theta = theta;
  sp.mu = mu;
  sp.a0 = p.squaredNorm();
  sp.a1 = Scalar(2) * q.dot(p);
  sp.a2 = Scalar(2) * p.dot(r) + q.squaredNorm();
  sp.a3 = Scalar(2) * q.dot(r);
  sp.a4 = r.squaredNorm();
  sp.p = std::move(p);
  sp.q = std::move(q);
  sp.r = std::move(r);
  return sp;
}

template <typename Scalar>
StepPolynomials<Scalar> step_polynomials(const DirectionDecomposition<Scalar>& dec, Scalar theta,
                                         Scalar mu) {
  return make_step_polynomials<Scalar>(
      dec.p_x.cwiseProduct(dec.p_s),
      dec.q_x.cwiseProduct(dec.p_s) + dec.p_x.cwiseProduct(dec.q_s),
      dec.q_x.cwiseProduct(dec.q_s), theta, mu);
}

}  // namespace optlp

#endif  // OPTLP_DIRECTION_HPP_
