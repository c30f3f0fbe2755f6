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

#ifndef OPTLP_MODEL_HPP_
#define OPTLP_MODEL_HPP_

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "optlp/errors.hpp"
#include "optlp/linalg.hpp"
#include "optlp/log.hpp"

namespace optlp {

// min c^T x  s.t.  a x = b, x >= 0, with a (m x n) of full row rank and m < n.
// Dependent rows of the input are dropped at construction.
template <typename Scalar = double>
class StandardLp {
 public:
  static StandardLp create(Matrix<Scalar> a, Vector<Scalar> b, Vector<Scalar> c,
                           std::string name = {}) {
    if (a.rows() != b.size() || a.cols() != c.size())
      throw InvalidInput("StandardLp: dimension mismatch between a, b and c");
    if (!a.allFinite() || !b.allFinite() || !c.allFinite())
      throw InvalidInput("StandardLp: non-finite data");
    if (a.cols() == 0) throw InvalidInput("StandardLp: no variables");

    StandardLp lp;
    lp.name_ = std::move(name);
    const auto info = rank_reveal(a);
    if (info.rank < a.rows()) {
      std::vector<bool> keep(static_cast<std::size_t>(a.rows()), false);
      for (Index i : info.kept_rows) keep[static_cast<std::size_t>(i)] = true;
      for (Index i = 0; i < a.rows(); ++i)
        if (!keep[static_cast<std::size_t>(i)]) lp.dropped_rows_.push_back(i);
      log().warn("problem '{}': dropping {} linearly dependent row(s) of A", lp.name_,
                 lp.dropped_rows_.size());
      Matrix<Scalar> a_red(info.rank, a.cols());
      Vector<Scalar> b_red(info.rank);
      for (Index k = 0; k < info.rank; ++k) {
        a_red.row(k) = a.row(info.kept_rows[static_cast<std::size_t>(k)]);
        b_red(k) = b(info.kept_rows[static_cast<std::size_t>(k)]);
      }
      a = std::move(a_red);
      b = std::move(b_red);
    }
    if (a.rows() >= a.cols())
      throw InvalidInput("StandardLp: need fewer (independent) rows than columns");
    lp.a_ = std::move(a);
    lp.b_ = std::move(b);
    lp.c_ = std::move(c);
    return lp;
  }

  const Matrix<Scalar>& a() const { return a_; }
  const Vector<Scalar>& b() const { return b_; }
  const Vector<Scalar>& c() const { return c_; }
  const std::string& name() const { return name_; }
  Index m() const { return a_.rows(); }
  Index n() const { return a_.cols(); }
  // Indices (into the input rows) removed as linearly dependent.
  const std::vector<Index>& dropped_rows() const { return dropped_rows_; }

 private:
  StandardLp() = default;

  Matrix<Scalar> a_;
  Vector<Scalar> b_;
  Vector<Scalar> c_;
  std::string name_;
  std::vector<Index> dropped_rows_;
};

template <typename Scalar>
Scalar duality_gap(const Vector<Scalar>& x, const Vector<Scalar>& s) {
  if (x.size() != s.size() || x.size() == 0)
    throw InvalidInput("duality_gap: vectors must have equal nonzero length");
  return x.dot(s) / static_cast<Scalar>(x.size());
}

// ||x o s - mu e||_2 with mu the duality gap of (x, s).
template <typename Scalar>
Scalar neighborhood_distance(const Vector<Scalar>& x, const Vector<Scalar>& s) {
  const Scalar mu = duality_gap(x, s);
  if ((x.array() <= Scalar(0)).any() || (s.array() <= Scalar(0)).any())
    throw InvalidInput("neighborhood_distance: x and s must be strictly positive");
  return (x.cwiseProduct(s).array() - mu).matrix().norm();
}

// Primal-dual point. Interior iterates have x, s > 0; only the solver's exact
// terminal step may produce a boundary point (x, s >= 0).
template <typename Scalar = double>
class Iterate {
 public:
  static Iterate make(Vector<Scalar> x, Vector<Scalar> y, Vector<Scalar> s) {
    check_shape(x, y, s);
    if (!(x.array() > Scalar(0)).all() || !(s.array() > Scalar(0)).all())
      throw InvalidInput("Iterate: x and s must be strictly positive");
    return Iterate(std::move(x), std::move(y), std::move(s));
  }

  static Iterate terminal(Vector<Scalar> x, Vector<Scalar> y, Vector<Scalar> s) {
    check_shape(x, y, s);
    if (!(x.array() >= Scalar(0)).all() || !(s.array() >= Scalar(0)).all())
      throw InvalidInput("Iterate: x and s must be nonnegative");
    return Iterate(std::move(x), std::move(y), std::move(s));
  }

  const Vector<Scalar>& x() const { return x_; }
  const Vector<Scalar>& y() const { return y_; }
  const Vector<Scalar>& s() const { return s_; }
  Scalar mu() const { return mu_; }
  Index n() const { return x_.size(); }
  Index m() const { return y_.size(); }
  bool interior() const {
    return (x_.array() > Scalar(0)).all() && (s_.array() > Scalar(0)).all();
  }

 private:
  Iterate(Vector<Scalar> x, Vector<Scalar> y, Vector<Scalar> s)
      : x_(std::move(x)), y_(std::move(y)), s_(std::move(s)), mu_(duality_gap(x_, s_)) {}

  static void check_shape(const Vector<Scalar>& x, const Vector<Scalar>& y,
                          const Vector<Scalar>& s) {
    if (x.size() == 0 || x.size() != s.size())
      throw InvalidInput("Iterate: x and s must have equal nonzero length");
    if (!x.allFinite() || !y.allFinite() || !s.allFinite())
      throw InvalidInput("Iterate: non-finite component");
  }

  Vector<Scalar> x_;
  Vector<Scalar> y_;
  Vector<Scalar> s_;
  Scalar mu_;
};

template <typename Scalar = double>
struct SolverConfig {
  Scalar theta = Scalar(0.99);
  Scalar tol = Scalar(1e-8);
  int max_iter = 200;
  int safeguard_backtracks = 30;
  Scalar a0_zero_rel_tol = Scalar(1e-12);

  void validate() const {
    if (!(theta > Scalar(0) && theta < Scalar(1)))
      throw InvalidInput("SolverConfig: theta must lie in (0,1)");
    if (!(tol > Scalar(0))) throw InvalidInput("SolverConfig: tol must be positive");
    if (max_iter <= 0) throw InvalidInput("SolverConfig: max_iter must be positive");
    if (safeguard_backtracks <= 0)
      throw InvalidInput("SolverConfig: safeguard_backtracks must be positive");
    if (!(a0_zero_rel_tol > Scalar(0)))
      throw InvalidInput("SolverConfig: a0_zero_rel_tol must be positive");
  }
};

template <typename Scalar>
struct Residuals {
  Scalar primal;  // ||Ax - b|| / (1 + ||b||)
  Scalar dual;    // ||A^T y + s - c|| / (1 + ||c||)
};

template <typename Scalar>
Residuals<Scalar> residuals(const StandardLp<Scalar>& lp, const Iterate<Scalar>& it) {
  if (it.n() != lp.n() || it.m() != lp.m())
    throw InvalidInput("residuals: iterate dimensions do not match the problem");
  const Vector<Scalar> rp = lp.a() * it.x() - lp.b();
  const Vector<Scalar> rd = lp.a().transpose() * it.y() + it.s() - lp.c();
  return {rp.norm() / (Scalar(1) + lp.b().norm()), rd.norm() / (Scalar(1) + lp.c().norm())};
}

// mu / max{1, |c^T x|, |b^T y|} < tol.
template <typename Scalar>
bool stopping_criterion(const StandardLp<Scalar>& lp, const Iterate<Scalar>& it, Scalar tol) {
  using std::abs;
  const Scalar denom =
      std::max({Scalar(1), abs(lp.c().dot(it.x())), abs(lp.b().dot(it.y()))});
  return it.mu() / denom < tol;
}

}  // namespace optlp

#endif  // OPTLP_MODEL_HPP_
