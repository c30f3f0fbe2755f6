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

#ifndef OPTLP_LINALG_HPP_
#define OPTLP_LINALG_HPP_

// Dense kernels used by the path-following solver. All matrices are Eigen
// column-major dense matrices; the scalar type is a template parameter so the
// same code runs in double and in extended precision (tests use long double
// for oracles).

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "optlp/errors.hpp"

namespace optlp {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct QrFactors {
  Matrix<Scalar> q;  // rows x cols, orthonormal columns
  Matrix<Scalar> r;  // cols x cols, upper triangular with nonnegative diagonal
  std::vector<Index> column_permutation;  // identity unless pivoted
};

template <typename Scalar>
struct RankInfo {
  Index rank = 0;
  std::vector<Index> kept_rows;  // ascending
};

template <typename Derived>
bool all_finite(const Eigen::DenseBase<Derived>& m) {
  return m.allFinite();
}

// Thin Householder QR, mat = q * r, with the signs fixed so that diag(r) >= 0.
template <typename Derived>
QrFactors<typename Derived::Scalar> qr_thin(const Eigen::MatrixBase<Derived>& mat) {
  using Scalar = typename Derived::Scalar;
  const Index rows = mat.rows();
  const Index cols = mat.cols();
  if (rows < cols) throw InvalidInput("qr_thin: rows < cols");
  if (!mat.allFinite()) throw InvalidInput("qr_thin: non-finite entry");

  Eigen::HouseholderQR<Matrix<Scalar>> qr(mat);
  QrFactors<Scalar> out;
  out.q = qr.householderQ() * Matrix<Scalar>::Identity(rows, cols);
  out.r = qr.matrixQR().topRows(cols).template triangularView<Eigen::Upper>();
  for (Index j = 0; j < cols; ++j) {
    if (out.r(j, j) < Scalar(0)) {
      out.r.row(j) *= Scalar(-1);
      out.q.col(j) *= Scalar(-1);
    }
  }
  out.column_permutation.resize(static_cast<std::size_t>(cols));
  for (Index j = 0; j < cols; ++j) out.column_permutation[static_cast<std::size_t>(j)] = j;
  return out;
}

// Rank of `a` from a column-pivoted QR of a^T: the number of |R_ii| above
// rel_tol * |R_00|. kept_rows is a maximal independent subset of the rows.
template <typename Derived>
RankInfo<typename Derived::Scalar> rank_reveal(const Eigen::MatrixBase<Derived>& a,
                                               typename Derived::Scalar rel_tol = 1e-12) {
  using Scalar = typename Derived::Scalar;
  if (!(rel_tol > Scalar(0) && rel_tol < Scalar(1)))
    throw InvalidInput("rank_reveal: rel_tol must lie in (0,1)");
  RankInfo<Scalar> info;
  if (a.rows() == 0 || a.cols() == 0) return info;

  Matrix<Scalar> at = a.transpose();
  Eigen::ColPivHouseholderQR<Matrix<Scalar>> qr(at);
  const Index k = std::min(at.rows(), at.cols());
  const Scalar lead = std::abs(qr.matrixQR()(0, 0));
  if (!(lead > Scalar(0))) return info;
  while (info.rank < k && std::abs(qr.matrixQR()(info.rank, info.rank)) > rel_tol * lead)
    ++info.rank;
  const auto& perm = qr.colsPermutation().indices();
  info.kept_rows.assign(perm.data(), perm.data() + info.rank);
  std::sort(info.kept_rows.begin(), info.kept_rows.end());
  return info;
}

// Orthonormal basis of null(a), taken as the trailing n-m columns of the full
// Q factor of a^T. Requires a (m x n, m < n) to have full row rank.
template <typename Derived>
Matrix<typename Derived::Scalar> null_space_basis(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index m = a.rows();
  const Index n = a.cols();
  if (m >= n) throw InvalidInput("null_space_basis: need rows < cols");
  if (!a.allFinite()) throw InvalidInput("null_space_basis: non-finite entry");
  if (m == 0) return Matrix<Scalar>::Identity(n, n);

  const auto info = rank_reveal(a);
  if (info.rank < m)
    throw RankError("null_space_basis: matrix is rank deficient (rank " +
                        std::to_string(info.rank) + " < " + std::to_string(m) + ")",
                    info.rank);

  Eigen::HouseholderQR<Matrix<Scalar>> qr(a.transpose());
  Matrix<Scalar> tail = Matrix<Scalar>::Zero(n, n - m);
  tail.bottomRows(n - m).setIdentity();
  return qr.householderQ() * tail;
}

// Solves r * z = rhs for upper-triangular r.
template <typename Scalar, typename Derived>
Vector<Scalar> solve_upper(const Matrix<Scalar>& r, const Eigen::MatrixBase<Derived>& rhs) {
  return r.template triangularView<Eigen::Upper>().solve(rhs);
}

// Minimum-norm solution of a z = rhs (a with full row rank), via QR of a^T.
template <typename Scalar>
Vector<Scalar> min_norm_solve(const Matrix<Scalar>& a, const Vector<Scalar>& rhs) {
  Eigen::HouseholderQR<Matrix<Scalar>> qr(a.transpose());
  const Index m = a.rows();
  Vector<Scalar> w = qr.matrixQR()
                         .topRows(m)
                         .template triangularView<Eigen::Upper>()
                         .transpose()
                         .solve(rhs);
  Vector<Scalar> padded = Vector<Scalar>::Zero(a.cols());
  padded.head(m) = w;
  return qr.householderQ() * padded;
}

// Least-squares solution of min ||a^T y - rhs||.
template <typename Scalar>
Vector<Scalar> least_squares_transpose(const Matrix<Scalar>& a, const Vector<Scalar>& rhs) {
  Eigen::HouseholderQR<Matrix<Scalar>> qr(a.transpose());
  return qr.solve(rhs);
}

}  // namespace optlp

#endif  // OPTLP_LINALG_HPP_
