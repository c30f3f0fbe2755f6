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

#ifndef OPTLP_SYNTHETIC_HPP_
#define OPTLP_SYNTHETIC_HPP_

#include <cstdint>
#include <random>
#include <string>

#include "optlp/errors.hpp"
#include "optlp/linalg.hpp"
#include "optlp/model.hpp"

namespace optlp {

template <typename Scalar = double>
struct SyntheticInstance {
  StandardLp<Scalar> lp;
  Iterate<Scalar> start;
};

// Random LP with a known perfectly centered start: A ~ N(0,1) of full row rank,
// x0 = s0 = e, y0 ~ N(0,1), b = A x0, c = A^T y0 + s0.
template <typename Scalar = double>
SyntheticInstance<Scalar> generate_synthetic(Index n, Index m, std::uint64_t seed) {
  if (!(m >= 1 && m < n)) throw InvalidInput("generate_synthetic: need 1 <= m < n");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto draw = [&] { return static_cast<Scalar>(normal(rng)); };

  constexpr int kMaxDraws = 16;
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    Matrix<Scalar> a(m, n);
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < m; ++i) a(i, j) = draw();
    Vector<Scalar> y0(m);
    for (Index i = 0; i < m; ++i) y0(i) = draw();
    if (rank_reveal(a).rank < m) continue;

    const Vector<Scalar> x0 = Vector<Scalar>::Ones(n);
    const Vector<Scalar> s0 = Vector<Scalar>::Ones(n);
    Vector<Scalar> b = a * x0;
    Vector<Scalar> c = a.transpose() * y0 + s0;
    std::string name = "synthetic_n" + std::to_string(n) + "_m" + std::to_string(m) + "_s" +
                       std::to_string(seed);
    auto lp = StandardLp<Scalar>::create(std::move(a), std::move(b), std::move(c), std::move(name));
    return {std::move(lp), Iterate<Scalar>::make(x0, y0, s0)};
  }
  throw RankError("generate_synthetic: could not draw a full-rank matrix", -1);
}

}  // namespace optlp

#endif  // OPTLP_SYNTHETIC_HPP_
