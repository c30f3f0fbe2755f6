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

#ifndef OPTLP_QUARTIC_HPP_
#define OPTLP_QUARTIC_HPP_

// Closed-form real root finding for polynomials of degree <= 4. The quartic
// goes through Ferrari's resolvent cubic; every candidate is polished by
// Newton iteration on the original coefficients, and nearly-double roots are
// snapped to the nearby critical point.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "optlp/errors.hpp"

namespace optlp {

// c4 s^4 + c3 s^3 + c2 s^2 + c1 s + c0.
template <typename Scalar = double>
struct QuarticPoly {
  Scalar c4 = 0, c3 = 0, c2 = 0, c1 = 0, c0 = 0;

  Scalar operator()(Scalar s) const { return (((c4 * s + c3) * s + c2) * s + c1) * s + c0; }
  Scalar derivative(Scalar s) const {
    return ((Scalar(4) * c4 * s + Scalar(3) * c3) * s + Scalar(2) * c2) * s + c1;
  }
  Scalar second_derivative(Scalar s) const {
    return (Scalar(12) * c4 * s + Scalar(6) * c3) * s + Scalar(2) * c2;
  }
  // Magnitude bound on the rounding error of evaluating at s.
  Scalar abs_eval(Scalar s) const {
    using std::abs;
    const Scalar a = abs(s);
    return (((abs(c4) * a + abs(c3)) * a + abs(c2)) * a + abs(c1)) * a + abs(c0);
  }
  Scalar max_abs_coeff() const {
    using std::abs;
    return std::max({abs(c4), abs(c3), abs(c2), abs(c1), abs(c0)});
  }
  bool finite() const {
    using std::isfinite;
    return isfinite(c4) && isfinite(c3) && isfinite(c2) && isfinite(c1) && isfinite(c0);
  }
};

namespace detail {

template <typename Scalar>
using Complex = std::complex<Scalar>;

// Roots of a s^2 + b s + c (a != 0), cancellation-free form.
template <typename Scalar>
std::array<Complex<Scalar>, 2> quadratic_roots(Scalar a, Scalar b, Scalar c) {
  const Scalar disc = b * b - Scalar(4) * a * c;
  if (disc >= Scalar(0)) {
    const Scalar sq = std::sqrt(disc);
    const Scalar q = Scalar(-0.5) * (b + std::copysign(sq, b));
    if (q == Scalar(0)) return {Complex<Scalar>(0), Complex<Scalar>(0)};
    return {Complex<Scalar>(q / a), Complex<Scalar>(c / q)};
  }
  const Scalar re = -b / (Scalar(2) * a);
  const Scalar im = std::sqrt(-disc) / (Scalar(2) * std::abs(a));
  return {Complex<Scalar>(re, im), Complex<Scalar>(re, -im)};
}

// Quadratic with complex coefficients, monic: s^2 + b s + c.
template <typename Scalar>
std::array<Complex<Scalar>, 2> monic_quadratic_roots(Complex<Scalar> b, Complex<Scalar> c) {
  const Complex<Scalar> sq = std::sqrt(b * b - Scalar(4) * c);
  // pick the sign that avoids cancellation
  const Complex<Scalar> q =
      Scalar(-0.5) * (std::real(std::conj(b) * sq) >= Scalar(0) ? b + sq : b - sq);
  if (std::abs(q) == Scalar(0)) return {Complex<Scalar>(0), Complex<Scalar>(0)};
  return {q, c / q};
}

// Largest real root of the monic cubic s^3 + a s^2 + b s + c.
template <typename Scalar>
Scalar largest_real_cubic_root(Scalar a, Scalar b, Scalar c) {
  const Scalar a3 = a / Scalar(3);
  const Scalar p = b - a * a3;                                   // depressed t^3 + p t + q
  const Scalar q = Scalar(2) * a3 * a3 * a3 - a3 * b + c;
  Scalar t;
  const Scalar half_q = q / Scalar(2);
  const Scalar third_p = p / Scalar(3);
  const Scalar disc = half_q * half_q + third_p * third_p * third_p;
  if (disc > Scalar(0)) {
    const Scalar sq = std::sqrt(disc);
    const Scalar u = std::cbrt(-half_q + (half_q <= Scalar(0) ? sq : -sq));
    t = (u != Scalar(0)) ? u - third_p / u : Scalar(0);
  } else if (p == Scalar(0)) {
    t = std::cbrt(-q);
  } else {
    const Scalar r = std::sqrt(-third_p);
    Scalar arg = -half_q / (r * r * r);
    arg = std::clamp(arg, Scalar(-1), Scalar(1));
    t = Scalar(2) * r * std::cos(std::acos(arg) / Scalar(3));  // largest of three
  }
  Scalar s = t - a3;
  // Newton polish on the original cubic.
  for (int it = 0; it < 4; ++it) {
    const Scalar f = ((s + a) * s + b) * s + c;
    const Scalar df = (Scalar(3) * s + Scalar(2) * a) * s + b;
    if (df == Scalar(0)) break;
    const Scalar next = s - f / df;
    const Scalar fn = ((next + a) * next + b) * next + c;
    if (!(std::abs(fn) < std::abs(f))) break;
    s = next;
  }
  return s;
}

// All complex roots of a polynomial with leading coefficient c[0] != 0,
// coefficients in descending order, degree = c.size() - 1 <= 4.
template <typename Scalar>
std::vector<Complex<Scalar>> all_roots(const std::vector<Scalar>& c) {
  using C = Complex<Scalar>;
  const std::size_t deg = c.size() - 1;
  std::vector<C> out;
  if (deg == 1) {
    out.emplace_back(-c[1] / c[0]);
  } else if (deg == 2) {
    const auto r = quadratic_roots(c[0], c[1], c[2]);
    out.assign(r.begin(), r.end());
  } else if (deg == 3) {
    const Scalar a = c[1] / c[0], b = c[2] / c[0], d = c[3] / c[0];
    const Scalar s = largest_real_cubic_root(a, b, d);
    // deflate: s^3 + a s^2 + b s + d = (s - r)(s^2 + e s + f)
    const Scalar e = a + s;
    const Scalar f = (std::abs(s) > Scalar(1)) ? -d / s : b + s * e;
    out.emplace_back(s);
    const auto r = quadratic_roots(Scalar(1), e, f);
    out.insert(out.end(), r.begin(), r.end());
  } else if (deg == 4) {
    const Scalar a = c[1] / c[0], b = c[2] / c[0], cc = c[3] / c[0], d = c[4] / c[0];
    const Scalar a4 = a / Scalar(4);
    // depressed quartic y^4 + p y^2 + q y + r, s = y - a/4
    const Scalar p = b - Scalar(6) * a4 * a4;
    const Scalar q = cc - Scalar(2) * b * a4 + Scalar(8) * a4 * a4 * a4;
    const Scalar r = d - cc * a4 + b * a4 * a4 - Scalar(3) * a4 * a4 * a4 * a4;
    const Scalar scale = std::max({Scalar(1), std::abs(p), std::sqrt(std::abs(r))});
    if (std::abs(q) <= std::numeric_limits<Scalar>::epsilon() * scale * std::sqrt(scale)) {
      // biquadratic: z = y^2 solves z^2 + p z + r = 0
      const auto z = quadratic_roots(Scalar(1), p, r);
      for (const C& zi : z) {
        const C y = std::sqrt(zi);
        out.push_back(y - a4);
        out.push_back(-y - a4);
      }
    } else {
      // resolvent m^3 + p m^2 + (p^2/4 - r) m - q^2/8 = 0 has a positive root
      Scalar m = largest_real_cubic_root(p, p * p / Scalar(4) - r, -q * q / Scalar(8));
      if (!(m > Scalar(0))) m = std::numeric_limits<Scalar>::min();
      const Scalar w = std::sqrt(Scalar(2) * m);
      const Scalar base = p / Scalar(2) + m;
      const Scalar shift = q / (Scalar(2) * w);
      const auto r1 = monic_quadratic_roots(C(-w), C(base + shift));
      const auto r2 = monic_quadratic_roots(C(w), C(base - shift));
      for (const C& y : r1) out.push_back(y - a4);
      for (const C& y : r2) out.push_back(y - a4);
    }
  }
  return out;
}

}  // namespace detail

// Real roots of `poly` strictly inside (0,1), ascending, merged within `tol`.
// Complex candidates whose imaginary part is small are tested as possible
// (near-)double roots via the critical point of the polynomial.
template <typename Scalar>
std::vector<Scalar> real_roots_in_open_unit(const QuarticPoly<Scalar>& poly, Scalar tol = Scalar(1e-10)) {
  using std::abs;
  if (!poly.finite()) throw InvalidInput("real_roots_in_open_unit: non-finite coefficient");
  const Scalar scale = poly.max_abs_coeff();
  if (scale == Scalar(0))
    throw DegenerateInput("real_roots_in_open_unit: all coefficients are zero");

  const QuarticPoly<Scalar> p{poly.c4 / scale, poly.c3 / scale, poly.c2 / scale, poly.c1 / scale,
                              poly.c0 / scale};
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();

  // Drop negligible leading coefficients; their influence on (0,1) is below
  // rounding and the polish below uses the full polynomial anyway.
  std::vector<Scalar> coeffs{p.c4, p.c3, p.c2, p.c1, p.c0};
  const Scalar lead_tol = Scalar(64) * eps;
  std::size_t first = 0;
  while (first + 1 < coeffs.size() && abs(coeffs[first]) <= lead_tol) ++first;
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(first));
  if (coeffs.size() == 1) return {};

  auto candidates = detail::all_roots(coeffs);
  // Roots of very different magnitudes lose the small ones to cancellation;
  // the reversed polynomial has them as its large roots.
  if (coeffs.back() != Scalar(0)) {
    std::vector<Scalar> rev(coeffs.rbegin(), coeffs.rend());
    std::size_t lead = 0;
    while (lead + 1 < rev.size() && abs(rev[lead]) <= lead_tol) ++lead;
    rev.erase(rev.begin(), rev.begin() + static_cast<std::ptrdiff_t>(lead));
    if (rev.size() > 1)
      for (const auto& w : detail::all_roots(rev))
        if (abs(w) > Scalar(0)) candidates.push_back(Scalar(1) / w);
  }

  const auto eval_tol = [&](Scalar s) { return Scalar(64) * eps * p.abs_eval(s); };
  const auto newton = [&](Scalar s) {
    for (int it = 0; it < 4; ++it) {
      const Scalar f = p(s);
      const Scalar df = p.derivative(s);
      if (f == Scalar(0) || df == Scalar(0)) break;
      const Scalar next = s - f / df;
      if (!(abs(p(next)) < abs(f))) break;
      s = next;
    }
    return s;
  };
  // Critical point of p near s (Newton on p').
  const auto critical = [&](Scalar s) {
    for (int it = 0; it < 8; ++it) {
      const Scalar f = p.derivative(s);
      const Scalar df = p.second_derivative(s);
      if (f == Scalar(0) || df == Scalar(0)) break;
      const Scalar next = s - f / df;
      if (!(abs(p.derivative(next)) < abs(f))) break;
      s = next;
    }
    return s;
  };

  const Scalar near_real = Scalar(1e-5);
  std::vector<Scalar> roots;
  for (const auto& z : candidates) {
    const Scalar re = z.real();
    if (abs(z.imag()) > near_real * std::max(Scalar(1), abs(re))) continue;
    if (re < Scalar(-0.01) || re > Scalar(1.01)) continue;
    Scalar s = newton(re);
    // Near a multiple root p' is tiny and Newton stalls; the critical point is
    // the well-conditioned estimate.
    const Scalar sc = critical(s);
    if (abs(sc - s) <= Scalar(1e-4) && abs(p(sc)) <= eval_tol(sc)) {
      s = sc;
    } else if (abs(z.imag()) <= tol) {
      if (abs(p(s)) > std::sqrt(eps) * p.abs_eval(s)) continue;
    } else if (abs(p(s)) > eval_tol(s)) {
      continue;
    }
    if (s > Scalar(0) && s < Scalar(1)) roots.push_back(s);
  }
  std::sort(roots.begin(), roots.end());

  // Any sign change left between accepted roots and the critical points of p
  // still holds a simple root; bisect it out.
  std::vector<Scalar> knots{Scalar(0), Scalar(1)};
  knots.insert(knots.end(), roots.begin(), roots.end());
  if (coeffs.size() > 2) {
    std::vector<Scalar> dc;
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i)
      dc.push_back(coeffs[i] * Scalar(coeffs.size() - 1 - i));
    for (const auto& z : detail::all_roots(dc))
      if (abs(z.imag()) <= near_real && z.real() > Scalar(0) && z.real() < Scalar(1))
        knots.push_back(critical(z.real()));
  }
  std::sort(knots.begin(), knots.end());
  std::vector<Scalar> extra;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    Scalar lo = knots[i], hi = knots[i + 1];
    Scalar flo = p(lo), fhi = p(hi);
    if (!(lo >= Scalar(0) && hi <= Scalar(1) && lo < hi)) continue;
    if (flo == Scalar(0) || fhi == Scalar(0) || (flo < Scalar(0)) == (fhi < Scalar(0))) continue;
    for (int it = 0; it < 200 && hi - lo > eps * std::max(Scalar(1e-300), hi); ++it) {
      const Scalar mid = lo + (hi - lo) / Scalar(2);
      const Scalar fm = p(mid);
      if (fm == Scalar(0)) { lo = hi = mid; break; }
      if ((fm < Scalar(0)) == (flo < Scalar(0))) { lo = mid; flo = fm; }
      else hi = mid;
    }
    const Scalar s = newton(lo + (hi - lo) / Scalar(2));
    bool known = false;
    for (Scalar r : roots) known = known || abs(r - s) <= tol;
    if (!known && s > Scalar(0) && s < Scalar(1)) extra.push_back(s);
  }
  roots.insert(roots.end(), extra.begin(), extra.end());
  std::sort(roots.begin(), roots.end());
  std::vector<Scalar> merged;
  for (Scalar r : roots)
    if (merged.empty()) {
      merged.push_back(r);
    } else if (r - merged.back() <= tol) {
      continue;
    } else if (r - merged.back() <= Scalar(1e-4)) {
      // two estimates of one double root: keep the critical point if it is one
      const Scalar sc = critical((r + merged.back()) / Scalar(2));
      if (abs(p(sc)) <= eval_tol(sc) && sc > Scalar(0) && sc < Scalar(1)) merged.back() = sc;
      else merged.push_back(r);
    } else {
      merged.push_back(r);
    }
  return merged;
}

}  // namespace optlp

#endif  // OPTLP_QUARTIC_HPP_
