/*
 * Copyright 2026 The dyadic authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <dyadic/core/eval_context.hpp>
#include <dyadic/core/numbers.hpp>
#include <dyadic/core/polynomial.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace dyadic {

// Minimal polynomial f_n of cos((2i-1)pi/2^n), in both forms.
struct MinPolyPair {
  int n = 3;
  IntPolynomial nested;
  IntPolynomial closed;
};

// ((...((2x)^2-2)^2...)^2-2)/2 with n-2 square-and-subtract steps after the
// first. For n = 2 this would give 2x^2-1, the negative of the closed form,
// so n >= 3 is required.
inline IntPolynomial nested_minpoly(int n) {
  if (n < 3) throw std::invalid_argument("nested_minpoly: n must be at least 3");
  const IntPolynomial two{BigInt(2)};
  IntPolynomial q{BigInt(-2), BigInt(0), BigInt(4)};
  for (int t = 0; t < n - 2; ++t) q = q * q - two;
  std::vector<BigInt> c = q.coeffs();
  for (auto& a : c) a = exact_div(a, BigInt(2), "nested_minpoly");
  return IntPolynomial(std::move(c));
}

// c_{n,m} = (-1)^m 2^(n+2m-2)/(h+m) C(h+m, h-m), h = 2^(n-2).
inline BigInt minpoly_coefficient(int n, long m) {
  const long h = 1L << (n - 2);
  BigInt num = pow2(n + 2 * m - 2) * binom_int(h + m, h - m);
  BigInt c = exact_div(num, BigInt(h + m), "minpoly_coefficient");
  return (m % 2) ? BigInt(-c) : c;
}

inline IntPolynomial closed_minpoly(int n) {
  if (n < 2) throw std::invalid_argument("closed_minpoly: n must be at least 2");
  if (n > 24) throw std::invalid_argument("closed_minpoly: n too large");
  const long h = 1L << (n - 2);
  std::vector<BigInt> c(2 * h + 1, BigInt(0));
  c[0] = 1;
  for (long m = 1; m <= h; ++m) c[2 * m] = minpoly_coefficient(n, m);
  return IntPolynomial(std::move(c));
}

inline MinPolyPair minpoly_pair(int n) { return {n, nested_minpoly(n), closed_minpoly(n)}; }

// max |f_n(+-cos((2i-1)pi/2^n))| over the first-quadrant angles.
inline Real verify_minpoly_roots(int n, const EvalContext& ctx) {
  const IntPolynomial f = closed_minpoly(n);
  // Coefficients reach ~2^(2^(n-1)); carry that many extra bits.
  const EvalContext wide = ctx.widened(max_coeff_bits(f) + 32);
  PrecisionGuard g(ctx.precision_bits());
  Real worst = 0;
  const long h = 1L << (n - 2);
  for (long i = 1; i <= h; ++i) {
    Real x = wide.cos_dyadic(BigInt(2 * i - 1), n);
    Real a = abs(poly_eval(f, x, wide));
    Real b = abs(poly_eval(f, Real(-x), wide));
    Real m = a > b ? a : b;
    if (m > worst) worst = Real(m);
  }
  return worst;
}

// closed f_n(2x^2-1) == closed f_{n+1}(x), exactly.
inline bool verify_halving_recursion(int n) {
  const IntPolynomial t2{BigInt(-1), BigInt(0), BigInt(2)};
  return closed_minpoly(n).compose(t2) == closed_minpoly(n + 1);
}

struct LemmaSides {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

// lhs = sum_{i=0}^r (-1)^i 2^(2i-1)/(r+i) C(r+i, r-i) C(2i, k)
// rhs = 2^k/(2r+k) C(2r+k, 2r-k)
inline LemmaSides lemma_sum_identity(long r, long k) {
  if (r < 1 || k < 1 || k > r) throw std::invalid_argument("lemma_sum_identity: need 1 <= k <= r");
  Rational lhs = 0;
  for (long i = 0; i <= r; ++i) {
    BigInt b = binom_int(r + i, r - i) * binom_int(2 * i, k);
    if (b == 0) continue;
    // 2^(2i-1) is 1/2 at i = 0
    Rational term = (i == 0) ? Rational(b, BigInt(2)) : Rational(b * pow2(2 * i - 1));
    term /= Rational(r + i);
    if (i % 2) lhs -= term; else lhs += term;
  }
  Rational rhs = Rational(pow2(k) * binom_int(2 * r + k, 2 * r - k)) / Rational(2 * r + k);
  return {lhs, rhs};
}

// The identity at r = 2^(n-2) for every k in [1, r].
inline bool lemma_power_of_two_check(int n) {
  const long r = 1L << (n - 2);
  for (long k = 1; k <= r; ++k)
    if (!lemma_sum_identity(r, k).holds()) return false;
  return true;
}

}  // namespace dyadic
