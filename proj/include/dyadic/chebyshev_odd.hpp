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
#include <dyadic/core/fold.hpp>
#include <dyadic/core/numbers.hpp>
#include <dyadic/core/polynomial.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace dyadic {

// p_i(x) = sum_j (-1)^j 2^(2j-2) C(i+j-2, 2j-2) (2i-1)/(2j-1) x^(2j-1).
// No (-1)^i is folded in: cos((2i-1)t) = (-1)^i p_i(cos t).
struct OddChebyshev {
  long i = 1;
  IntPolynomial poly;
};

inline BigInt odd_chebyshev_coefficient(long i, long j) {
  BigInt num = pow2(2 * j - 2) * binom_int(i + j - 2, 2 * j - 2) * (2 * i - 1);
  BigInt c = exact_div(num, BigInt(2 * j - 1), "odd_chebyshev_coefficient");
  return (j % 2) ? BigInt(-c) : c;
}

inline OddChebyshev p_poly(long i) {
  if (i < 1) throw std::invalid_argument("p_poly: i must be at least 1");
  std::vector<BigInt> c(2 * i, BigInt(0));
  for (long j = 1; j <= i; ++j) c[2 * j - 1] = odd_chebyshev_coefficient(i, j);
  return {i, IntPolynomial(std::move(c))};
}

// (-1)^i p_i, the polynomial with (-1)^i p_i(cos t) = cos((2i-1)t).
inline IntPolynomial signed_p(long i) {
  IntPolynomial p = p_poly(i).poly;
  return (i % 2) ? -p : p;
}

// -p_i - 2(2x^2-1) p_{i+1} - p_{i+2} = 0 for every i in [1, i_max].
inline bool verify_recursion(long i_max) {
  const IntPolynomial t2{BigInt(-2), BigInt(0), BigInt(4)};
  for (long i = 1; i <= i_max; ++i) {
    IntPolynomial lhs = -p_poly(i).poly - t2 * p_poly(i + 1).poly - p_poly(i + 2).poly;
    if (!lhs.is_zero()) return false;
  }
  return true;
}

namespace detail {

struct ComplexReal {
  Real re, im;
  friend ComplexReal operator*(const ComplexReal& a, const ComplexReal& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
};

inline ComplexReal cpow(ComplexReal z, long e) {
  ComplexReal acc{Real(1), Real(0)};
  while (e > 0) {
    if (e & 1) acc = acc * z;
    z = z * z;
    e >>= 1;
  }
  return acc;
}

}  // namespace detail

// The radical closed form of p_i. For |x| < 1 the radicand x^2(x^2-1) is
// negative, so sqrt(...) = i|x|sqrt(1-x^2) and the two powers are conjugate.
inline Real closed_form_eval(long i, const Real& x, const EvalContext& ctx) {
  if (i < 1) throw std::invalid_argument("closed_form_eval: i must be at least 1");
  PrecisionGuard g(ctx.precision_bits() + 32);
  if (abs(x) >= 1) throw std::domain_error("closed_form_eval: need |x| < 1");
  if (x == 0) return Real(0);
  const Real x2 = x * x;
  const Real s_im = abs(x) * sqrt(Real(1) - x2);  // sqrt(x^2(x^2-1)) = i*s_im
  const detail::ComplexReal a{Real(1) - 2 * x2, 2 * s_im};
  const detail::ComplexReal ai = detail::cpow(a, i);
  // b^i is the conjugate of a^i
  const Real diff_im = 2 * ai.im;  // (a^i - b^i) / i
  const Real sum_re = 2 * ai.re;   // a^i + b^i
  // sqrt(..)*(a^i - b^i) = (i s_im)(i diff_im) = -s_im*diff_im
  Real out = (-s_im * diff_im + x2 * sum_re) / (2 * x);
  PrecisionGuard back(ctx.precision_bits());
  return Real(out);
}

struct OddMultipleErrors {
  Real err_sin;
  Real err_cos;
};

// sin((2i-1)t) = -p_i(sin t), cos((2i-1)t) = (-1)^i p_i(cos t).
inline OddMultipleErrors odd_multiple_identity_check(long i, const Real& theta,
                                                     const EvalContext& ctx) {
  const IntPolynomial p = p_poly(i).poly;
  PrecisionGuard g(ctx.precision_bits());
  const Real m = Real(2 * i - 1) * theta;
  Real es = abs(ctx.sin(m) + poly_eval(p, ctx.sin(theta), ctx));
  Real c = poly_eval(p, ctx.cos(theta), ctx);
  if (i % 2) c = -c;
  Real ec = abs(ctx.cos(m) - c);
  return {es, ec};
}

inline bool composition_commutes(long i, long j) {
  const IntPolynomial a = p_poly(i).poly, b = p_poly(j).poly;
  return a.compose(b) == b.compose(a);
}

// (-1)^i p_i(cos((2j-1)pi/2^n)) as a signed odd-basis position.
inline FoldedIndex signed_composition_angle(long i, long j, int n) {
  if (i < 1 || j < 1) throw std::invalid_argument("signed_composition_angle: indices must be positive");
  const BigInt p = BigInt(2 * i * j - i - j + 1);
  return fold_odd_cos_index(BigInt(2 * p - 1), n);
}

// k = i (2i-1)^(2^(n-1)-1) reduced mod 2^(n+1). Then (-1)^k p_k undoes
// (-1)^i p_i on every root of f_n.
inline long inverse_index(long i, int n) {
  if (n < 2 || i < 1 || i > (1L << (n - 2)))
    throw std::invalid_argument("inverse_index: need 1 <= i <= 2^(n-2)");
  const BigInt mod = pow2(n + 1);
  BigInt k = mod_pos(BigInt(i) * pow_mod(BigInt(2 * i - 1), pow2(n - 1) - 1, mod), mod);
  return static_cast<long>(k);
}

// p(q(x)) mod f, with Horner steps reduced as they go.
inline RatPolynomial poly_compose_mod(const IntPolynomial& p, const IntPolynomial& q,
                                      const IntPolynomial& f) {
  const RatPolynomial qr = to_rational(q), fr = to_rational(f);
  RatPolynomial acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = poly_mod_reduce(acc * qr + RatPolynomial{Rational(*it)}, fr);
  return acc;
}

// ((-1)^k p_k o (-1)^i p_i) mod f_n == x, with k = inverse_index(i, n).
inline bool inverse_reduces_to_identity(long i, int n, const IntPolynomial& f_n) {
  const long k = inverse_index(i, n);
  RatPolynomial r = poly_compose_mod(signed_p(k), signed_p(i), f_n);
  return r == identity_poly<Rational>();
}

// sum_{j=1}^i (-1)^j 2^(2j-1) (2i-1)/(2j-1) C(i+j-2, 2j-2) against (-1)^i 2.
inline std::pair<Rational, Rational> chebyshev_alternating_sum(long i) {
  Rational lhs = 0;
  for (long j = 1; j <= i; ++j) {
    Rational t = Rational(pow2(2 * j - 1) * binom_int(i + j - 2, 2 * j - 2) * (2 * i - 1)) /
                 Rational(2 * j - 1);
    if (j % 2) lhs -= t; else lhs += t;
  }
  return {lhs, Rational((i % 2) ? -2 : 2)};
}

// sum_{k=1}^i (-1)^k 2^(2k) (2i-1)/(2k-1) C(i+k-2, 2k-2) C(k, j-1) against
// (-1)^i 2^(2j-2) (2i^2-2i+j-1)/((2j-3)(j-1)) C(i+j-3, i-j+1), for i >= j >= 2.
inline std::pair<Rational, Rational> chebyshev_weighted_sum(long i, long j) {
  if (j < 2 || i < j) throw std::invalid_argument("chebyshev_weighted_sum: need i >= j >= 2");
  Rational lhs = 0;
  for (long k = 1; k <= i; ++k) {
    Rational t = Rational(pow2(2 * k) * binom_int(i + k - 2, 2 * k - 2) * binom_int(k, j - 1) *
                          (2 * i - 1)) /
                 Rational(2 * k - 1);
    if (k % 2) lhs -= t; else lhs += t;
  }
  Rational rhs = Rational(pow2(2 * j - 2) * (2 * i * i - 2 * i + j - 1) * binom_int(i + j - 3, i - j + 1)) /
                 Rational((2 * j - 3) * (j - 1));
  if (i % 2) rhs = -rhs;
  return {lhs, rhs};
}

}  // namespace dyadic
