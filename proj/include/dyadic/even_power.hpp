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
#include <dyadic/core/scaled_matrix.hpp>

#include <stdexcept>
#include <vector>

namespace dyadic {

namespace detail {

inline void check_even_power(long r, int n) {
  if (r < 0 || r % 2) throw std::invalid_argument("even power must be a nonnegative even integer");
  if (n < 3 || n > 30) throw std::invalid_argument("even power matrices need level n >= 3");
}

// sum_k (-1)^k [C(r, c - (k P + j)) - C(r, c - ((k+1) P - j))], c = r/2, P = 2^(n-1)
inline BigInt even_bracket(long r, int n, long j) {
  const long c = r / 2, period = 1L << (n - 1);
  BigInt acc = 0;
  for (long k = 0;; ++k) {
    const long a = c - (k * period + j);
    const long b = c - ((k + 1) * period - j);
    if (a < 0 && b < 0) break;
    BigInt t = binom_int(r, a) - binom_int(r, b);
    if (k % 2) acc -= t; else acc += t;
  }
  return acc;
}

}  // namespace detail

// Row for cos^r(pi/2^n) over {1, cos(j pi/2^(n-1))}, scale 1/2^(r-1).
// Entry 0 is the constant term (half the j = 0 bracket). For r = 0 the row
// is (1, 0, ...) and the scale is 1, see even_matrix.
inline std::vector<BigInt> even_first_row(long r, int n) {
  detail::check_even_power(r, n);
  const long h = 1L << (n - 2);
  std::vector<BigInt> row(h, BigInt(0));
  if (r == 0) {
    row[0] = 1;
    return row;
  }
  row[0] = exact_div(detail::even_bracket(r, n, 0), BigInt(2), "even_first_row constant");
  for (long j = 1; j < h; ++j) row[j] = detail::even_bracket(r, n, j);
  return row;
}

// Row i: the entry for cos(j pi/2^(n-1)) moves to the fold of j(2i-1).
inline ScaledMatrix even_matrix(long r, int n) {
  detail::check_even_power(r, n);
  const std::vector<BigInt> f = even_first_row(r, n);
  ScaledMatrix out(BasisTag{BasisKind::EvenCos, n}, r == 0 ? 0 : r - 1);
  const long h = static_cast<long>(out.dim());
  for (long i = 1; i <= h; ++i) {
    out.at(i, 1) = f[0];
    std::vector<bool> taken(h + 1, false);
    for (long j = 1; j < h; ++j) {
      FoldedIndex fi;
      try {
        fi = fold_even_cos_index(BigInt(j * (2 * i - 1)), n);
      } catch (const zero_basis_element&) {
        throw std::logic_error("even_matrix: odd multiple folded onto cos(pi/2)");
      }
      if (fi.k == 0) throw std::logic_error("even_matrix: odd multiple folded onto the constant");
      if (taken[fi.k + 1]) throw std::logic_error("even_matrix: two entries fold to one column");
      taken[fi.k + 1] = true;
      out.at(i, fi.k + 1) = fi.sign < 0 ? BigInt(-f[j]) : f[j];
    }
  }
  return out;
}

inline Real verify_even_numeric(const ScaledMatrix& m, long r, const EvalContext& ctx) {
  return expansion_residual(m, [&](std::size_t i) { return row_power(m.basis(), i, r, ctx); }, ctx);
}

// -1/2 + N/2^(2p+1) sum_{|k| <= p/N} C(2p, p+kN)
inline Rational merca_sum(long N, long p) {
  if (N < 2 || p < 1) throw std::invalid_argument("merca_sum: need N >= 2, p >= 1");
  BigInt s = 0;
  for (long k = -(p / N); k <= p / N; ++k) s += binom_int(2 * p, p + k * N);
  return Rational(-1, 2) + Rational(BigInt(N) * s, pow2(2 * p + 1));
}

// sum_{k=1}^{floor((N-1)/2)} cos^(2p)(k pi/N), numerically.
inline Real merca_lhs(long N, long p, const EvalContext& ctx) {
  PrecisionGuard g(ctx.precision_bits());
  const Real pi = ctx.pi();
  Real acc = 0;
  for (long k = 1; k <= (N - 1) / 2; ++k) acc += pow(ctx.cos(pi * k / N), 2 * p);
  return acc;
}

// sum_k (-1)^k [C(2p, p - k 2^(n-1)) - C(2p, p - (k+1) 2^(n-1))]
inline BigInt integer_power_average(long p, int n) {
  if (p < 1 || n < 2) throw std::invalid_argument("integer_power_average: need p >= 1, n >= 2");
  const long period = 1L << (n - 1);
  BigInt acc = 0;
  for (long k = 0; p - k * period >= 0; ++k) {
    BigInt t = binom_int(2 * p, p - k * period) - binom_int(2 * p, p - (k + 1) * period);
    if (k % 2) acc -= t; else acc += t;
  }
  return acc;
}

// sum_i (2 cos((2i-1)pi/2^n))^(2p) / 2^(n-2), numerically.
inline Real integer_power_average_lhs(long p, int n, const EvalContext& ctx) {
  PrecisionGuard g(ctx.precision_bits());
  const long h = 1L << (n - 2);
  Real acc = 0;
  for (long i = 1; i <= h; ++i) acc += pow(2 * ctx.cos_dyadic(BigInt(2 * i - 1), n), 2 * p);
  return acc / h;
}

}  // namespace dyadic
