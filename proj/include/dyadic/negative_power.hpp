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
#include <dyadic/core/scaled_matrix.hpp>

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dyadic {

namespace detail {

inline void check_negative_level(int n) {
  if (n < 3 || n > 30) throw std::invalid_argument("negative power matrices need level n >= 3");
}

// Row i of a signed permutation law shared by csc^3 and csc^5: first-row
// entry j lands in column m with sign (-1)^floor((p-1)/2^(n-1)).
struct NegPlacement {
  long m;
  int sign;
};

inline NegPlacement neg_placement(long i, long j, int n) {
  const long h = 1L << (n - 2);
  const long p = 2 * i * j - i - j + 1;
  const long k = floor_div(p - 1, h);
  const long m = mod_pos((k % 2 ? -1 : 1) * (p - k * h), h + 1);
  const long q = floor_div(p - 1, 2 * h);
  return {m, (q % 2) ? -1 : 1};
}

inline ScaledMatrix scatter_rows(int n, long log2_denom, const std::vector<BigInt>& first) {
  ScaledMatrix out(BasisTag{BasisKind::OddSin, n}, log2_denom);
  const long h = static_cast<long>(out.dim());
  for (long i = 1; i <= h; ++i) {
    std::vector<bool> taken(h + 1, false);
    for (long j = 1; j <= h; ++j) {
      const NegPlacement pl = neg_placement(i, j, n);
      if (pl.m < 1 || pl.m > h || taken[pl.m])
        throw std::logic_error("negative power: placement is not a permutation");
      taken[pl.m] = true;
      out.at(i, pl.m) = pl.sign < 0 ? BigInt(-first[j - 1]) : first[j - 1];
    }
  }
  return out;
}

}  // namespace detail

// sec((2i-1)pi/2^n) = 2 sum_k M[i,k] cos((2k-1)pi/2^n), entries +-1.
inline ScaledMatrix matrix_neg1(int n) {
  detail::check_negative_level(n);
  ScaledMatrix out(BasisTag{BasisKind::OddCos, n}, -1);
  const long h = static_cast<long>(out.dim());
  const BigInt period = pow2(n - 1), wrap = pow2(n);
  for (long i = 1; i <= h; ++i) {
    const BigInt g = pow_mod(BigInt(1 + 2 * h - 2 * i), BigInt(h - 1), wrap);
    for (long j = 1; j <= h; ++j) {
      // parity of floor(x / 2^(n-1)) only depends on x mod 2^n
      const BigInt x = mod_pos(BigInt(BigInt(1 - i - j) * g), wrap);
      const bool odd_q = x >= period;
      out.at(i, j) = odd_q ? 1 : -1;  // (-1)^(1+q)
    }
  }
  return out;
}

// Row-1 values of the csc^3 sine-basis matrix: (2^(n-1) j - j^2 + j - 2^(n-2)) / 2.
inline BigInt neg3_weight(int n, long j) {
  const BigInt v = pow2(n - 1) * j - BigInt(j) * j + j - pow2(n - 2);
  return exact_div(v, BigInt(2), "neg3_weight");
}

// csc^3((2i-1)pi/2^n) = 8 sum_k M[i,k] sin((2k-1)pi/2^n)
inline ScaledMatrix matrix_neg3(int n) {
  detail::check_negative_level(n);
  std::vector<BigInt> first;
  for (long j = 1; j <= (1L << (n - 2)); ++j) first.push_back(neg3_weight(n, j));
  return detail::scatter_rows(n, -3, first);
}

// 24 times the row-1 value of the csc^5 matrix.
inline BigInt neg5_numerator(int n, long j) {
  const BigInt J(j), P1 = pow2(n - 1);
  return J * J * J * J - 2 * J * J * J * (P1 + 1) + J * J * (3 * P1 - 1) +
         2 * J * (pow2(n - 2) + pow2(3 * n - 4) + 1) - P1 * (pow2(2 * n - 3) + 1);
}

// csc^5((2i-1)pi/2^n) = 32 sum_k M[i,k] sin((2k-1)pi/2^n). At n = 3 the
// row-1 values are half-integers, so entries are doubled and the scale is 16.
inline ScaledMatrix matrix_neg5(int n) {
  detail::check_negative_level(n);
  const long h = 1L << (n - 2);
  bool by24 = true;
  for (long j = 1; j <= h; ++j)
    if (neg5_numerator(n, j) % 24 != 0) by24 = false;
  std::vector<BigInt> first;
  for (long j = 1; j <= h; ++j)
    first.push_back(exact_div(neg5_numerator(n, j), BigInt(by24 ? 24 : 12), "matrix_neg5"));
  return detail::scatter_rows(n, by24 ? -5 : -4, first);
}

// The gather-form closed expression for the csc^3 matrix:
// (-1)^floor(v/2^(n-1)) [(2^(n-1)+1) w - w^2 - 2^(n-2)], v = (i+j-1)(2i-1)^(h-1),
// w = v mod 2^(n-1). Entries are twice the sine-basis ones, so the scale is 4.
inline ScaledMatrix matrix_neg3_closed(int n) {
  detail::check_negative_level(n);
  ScaledMatrix out(BasisTag{BasisKind::OddSin, n}, -2);
  const long h = static_cast<long>(out.dim());
  const BigInt period = pow2(n - 1), wrap = pow2(n);
  for (long i = 1; i <= h; ++i) {
    const BigInt g = pow_mod(BigInt(2 * i - 1), BigInt(h - 1), wrap);
    for (long j = 1; j <= h; ++j) {
      const BigInt v = mod_pos(BigInt(BigInt(i + j - 1) * g), wrap);
      const BigInt w = v % period;
      BigInt e = (period + 1) * w - w * w - pow2(n - 2);
      out.at(i, j) = (v >= period) ? BigInt(-e) : e;
    }
  }
  return out;
}

// Dispatch for r in {-1, -3, -5}; basis_cos selects the cosine presentation
// (rows expand sec^|r|) instead of the sine one (rows expand csc^|r|).
inline ScaledMatrix negative_power_matrix(long r, int n, bool basis_cos) {
  ScaledMatrix m;
  switch (r) {
    case -1: m = matrix_neg1(n); return basis_cos ? m : reverse_rows_cols(m);
    case -3: m = matrix_neg3(n); break;
    case -5: m = matrix_neg5(n); break;
    default: throw std::invalid_argument("negative powers supported: -1, -3, -5");
  }
  return basis_cos ? reverse_rows_cols(m) : m;
}

inline Real verify_negative_numeric(const ScaledMatrix& m, long r, const EvalContext& ctx) {
  return expansion_residual(m, [&](std::size_t i) { return row_power(m.basis(), i, r, ctx); }, ctx);
}

struct SumSides {
  Real lhs;
  Real rhs;
  Real gap() const { return abs(lhs - rhs); }
};

// sum_k csc^|r| = (scale/2) sum_j M(1,j) csc((2j-1)pi/2^n)
inline SumSides first_row_sum_identity(long r, int n, const EvalContext& ctx) {
  if (r != -3 && r != -5) throw std::invalid_argument("first_row_sum_identity: r must be -3 or -5");
  const ScaledMatrix m = (r == -3) ? matrix_neg3(n) : matrix_neg5(n);
  PrecisionGuard g(ctx.precision_bits());
  const long h = static_cast<long>(m.dim());
  Real lhs = 0, rhs = 0;
  for (long k = 1; k <= h; ++k) {
    Real s = ctx.sin_dyadic(BigInt(2 * k - 1), n);
    lhs += pow(Real(1) / s, -r);
    rhs += Real(m.at(1, k)) / s;
  }
  rhs *= Real(m.scale()) / 2;
  return {lhs, rhs};
}

// S(s,n) = sum_{i=1}^{2^(n-2)} csc^s((2i-1)pi/2^n). Even s gives an exact
// rational; odd s gives rational weights against csc((2j-1)pi/2^n).
struct CscPowerSum {
  int s = 2;
  int n = 3;
  bool scalar = true;
  Rational value;
  std::vector<Rational> weights;

  Real evaluate(const EvalContext& ctx) const {
    PrecisionGuard g(ctx.precision_bits());
    if (scalar) return Real(value);
    Real acc = 0;
    for (std::size_t j = 1; j <= weights.size(); ++j)
      acc += Real(weights[j - 1]) / ctx.sin_dyadic(BigInt(2 * static_cast<long>(j) - 1), n);
    return acc;
  }
};

inline CscPowerSum S_closed_form(int s, int n) {
  if (s < 2 || s > 8) throw std::invalid_argument("S_closed_form: s must be in [2, 8]");
  if (n < 3) throw std::invalid_argument("S_closed_form: n must be at least 3");
  auto P = [](long e) { return pow2(e); };
  const long N = n;
  CscPowerSum out;
  out.s = s;
  out.n = n;
  switch (s) {
    case 2: out.value = Rational(P(2 * N - 2), 2); return out;
    case 4: out.value = Rational(P(4 * N - 4) + 2 * P(2 * N - 2), 6); return out;
    case 6: out.value = Rational(2 * P(6 * N - 6) + 5 * P(4 * N - 4) + 8 * P(2 * N - 2), 30); return out;
    case 8:
      out.value = Rational(17 * P(8 * N - 8) + 56 * P(6 * N - 6) + 98 * P(4 * N - 4) + 144 * P(2 * N - 2), 630);
      return out;
    default: break;
  }
  out.scalar = false;
  const BigInt P1 = P(N - 1);
  for (long jj = 1; jj <= (1L << (n - 2)); ++jj) {
    const BigInt j(jj);
    BigInt num;
    long den = 1;
    if (s == 3) {
      num = -2 * j * j + 2 * (P1 + 1) * j - P1;
    } else if (s == 5) {
      num = 2 * j * j * j * j - 4 * (P1 + 1) * j * j * j + 2 * (3 * P1 - 1) * j * j +
            2 * (P(3 * N - 3) + P1 + 2) * j - (P(3 * N - 3) + 2 * P1);
      den = 3;
    } else {
      // linear term: 4(3*2^(5n-5) + 5*2^(3n-3) + 4*2^(n-1) + 12)
      const BigInt j2 = j * j, j3 = j2 * j;
      num = -4 * j3 * j3 + 12 * (P1 + 1) * j3 * j2 - 10 * (3 * P1 - 2) * j2 * j2 -
            20 * (P(3 * N - 3) + 2 * P1 + 3) * j3 + 2 * (15 * P(3 * N - 3) + 45 * P1 - 8) * j2 +
            4 * (3 * P(5 * N - 5) + 5 * P(3 * N - 3) + 4 * P1 + 12) * j -
            3 * (2 * P(5 * N - 5) + 5 * P(3 * N - 3) + 8 * P1);
      den = 45;
    }
    out.weights.push_back(Rational(num, BigInt(den)));
  }
  return out;
}

// sum_i csc^s((2i-1)pi/2^n), directly.
inline Real csc_power_sum_direct(int s, int n, const EvalContext& ctx) {
  PrecisionGuard g(ctx.precision_bits());
  Real acc = 0;
  for (long i = 1; i <= (1L << (n - 2)); ++i) acc += pow(Real(1) / ctx.sin_dyadic(BigInt(2 * i - 1), n), s);
  return acc;
}

}  // namespace dyadic
