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

#include <stdexcept>

namespace dyadic {

// a(a-1)...(a-k+1)/k! at ctx precision.
inline Real binom_real(const Real& a, long k, const EvalContext& ctx) {
  PrecisionGuard g(ctx.precision_bits());
  return generalized_binomial<Real>(Real(a), k);
}

inline Real pochhammer_real(const Real& a, long k, const EvalContext& ctx) {
  PrecisionGuard g(ctx.precision_bits());
  return pochhammer<Real>(Real(a), k);
}

struct TrigPair {
  Real sin_val;
  Real cos_val;
  long terms_used = 0;
};

struct SeriesValue {
  Real value;
  long terms_used = 0;
};

// sin(N t) and cos(N t) from the finite binomial expansions in cos t, sin t.
inline TrigPair multiple_angle(long N, const Real& theta, const EvalContext& ctx) {
  if (N < 1) throw std::invalid_argument("multiple_angle: N must be at least 1");
  PrecisionGuard g(ctx.precision_bits());
  const Real c = ctx.cos(theta), s = ctx.sin(theta);
  Real sv = 0, cv = 0;
  for (long r = 0; 2 * r <= N; ++r) {
    const int sg = (r % 2) ? -1 : 1;
    cv += sg * Real(binom_int(N, 2 * r)) * pow(c, N - 2 * r) * pow(s, 2 * r);
    if (2 * r + 1 <= N) sv += sg * Real(binom_int(N, 2 * r + 1)) * pow(c, N - 2 * r - 1) * pow(s, 2 * r + 1);
  }
  return {sv, cv, N / 2 + 1};
}

namespace detail {

// c^e for real e; negative c only allowed with integral e.
inline Real real_power(const Real& c, const Real& e) {
  if (c > 0) return pow(c, e);
  if (e != floor(e)) throw std::domain_error("non-integral power of a negative base");
  Real m = pow(abs(c), e);
  const BigInt ei(e);
  return is_odd(ei) ? Real(-m) : m;
}

}  // namespace detail

// Partial sums of
//   sin(r t) = sum_j (-1)^j C(r, 2j+1) cos^(r-2j-1) t sin^(2j+1) t
//   cos(r t) = sum_j (-1)^j C(r, 2j)   cos^(r-2j) t   sin^(2j) t
// for |cos t| > |sin t|. With auto_stop the sum ends once a term pair drops
// below tolerance/4.
inline TrigPair generalized_multiple_angle(const Real& r, const Real& theta, long terms,
                                           const EvalContext& ctx, bool auto_stop = false) {
  if (terms < 1) throw std::invalid_argument("generalized_multiple_angle: terms must be at least 1");
  PrecisionGuard g(ctx.precision_bits());
  const Real c = ctx.cos(theta), s = ctx.sin(theta);
  if (abs(c) <= abs(s)) throw std::domain_error("generalized_multiple_angle: need |cos| > |sin|");
  const Real t = s / c, t2 = t * t;
  const Real cr = detail::real_power(c, r);
  const Real small = ctx.tolerance() / 4;
  // running C(r, k) for k = 2j and 2j+1, and t^(2j)
  Real b_even = 1, b_odd = r, tp = 1;
  Real sv = 0, cv = 0;
  long used = 0;
  for (long j = 0; j < terms; ++j) {
    const int sg = (j % 2) ? -1 : 1;
    const Real ct = sg * b_even * tp * cr;
    const Real st = sg * b_odd * tp * t * cr;
    cv += ct;
    sv += st;
    used = j + 1;
    if (auto_stop && abs(ct) < small && abs(st) < small) break;
    b_even = b_odd * (r - (2 * j + 1)) / (2 * j + 2);
    b_odd = b_even * (r - (2 * j + 2)) / (2 * j + 3);
    tp *= t2;
  }
  return {sv, cv, used};
}

// sec^r t = [sum_j (-1)^j C(r,2j+1) cos^(-2j-1) t sin^(2j+1) t] / sin(r t)
//         = [sum_j (-1)^j C(r,2j)   cos^(-2j) t   sin^(2j) t]   / cos(r t)
// The form with the larger divisor is used.
inline SeriesValue sec_power_series(const Real& r, const Real& theta, long terms, const EvalContext& ctx,
                                    bool auto_stop = false) {
  PrecisionGuard g(ctx.precision_bits());
  const Real rt = r * theta;
  const Real ds = ctx.sin(rt), dc = ctx.cos(rt);
  if (abs(ds) < ctx.tolerance() && abs(dc) < ctx.tolerance())
    throw std::domain_error("sec_power_series: vanishing divisor");
  // the series without the cos^r factor is the generalized expansion at r
  // divided by cos^r t
  TrigPair tp = generalized_multiple_angle(r, theta, terms, ctx, auto_stop);
  const Real cr = detail::real_power(ctx.cos(theta), r);
  Real v = abs(ds) >= abs(dc) ? Real(tp.sin_val / cr / ds) : Real(tp.cos_val / cr / dc);
  return {v, tp.terms_used};
}

// csc^r t for |sin t| > |cos t|: the secant series at pi/2 - t.
inline SeriesValue csc_power_series(const Real& r, const Real& theta, long terms, const EvalContext& ctx,
                                    bool auto_stop = false) {
  PrecisionGuard g(ctx.precision_bits());
  if (abs(ctx.sin(theta)) <= abs(ctx.cos(theta)))
    throw std::domain_error("csc_power_series: need |sin| > |cos|");
  return sec_power_series(r, ctx.pi() / 2 - theta, terms, ctx, auto_stop);
}

// 1/sin^r t = 2^(r/2) sum_j (-1)^j C(-r/2, j) cos^j(2t), 0 < t < pi/2.
inline SeriesValue csc_power_cos2_series(const Real& r, const Real& theta, long terms, const EvalContext& ctx,
                                         bool auto_stop = false) {
  if (terms < 1) throw std::invalid_argument("csc_power_cos2_series: terms must be at least 1");
  PrecisionGuard g(ctx.precision_bits());
  if (theta <= 0 || theta >= ctx.pi() / 2) throw std::domain_error("csc_power_cos2_series: need 0 < t < pi/2");
  const Real x = ctx.cos(2 * theta);
  const Real a = -r / 2;
  const Real small = ctx.tolerance() / 4;
  Real b = 1, xp = 1, acc = 0;
  long used = 0;
  for (long j = 0; j < terms; ++j) {
    const Real term = ((j % 2) ? -b : b) * xp;
    acc += term;
    used = j + 1;
    if (auto_stop && abs(term) < small) break;
    b = b * (a - j) / (j + 1);
    xp *= x;
  }
  return {acc * pow(Real(2), r / 2), used};
}

// sum_{i=0}^{N-1} sin(a + i d) = sin(N d/2) sin(a + (N-1)d/2) / sin(d/2),
// summed directly when sin(d/2) is within tolerance of zero.
inline Real sine_progression_sum(const Real& a, const Real& d, long N, const EvalContext& ctx) {
  if (N < 1) throw std::invalid_argument("sine_progression_sum: N must be at least 1");
  PrecisionGuard g(ctx.precision_bits());
  const Real h = ctx.sin(d / 2);
  if (abs(h) < ctx.tolerance()) {
    Real acc = 0;
    for (long i = 0; i < N; ++i) acc += ctx.sin(a + i * d);
    return acc;
  }
  return ctx.sin(N * d / 2) * ctx.sin(a + (N - 1) * d / 2) / h;
}

// x - x^3/6 < sin x < x - 2x^3/(3 pi^2) on (0, pi/2)
inline bool jordan_bounds_check(const Real& x, const EvalContext& ctx) {
  PrecisionGuard g(ctx.precision_bits());
  const Real pi = ctx.pi();
  if (x <= 0 || x >= pi / 2) throw std::domain_error("jordan_bounds_check: need 0 < x < pi/2");
  const Real x3 = x * x * x, s = ctx.sin(x);
  return x - x3 / 6 < s && s < x - 2 * x3 / (3 * pi * pi);
}

}  // namespace dyadic
