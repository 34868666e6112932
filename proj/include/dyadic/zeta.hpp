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

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyadic {

enum class ZetaMethod { SineSum, BinomialSeries, WeightedCsc3, WeightedCsc5 };
enum class SeriesStatus { Converged, TermsExhausted, Closed };

inline std::string to_string(ZetaMethod m) {
  switch (m) {
    case ZetaMethod::SineSum: return "sine-sum";
    case ZetaMethod::BinomialSeries: return "binomial";
    case ZetaMethod::WeightedCsc3: return "weighted3";
    case ZetaMethod::WeightedCsc5: return "weighted5";
  }
  return "?";
}

inline std::string to_string(SeriesStatus s) {
  switch (s) {
    case SeriesStatus::Converged: return "converged";
    case SeriesStatus::TermsExhausted: return "terms exhausted";
    case SeriesStatus::Closed: return "closed";
  }
  return "?";
}

struct ZetaApproxResult {
  Real value;
  int n = 3;
  long terms_used = 0;
  ZetaMethod method = ZetaMethod::SineSum;
  std::optional<Real> reference_error;
  SeriesStatus status = SeriesStatus::Closed;
  // cos^2(pi/2^(n-1)) for the binomial series; zero for closed sums
  Real tail_ratio = 0;
};

// B_0..B_m exactly from sum_{k=0}^{m} C(m+1, k) B_k = 0.
inline std::vector<Rational> bernoulli_numbers(long m) {
  if (m < 0) throw std::invalid_argument("bernoulli_numbers: m must be nonnegative");
  std::vector<Rational> b(m + 1);
  b[0] = 1;
  for (long k = 1; k <= m; ++k) {
    Rational acc = 0;
    for (long i = 0; i < k; ++i) acc += Rational(binom_int(k + 1, i)) * b[i];
    b[k] = -acc / Rational(k + 1);
  }
  return b;
}

inline Rational bernoulli(long m) { return bernoulli_numbers(m).back(); }

// zeta(2j) / pi^(2j) = (-1)^(j+1) 2^(2j) B_2j / (2 (2j)!)
inline Rational reference_even_zeta(long j) {
  if (j < 1) throw std::invalid_argument("reference_even_zeta: j must be at least 1");
  Rational v = Rational(pow2(2 * j)) * bernoulli(2 * j) / Rational(2 * factorial(2 * j));
  return (j % 2) ? v : Rational(-v);
}

// Apery's constant, 30 significant digits (OEIS A002117).
inline const char* const kZeta3 = "1.20205690315959428539973816151";
// zeta(5), 30 significant digits (OEIS A013663).
inline const char* const kZeta5 = "1.03692775514336992633136548646";

// Reference value when one is known: even integers exactly, 3 and 5 stored.
inline std::optional<Real> reference_zeta(const Real& s, const EvalContext& ctx) {
  PrecisionGuard g(ctx.precision_bits());
  if (s == 3) return Real(kZeta3);
  if (s == 5) return Real(kZeta5);
  if (s >= 2 && s == floor(s) && s <= 200) {
    const long si = static_cast<long>(s);
    if (si % 2 == 0) return Real(reference_even_zeta(si / 2)) * pow(ctx.pi(), si);
  }
  return std::nullopt;
}

namespace detail {

inline void check_zeta_args(const Real& s, int n) {
  if (!(s > 1)) throw std::domain_error("zeta: s must be greater than 1");
  if (n < 3 || n > 30) throw std::invalid_argument("zeta: level n must be in [3, 30]");
}

inline void attach_reference(ZetaApproxResult& r, const Real& s, const EvalContext& ctx) {
  if (auto ref = reference_zeta(s, ctx)) r.reference_error = Real(abs(r.value - *ref));
}

// B_p = sum_{k in Z} (-1)^k C(2p, p - k h) / 4^p with h = 2^(n-2), advanced
// one p at a time. G_p(d) = sum_k (-1)^k C(2p, p + d - k h) / 4^p obeys
// G_{p+1}(d) = (G(d-1) + 2 G(d) + G(d+1)) / 4, is even in d and flips sign
// under d -> d + h, so d in [0, h) suffices.
class PascalBracket {
 public:
  explicit PascalBracket(int n) : h_(1L << (n - 2)), g_(h_, Real(0)), next_(h_, Real(0)) { g_[0] = 1; }

  const Real& value() const { return g_[0]; }

  void advance() {
    for (long d = 0; d < h_; ++d) next_[d] = (at(d - 1) + 2 * g_[d] + at(d + 1)) / 4;
    g_.swap(next_);
  }

 private:
  Real at(long d) const {
    if (d < 0) d = -d;
    if (d < h_) return g_[d];
    return -g_[d - h_];
  }

  long h_;
  std::vector<Real> g_, next_;
};

struct BracketSum {
  Real sum;
  long terms = 0;
  SeriesStatus status = SeriesStatus::TermsExhausted;
};

// sum_p c_p B_p where c_{p+1} = c_p * step(p). Stops after 50 consecutive
// terms each below tolerance/4 relative to the partial sum.
inline BracketSum bracket_series(int n, const Real& c0, const std::function<Real(long)>& step, long max_terms,
                                 const EvalContext& ctx) {
  if (max_terms < 1) throw std::invalid_argument("series: max_terms must be at least 1");
  constexpr long kQuiet = 50;
  const Real small = ctx.tolerance() / 4;
  PascalBracket b(n);
  Real c = c0;
  BracketSum out;
  long quiet = 0;
  for (long p = 0; p < max_terms; ++p) {
    const Real term = c * b.value();
    out.sum += term;
    out.terms = p + 1;
    if (abs(term) <= small * abs(out.sum)) {
      if (++quiet >= kQuiet) {
        out.status = SeriesStatus::Converged;
        break;
      }
    } else {
      quiet = 0;
    }
    c *= step(p);
    b.advance();
  }
  return out;
}

// sum_p 2 (s/2)_{2p}/(2p)! B_p; note C(-s/2, 2p) = (s/2)_{2p}/(2p)!.
inline BracketSum pochhammer_bracket_sum(const Real& s, int n, long max_terms, const EvalContext& ctx) {
  const Real a = s / 2;
  return bracket_series(
      n, Real(2), [&](long p) { return Real((a + 2 * p) * (a + 2 * p + 1) / ((2 * p + 1) * (2 * p + 2))); },
      max_terms, ctx);
}

inline Real csc_odd(long j, int n, const EvalContext& ctx) {
  return Real(1) / ctx.sin_dyadic(BigInt(2 * j - 1), n);
}

// sum_j w(j) csc((2j-1)pi/2^n) for j = 1..2^(n-2), w given exactly
inline Real weighted_csc_sum(int n, const std::function<BigInt(const BigInt&)>& w, const EvalContext& ctx) {
  Real acc = 0;
  for (long j = 1; j <= (1L << (n - 2)); ++j) acc += Real(w(BigInt(j))) * csc_odd(j, n, ctx);
  return acc;
}

inline BigInt zeta3_weight(int n, const BigInt& j) { return -j * j + (pow2(n - 1) + 1) * j - pow2(n - 2); }

inline BigInt zeta5_weight(int n, const BigInt& j) {
  const BigInt P1 = pow2(n - 1);
  return j * j * j * j - 2 * (P1 + 1) * j * j * j + (3 * P1 - 1) * j * j +
         2 * (pow2(n - 2) + pow2(3 * n - 4) + 1) * j - P1 * (pow2(2 * n - 3) + 1);
}

}  // namespace detail

// (2^s pi^s / (2^s - 1)) sum_i (2^n sin((2i-1)pi/2^n))^(-s)
inline ZetaApproxResult zeta_sine_sum(const Real& s, int n, const EvalContext& ctx) {
  detail::check_zeta_args(s, n);
  PrecisionGuard g(ctx.precision_bits());
  const Real two_s = pow(Real(2), s);
  Real acc = 0;
  for (long i = 1; i <= (1L << (n - 2)); ++i) acc += pow(pow2(n) * ctx.sin_dyadic(BigInt(2 * i - 1), n), -s);
  ZetaApproxResult r;
  r.value = two_s * pow(ctx.pi(), s) / (two_s - 1) * acc;
  r.n = n;
  r.method = ZetaMethod::SineSum;
  detail::attach_reference(r, s, ctx);
  return r;
}

// 2^(3s/2 - ns + n - 3) pi^s / (2^s - 1) * sum_p 2 C(-s/2, 2p) B_p
inline ZetaApproxResult zeta_binomial_series(const Real& s, int n, long max_terms, const EvalContext& ctx) {
  detail::check_zeta_args(s, n);
  PrecisionGuard g(ctx.precision_bits());
  const detail::BracketSum b = detail::pochhammer_bracket_sum(s, n, max_terms, ctx);
  const Real two_s = pow(Real(2), s);
  ZetaApproxResult r;
  r.value = pow(Real(2), 3 * s / 2 - n * s + n - 3) * pow(ctx.pi(), s) / (two_s - 1) * b.sum;
  r.n = n;
  r.terms_used = b.terms;
  r.method = ZetaMethod::BinomialSeries;
  r.status = b.status;
  const Real c = ctx.cos(ctx.pi() / pow2(n - 1));
  r.tail_ratio = c * c;
  detail::attach_reference(r, s, ctx);
  return r;
}

// pi^3 / (7 2^(3n-4)) sum_j (-j^2 + (2^(n-1)+1) j - 2^(n-2)) csc((2j-1)pi/2^n)
inline ZetaApproxResult zeta3_weighted(int n, const EvalContext& ctx) {
  detail::check_zeta_args(Real(3), n);
  PrecisionGuard g(ctx.precision_bits());
  ZetaApproxResult r;
  const Real sum = detail::weighted_csc_sum(n, [n](const BigInt& j) { return detail::zeta3_weight(n, j); }, ctx);
  r.value = pow(ctx.pi(), 3) / (7 * Real(pow2(3 * n - 4))) * sum;
  r.n = n;
  r.method = ZetaMethod::WeightedCsc3;
  detail::attach_reference(r, Real(3), ctx);
  return r;
}

inline ZetaApproxResult zeta5_weighted(int n, const EvalContext& ctx) {
  detail::check_zeta_args(Real(5), n);
  PrecisionGuard g(ctx.precision_bits());
  ZetaApproxResult r;
  const Real sum = detail::weighted_csc_sum(n, [n](const BigInt& j) { return detail::zeta5_weight(n, j); }, ctx);
  r.value = pow(ctx.pi(), 5) / (93 * Real(pow2(5 * n - 6))) * sum;
  r.n = n;
  r.method = ZetaMethod::WeightedCsc5;
  detail::attach_reference(r, Real(5), ctx);
  return r;
}

struct LevelIdentity {
  Real lhs;
  Real rhs;
  Real gap;
  long terms_used = 0;
  SeriesStatus status = SeriesStatus::TermsExhausted;
};

// The binomial series at fixed n against the weighted csc sum at the same n:
//   s = 3:   2^(n-5/2)   sum_p 2 (3/2)_{2p}/(2p)! B_p = sum_j w3(j) csc
//   s = 5: 3 2^(n-3/2)   sum_p 2 (5/2)_{2p}/(2p)! B_p = sum_j w5(j) csc
inline LevelIdentity finite_level_identity(int s_odd, int n, long max_terms, const EvalContext& ctx) {
  if (s_odd != 3 && s_odd != 5) throw std::invalid_argument("finite_level_identity: s must be 3 or 5");
  detail::check_zeta_args(Real(s_odd), n);
  PrecisionGuard g(ctx.precision_bits());
  const detail::BracketSum b = detail::pochhammer_bracket_sum(Real(s_odd), n, max_terms, ctx);
  LevelIdentity out;
  if (s_odd == 3) {
    out.lhs = pow(Real(2), Real(n) - Real(5) / 2) * b.sum;
    out.rhs = detail::weighted_csc_sum(n, [n](const BigInt& j) { return detail::zeta3_weight(n, j); }, ctx);
  } else {
    out.lhs = 3 * pow(Real(2), Real(n) - Real(3) / 2) * b.sum;
    out.rhs = detail::weighted_csc_sum(n, [n](const BigInt& j) { return detail::zeta5_weight(n, j); }, ctx);
  }
  out.gap = abs(out.lhs - out.rhs);
  out.terms_used = b.terms;
  out.status = b.status;
  return out;
}

struct BernoulliCheck {
  Real series_value;
  Rational closed_value;
  Real gap;
  long terms_used = 0;
  SeriesStatus status = SeriesStatus::TermsExhausted;
};

// 2^(1 - n(2j-1)) sum_p (2p+j-1)!/(2p)! B_p against
// (-1)^(j+1) (2^(2j) - 1) / 2^(j-2) * (j-1)!/(2j)! * B_2j.
inline BernoulliCheck bernoulli_limit_check(long j, int n, long max_terms, const EvalContext& ctx) {
  if (j < 1) throw std::invalid_argument("bernoulli_limit_check: j must be at least 1");
  if (n < 3 || n > 30) throw std::invalid_argument("bernoulli_limit_check: level n must be in [3, 30]");
  PrecisionGuard g(ctx.precision_bits());
  BernoulliCheck out;
  Rational closed = Rational(pow2(2 * j) - 1) * Rational(factorial(j - 1)) / Rational(factorial(2 * j)) *
                    bernoulli(2 * j);
  closed = (j >= 2) ? Rational(closed / Rational(pow2(j - 2))) : Rational(closed * 2);
  out.closed_value = (j % 2) ? closed : Rational(-closed);
  // (2p+j-1)!/(2p)! = (2p+1)(2p+2)...(2p+j-1)
  auto rising = [j](long p) {
    Real v = 1;
    for (long k = 1; k < j; ++k) v *= 2 * p + k;
    return v;
  };
  const detail::BracketSum b = detail::bracket_series(
      n, rising(0), [&](long p) { return Real(rising(p + 1) / rising(p)); }, max_terms, ctx);
  out.series_value = pow(Real(2), 1 - n * (2 * j - 1)) * b.sum;
  out.gap = abs(out.series_value - Real(out.closed_value));
  out.terms_used = b.terms;
  out.status = b.status;
  return out;
}

// sum_i cos^(2p+1)((2i-1)pi/2^(n-1)), i = 1..2^(n-2); the terms cancel in pairs.
inline Real odd_cos_power_sum(long p, int n, const EvalContext& ctx) {
  if (p < 0 || n < 2) throw std::invalid_argument("odd_cos_power_sum: need p >= 0, n >= 2");
  PrecisionGuard g(ctx.precision_bits());
  Real acc = 0;
  for (long i = 1; i <= (1L << (n - 2)); ++i) acc += pow(ctx.cos_dyadic(BigInt(2 * i - 1), n - 1), 2 * p + 1);
  return acc;
}

}  // namespace dyadic
