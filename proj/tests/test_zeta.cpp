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
#include <dyadic/negative_power.hpp>
#include <dyadic/zeta.hpp>

#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace dyadic;

namespace {

Real two_pow(long e) { return ldexp(Real(1), e); }

Real oracle_value(const char* table, int key_value, const char* key, int n) {
  for (const auto& e : oracle::data()["zeta"][table])
    if (e[key].get<int>() == key_value && e["n"].get<int>() == n) return Real(e["value"].get<std::string>());
  throw std::runtime_error("missing oracle entry");
}

}  // namespace

TEST(Bernoulli, ExactRecurrenceMatchesOracle) {
  const auto b = bernoulli_numbers(30);
  for (long m = 0; m <= 30; ++m)
    EXPECT_EQ(b[m], Rational(oracle::data()["zeta"]["bernoulli"][std::to_string(m)].get<std::string>())) << m;
  EXPECT_EQ(bernoulli(2), Rational(1, 6));
  EXPECT_EQ(bernoulli(4), Rational(-1, 30));
}

TEST(ReferenceValues, EvenZetaOverPowersOfPi) {
  EXPECT_EQ(reference_even_zeta(1), Rational(1, 6));
  EXPECT_EQ(reference_even_zeta(2), Rational(1, 90));
  EXPECT_EQ(reference_even_zeta(5), Rational(1, 93555));
  for (long j = 1; j <= 10; ++j)
    EXPECT_EQ(reference_even_zeta(j), Rational(oracle::data()["zeta"]["even_over_pi"][std::to_string(j)].get<std::string>()));
  EXPECT_THROW(reference_even_zeta(0), std::invalid_argument);
}

TEST(ReferenceValues, StoredOddConstantsAgreeWithOracle) {
  EvalContext ctx(256);
  PrecisionGuard g(256);
  EXPECT_LT(abs(*reference_zeta(Real(3), ctx) - Real(oracle::data()["zeta"]["zeta3"].get<std::string>())), Real("1e-29"));
  EXPECT_LT(abs(*reference_zeta(Real(5), ctx) - Real(oracle::data()["zeta"]["zeta5"].get<std::string>())), Real("1e-29"));
  EXPECT_FALSE(reference_zeta(Real("2.5"), ctx).has_value());
  EXPECT_FALSE(reference_zeta(Real(7), ctx).has_value());
}

TEST(ZetaSineSum, MatchesOracleAndExamples) {
  EvalContext ctx(256);
  PrecisionGuard g(256);
  for (int s = 2; s <= 5; ++s)
    for (int n = 3; n <= 12; ++n)
      EXPECT_LT(abs(zeta_sine_sum(Real(s), n, ctx).value - oracle_value("sine_sum", s, "s", n)), Real("1e-45"))
          << s << "," << n;
  const Real pi = ctx.pi();
  const Real unrolled = 8 * pow(pi, 3) / 7 * (pow(8 * sin(pi / 8), -3) + pow(8 * sin(3 * pi / 8), -3));
  EXPECT_TRUE(ctx.within(zeta_sine_sum(Real(3), 3, ctx).value - unrolled));
  EXPECT_LT(*zeta_sine_sum(Real(2), 10, ctx).reference_error, Real("1e-4"));
  EXPECT_LT(*zeta_sine_sum(Real(4), 12, ctx).reference_error, Real("1e-6"));
  const ZetaApproxResult r = zeta_sine_sum(Real("2.5"), 6, ctx);
  EXPECT_FALSE(r.reference_error.has_value());
  EXPECT_EQ(r.terms_used, 0);
  EXPECT_THROW(zeta_sine_sum(Real(1), 5, ctx), std::domain_error);
  EXPECT_THROW(zeta_sine_sum(Real(3), 2, ctx), std::invalid_argument);
}

TEST(ZetaSineSum, LevelConvergence) {
  EvalContext ctx(256);
  PrecisionGuard g(256);
  // s = 2 is exact at every level (S(2,n) = 2^(2n-3)); the error is rounding noise
  EXPECT_LT(*zeta_sine_sum(Real(2), 7, ctx).reference_error, two_pow(-200));
  for (int s = 3; s <= 5; ++s) {
    Real prev = *zeta_sine_sum(Real(s), 5, ctx).reference_error;
    for (int n = 6; n <= 12; ++n) {
      const Real e = *zeta_sine_sum(Real(s), n, ctx).reference_error;
      EXPECT_LT(e, prev) << s << "," << n;
      EXPECT_GE(prev / e, 3) << s << "," << n;
      prev = e;
    }
  }
}

TEST(ZetaBinomialSeries, AgreesWithSineSumAtFixedLevel) {
  EvalContext ctx(256);
  PrecisionGuard g(256);
  for (int s : {2, 3})
    for (int n : {3, 4, 5}) {
      const ZetaApproxResult b = zeta_binomial_series(Real(s), n, 100000, ctx);
      EXPECT_EQ(b.status, SeriesStatus::Converged);
      EXPECT_LT(abs(b.value - zeta_sine_sum(Real(s), n, ctx).value), two_pow(-40)) << s << "," << n;
      const Real c = cos(ctx.pi() / pow2(n - 1));
      EXPECT_TRUE(ctx.within(b.tail_ratio - c * c));
    }
  EXPECT_LT(*zeta_binomial_series(Real(2), 4, 10000, ctx).reference_error, Real("1e-2"));
  // non-integer s still satisfies the fixed-level identity
  EXPECT_LT(abs(zeta_binomial_series(Real("2.5"), 4, 100000, ctx).value - zeta_sine_sum(Real("2.5"), 4, ctx).value),
            two_pow(-40));
}

TEST(ZetaBinomialSeries, FirstTermAndExhaustion) {
  EvalContext ctx(256);
  PrecisionGuard g(256);
  const Real s(3);
  const ZetaApproxResult one = zeta_binomial_series(s, 4, 1, ctx);
  EXPECT_EQ(one.terms_used, 1);
  EXPECT_EQ(one.status, SeriesStatus::TermsExhausted);
  // p = 0: C(-s/2, 0) = 1, bracket 1, so the partial sum is 2 times the prefactor
  const Real pref = pow(Real(2), 3 * s / 2 - 4 * s + 4 - 3) * pow(ctx.pi(), s) / (pow(Real(2), s) - 1);
  EXPECT_TRUE(ctx.within(one.value - 2 * pref));
  EXPECT_THROW(zeta_binomial_series(s, 4, 0, ctx), std::invalid_argument);
}

TEST(ZetaWeighted, MatchOracleAndReferences) {
  EvalContext ctx(256);
  PrecisionGuard g(256);
  for (int n = 3; n <= 12; ++n) {
    EXPECT_LT(abs(zeta3_weighted(n, ctx).value - oracle_value("weighted", 3, "which", n)), Real("1e-45")) << n;
    EXPECT_LT(abs(zeta5_weighted(n, ctx).value - oracle_value("weighted", 5, "which", n)), Real("1e-45")) << n;
  }
  for (int n : {10, 12}) {
    EXPECT_LT(*zeta3_weighted(n, ctx).reference_error, Real("1e-4"));
    EXPECT_LT(*zeta5_weighted(n, ctx).reference_error, Real("1e-4"));
  }
  const Real pi = ctx.pi();
  Real unrolled = 0;
  for (int j = 1; j <= 2; ++j) unrolled += (-j * j + 5 * j - 2) / sin((2 * j - 1) * pi / 8);
  EXPECT_TRUE(ctx.within(zeta3_weighted(3, ctx).value - pow(pi, 3) / (7 * 32) * unrolled));
}

TEST(ZetaWeighted, CubeWeightsAreHalfTheCscCubeSumWeights) {
  EvalContext ctx(256);
  PrecisionGuard g(256);
  for (int n = 3; n <= 10; ++n) {
    const CscPowerSum S = S_closed_form(3, n);
    for (std::size_t j = 1; j <= S.weights.size(); ++j) {
      const BigInt w = -BigInt(j * j) + (pow2(n - 1) + 1) * j - pow2(n - 2);
      EXPECT_EQ(Rational(w) * 2, S.weights[j - 1]) << n << "," << j;
    }
    const Real via_S = pow(ctx.pi(), 3) / (7 * Real(pow2(3 * n - 4))) * S.evaluate(ctx) / 2;
    EXPECT_TRUE(ctx.within(zeta3_weighted(n, ctx).value - via_S)) << n;
  }
}

TEST(FiniteLevelIdentity, BothOddCases) {
  EvalContext ctx(256);
  PrecisionGuard g(256);
  for (int s : {3, 5})
    for (int n : {4, 5, 6}) {
      const LevelIdentity li = finite_level_identity(s, n, 200000, ctx);
      EXPECT_EQ(li.status, SeriesStatus::Converged);
      EXPECT_LT(li.gap, two_pow(-40)) << s << "," << n;
      EXPECT_LT(li.gap, ctx.tolerance() * (abs(li.rhs) > 1 ? abs(li.rhs) : Real(1)) * 1e6) << s << "," << n;
    }
  EXPECT_LE(finite_level_identity(3, 4, 200000, ctx).terms_used, 2000);
  EXPECT_EQ(finite_level_identity(3, 6, 10, ctx).status, SeriesStatus::TermsExhausted);
  EXPECT_THROW(finite_level_identity(4, 5, 100, ctx), std::invalid_argument);
}

TEST(BernoulliLimit, ClosedValuesAndConvergence) {
  EvalContext ctx(256);
  PrecisionGuard g(256);
  const BernoulliCheck j1 = bernoulli_limit_check(1, 6, 1000000, ctx);
  EXPECT_EQ(j1.closed_value, Rational(1, 2));
  EXPECT_LT(j1.gap, two_pow(-100));  // exact at every level
  const BernoulliCheck a = bernoulli_limit_check(2, 4, 1000000, ctx);
  const BernoulliCheck b = bernoulli_limit_check(2, 6, 1000000, ctx);
  EXPECT_EQ(a.closed_value, Rational(1, 48));
  EXPECT_GT(a.gap / b.gap, 4);
  EXPECT_EQ(b.status, SeriesStatus::Converged);
  EXPECT_THROW(bernoulli_limit_check(0, 5, 10, ctx), std::invalid_argument);
}

TEST(OddCosinePowers, CancelInPairs) {
  EvalContext ctx(256);
  PrecisionGuard g(256);
  for (long p = 0; p <= 20; ++p)
    for (int n = 2; n <= 7; ++n) EXPECT_TRUE(ctx.within(odd_cos_power_sum(p, n, ctx))) << p << "," << n;
}
