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

#include <gmp.h>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dyadic {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

// Folding onto cos(pi/2) or any other index outside a basis.
class zero_basis_element : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Floor division, rounding toward -infinity. Works for builtin integers and
// BigInt alike.
template <class I>
I floor_div(const I& a, const I& b) {
  if (b <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
  I q = a / b;
  if (q * b != a && a < 0) q -= 1;
  return q;
}

// Least nonnegative residue.
template <class I>
I mod_pos(const I& a, const I& b) {
  if (b <= 0) throw std::invalid_argument("mod_pos: modulus must be positive");
  I r = a % b;
  if (r < 0) r += b;
  return r;
}

inline BigInt pow2(unsigned long e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

inline bool is_odd(const BigInt& a) { return bit_test(abs(a), 0); }
inline bool is_odd(long a) { return (a % 2) != 0; }

inline int neg_one_pow(const BigInt& e) { return is_odd(e) ? -1 : 1; }
inline int neg_one_pow(long e) { return is_odd(e) ? -1 : 1; }

// base^e mod m with e >= 0, m > 0; result in [0, m).
inline BigInt pow_mod(const BigInt& base, const BigInt& e, const BigInt& m) {
  if (m <= 0) throw std::invalid_argument("pow_mod: modulus must be positive");
  if (e < 0) throw std::invalid_argument("pow_mod: negative exponent");
  return boost::multiprecision::powm(mod_pos(base, m), e, m);
}

// C(r, k), zero outside 0 <= k <= r.
inline BigInt binom_int(long r, long k) {
  if (r < 0) throw std::invalid_argument("binom_int: negative upper index");
  if (k < 0 || k > r) return BigInt(0);
  BigInt out;
  mpz_bin_uiui(out.backend().data(), static_cast<unsigned long>(r),
               static_cast<unsigned long>(k));
  return out;
}

inline BigInt factorial(long k) {
  if (k < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt out;
  mpz_fac_ui(out.backend().data(), static_cast<unsigned long>(k));
  return out;
}

// a(a-1)...(a-k+1)/k! for any field-like T (Rational, Real).
template <class T>
T generalized_binomial(const T& a, long k) {
  if (k < 0) throw std::invalid_argument("generalized_binomial: negative k");
  T out = 1;
  for (long t = 0; t < k; ++t) {
    out *= (a - t);
    out /= (t + 1);
  }
  return out;
}

// Rising factorial a(a+1)...(a+k-1).
template <class T>
T pochhammer(const T& a, long k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative k");
  T out = 1;
  for (long t = 0; t < k; ++t) out *= (a + t);
  return out;
}

// Exact quotient; throws std::logic_error when b does not divide a.
inline BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
  if (b == 0) throw std::logic_error(std::string(what) + ": division by zero");
  BigInt q = a / b;
  if (q * b != a) throw std::logic_error(std::string(what) + ": inexact division");
  return q;
}

inline std::string to_string(const BigInt& a) { return a.str(); }
inline std::string to_string(const Rational& a) { return a.str(); }

}  // namespace dyadic
