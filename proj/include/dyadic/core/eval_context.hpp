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

#include <dyadic/core/numbers.hpp>

#include <cmath>
#include <stdexcept>

namespace dyadic {

// Decimal digits handed to mpfr_float so that at least `bits` binary digits
// are carried.
inline unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

// mpfr_float in this Boost takes its working precision from a process-wide
// default. The guard swaps it in and restores the previous value on exit.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits) : saved_(Real::default_precision()) {
    Real::default_precision(digits10_for_bits(bits));
  }
  ~PrecisionGuard() { Real::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

class EvalContext {
 public:
  explicit EvalContext(unsigned precision_bits = 256)
      : EvalContext(precision_bits, precision_bits / 2) {}

  // tolerance = 2^-tolerance_bits
  EvalContext(unsigned precision_bits, unsigned tolerance_bits)
      : bits_(precision_bits), tol_bits_(tolerance_bits) {
    if (precision_bits < 64)
      throw std::invalid_argument("EvalContext: precision must be at least 64 bits");
    if (tolerance_bits == 0)
      throw std::invalid_argument("EvalContext: tolerance must be below 1");
  }

  unsigned precision_bits() const { return bits_; }
  unsigned tolerance_bits() const { return tol_bits_; }

  PrecisionGuard scope() const { return PrecisionGuard(bits_); }

  // Same tolerance, more working bits.
  EvalContext widened(unsigned extra_bits) const {
    return EvalContext(bits_ + extra_bits, tol_bits_);
  }

  Real tolerance() const {
    PrecisionGuard g(bits_);
    return ldexp(Real(1), -static_cast<long>(tol_bits_));
  }

  bool within(const Real& err) const { return abs(err) < tolerance(); }

  Real pi() const {
    PrecisionGuard g(bits_);
    return pi_here();
  }
  Real cos(const Real& x) const {
    PrecisionGuard g(bits_);
    return boost::multiprecision::cos(x);
  }
  Real sin(const Real& x) const {
    PrecisionGuard g(bits_);
    return boost::multiprecision::sin(x);
  }
  Real arccos(const Real& x) const {
    PrecisionGuard g(bits_);
    return boost::multiprecision::acos(x);
  }
  Real sqrt(const Real& x) const {
    PrecisionGuard g(bits_);
    return boost::multiprecision::sqrt(x);
  }
  Real power(const Real& x, const Real& y) const {
    PrecisionGuard g(bits_);
    return boost::multiprecision::pow(x, y);
  }

  // cos(t*pi/2^k) and sin(t*pi/2^k); t is reduced modulo 2^(k+1) first so
  // huge t never reaches the floating kernel.
  Real cos_dyadic(const BigInt& t, unsigned k) const {
    PrecisionGuard g(bits_);
    return boost::multiprecision::cos(dyadic_arg(t, k));
  }
  Real sin_dyadic(const BigInt& t, unsigned k) const {
    PrecisionGuard g(bits_);
    return boost::multiprecision::sin(dyadic_arg(t, k));
  }

 private:
  // pi at the precision currently installed.
  static Real pi_here() {
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
  }

  Real dyadic_arg(const BigInt& t, unsigned k) const {
    BigInt u = mod_pos(t, pow2(k + 1));
    Real x(u);
    x *= pi_here();
    return ldexp(x, -static_cast<long>(k));
  }

  unsigned bits_;
  unsigned tol_bits_;
};

}  // namespace dyadic
