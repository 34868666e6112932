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

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dyadic {

// Dense univariate polynomial, coefficients in ascending degree. The zero
// polynomial has no coefficients; there are never trailing zeros.
template <class C>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<C> c) : c_(c) { trim(); }
  explicit Polynomial(std::vector<C> c) : c_(std::move(c)) { trim(); }

  static Polynomial monomial(const C& a, std::size_t deg) {
    std::vector<C> c(deg + 1, C(0));
    c[deg] = a;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(std::size_t k) const { return k < c_.size() ? c_[k] : C(0); }
  const C& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<C> c(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<C> c = a.c_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> c(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const C& s, const Polynomial& a) {
    std::vector<C> c = a.c_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }

  // Horner in whatever ring V the caller evaluates in.
  template <class V>
  V evaluate(const V& x) const {
    V acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
    return acc;
  }

  // this(q(x))
  Polynomial compose(const Polynomial& q) const {
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Polynomial{*it};
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<C> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) c.emplace_back(a);
  return RatPolynomial(std::move(c));
}

// x itself.
template <class C>
Polynomial<C> identity_poly() {
  return Polynomial<C>{C(0), C(1)};
}

// Remainder of p modulo f over the rationals.
inline RatPolynomial poly_mod_reduce(const RatPolynomial& p, const RatPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("poly_mod_reduce: zero modulus");
  std::vector<Rational> r = p.coeffs();
  const auto& fc = f.coeffs();
  const std::size_t df = fc.size() - 1;
  const Rational lead = fc.back();
  while (r.size() > df && !r.empty()) {
    if (r.back() == 0) {
      r.pop_back();
      continue;
    }
    Rational q = r.back() / lead;
    std::size_t shift = r.size() - 1 - df;
    for (std::size_t k = 0; k <= df; ++k) r[shift + k] -= q * fc[k];
    r.pop_back();
  }
  return RatPolynomial(std::move(r));
}

inline RatPolynomial poly_mod_reduce(const IntPolynomial& p, const IntPolynomial& f) {
  return poly_mod_reduce(to_rational(p), to_rational(f));
}

inline IntPolynomial poly_compose(const IntPolynomial& p, const IntPolynomial& q) {
  return p.compose(q);
}

// Bit length of the largest coefficient.
inline unsigned max_coeff_bits(const IntPolynomial& p) {
  std::size_t bits = 0;
  for (const auto& a : p.coeffs())
    if (a != 0) bits = std::max<std::size_t>(bits, msb(abs(a)) + 1);
  return static_cast<unsigned>(bits);
}

// Horner at ctx precision widened by the coefficient size, so cancellation
// among huge coefficients cannot eat the tolerance.
inline Real poly_eval(const IntPolynomial& p, const Real& x, const EvalContext& ctx) {
  PrecisionGuard g(ctx.precision_bits() + max_coeff_bits(p) + 16);
  Real xx(x);
  return p.evaluate<Real>(xx);
}

}  // namespace dyadic
