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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyadic {

enum class BasisKind { OddCos, EvenCos, OddSin };

// OddCos(n):  column k is cos((2k-1)pi/2^n)
// EvenCos(n): column 1 is 1, column j >= 2 is cos((j-1)pi/2^(n-1))
// OddSin(n):  column k is sin((2k-1)pi/2^n)
struct BasisTag {
  BasisKind kind = BasisKind::OddCos;
  int n = 2;

  std::size_t dimension() const {
    if (n < 2) throw std::invalid_argument("basis level must be at least 2");
    return std::size_t(1) << (n - 2);
  }
  std::string name() const {
    switch (kind) {
      case BasisKind::OddCos: return "OddCos";
      case BasisKind::EvenCos: return "EvenCos";
      case BasisKind::OddSin: return "OddSin";
    }
    return "?";
  }
  friend bool operator==(const BasisTag&, const BasisTag&) = default;
};

// Value of basis column k (1-based).
inline Real basis_value(const BasisTag& b, std::size_t k, const EvalContext& ctx) {
  const long kk = static_cast<long>(k);
  switch (b.kind) {
    case BasisKind::OddCos: return ctx.cos_dyadic(BigInt(2 * kk - 1), b.n);
    case BasisKind::OddSin: return ctx.sin_dyadic(BigInt(2 * kk - 1), b.n);
    case BasisKind::EvenCos:
      if (k == 1) {
        PrecisionGuard g(ctx.precision_bits());
        return Real(1);
      }
      return ctx.cos_dyadic(BigInt(kk - 1), b.n - 1);
  }
  throw std::logic_error("basis_value: unknown basis");
}

// Square integer matrix with value entries / 2^log2_denom. Negative
// log2_denom means a multiplying scale, e.g. -3 for a factor 8.
class ScaledMatrix {
 public:
  ScaledMatrix() = default;
  ScaledMatrix(BasisTag basis, long log2_denom)
      : basis_(basis), dim_(basis.dimension()), log2_denom_(log2_denom),
        e_(dim_ * dim_, BigInt(0)) {}

  std::size_t dim() const { return dim_; }
  long log2_denom() const { return log2_denom_; }
  void set_log2_denom(long d) { log2_denom_ = d; }
  const BasisTag& basis() const { return basis_; }
  void set_basis(BasisTag b) { basis_ = b; }

  // 1-based.
  BigInt& at(std::size_t i, std::size_t j) { return e_[idx(i, j)]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return e_[idx(i, j)]; }

  Rational scale() const {
    if (log2_denom_ >= 0) return Rational(BigInt(1), pow2(log2_denom_));
    return Rational(pow2(-log2_denom_));
  }
  Rational value(std::size_t i, std::size_t j) const { return Rational(at(i, j)) * scale(); }

  std::vector<BigInt> row(std::size_t i) const {
    std::vector<BigInt> r;
    for (std::size_t j = 1; j <= dim_; ++j) r.push_back(at(i, j));
    return r;
  }

  friend bool operator==(const ScaledMatrix& a, const ScaledMatrix& b) {
    return a.basis_ == b.basis_ && a.log2_denom_ == b.log2_denom_ && a.e_ == b.e_;
  }

 private:
  std::size_t idx(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1 || i > dim_ || j > dim_) throw std::out_of_range("ScaledMatrix index");
    return (i - 1) * dim_ + (j - 1);
  }

  BasisTag basis_{};
  std::size_t dim_ = 0;
  long log2_denom_ = 0;
  std::vector<BigInt> e_;
};

// Exact rational coefficients over a basis.
struct BasisVector {
  std::vector<Rational> coeffs;
  BasisTag basis;

  Real evaluate(const EvalContext& ctx) const {
    PrecisionGuard g(ctx.precision_bits());
    Real acc = 0;
    for (std::size_t k = 1; k <= coeffs.size(); ++k)
      acc += Real(coeffs[k - 1]) * basis_value(basis, k, ctx);
    return acc;
  }
};

// Reverse row order and column order. Maps the odd cosine basis onto the odd
// sine basis and back, since sin((2k-1)pi/2^n) = cos((2(h-k+1)-1)pi/2^n).
inline ScaledMatrix reverse_rows_cols(const ScaledMatrix& m) {
  BasisTag b = m.basis();
  if (b.kind == BasisKind::EvenCos) throw std::invalid_argument("reversal needs an odd basis");
  b.kind = (b.kind == BasisKind::OddCos) ? BasisKind::OddSin : BasisKind::OddCos;
  ScaledMatrix out(b, m.log2_denom());
  const std::size_t d = m.dim();
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = 1; j <= d; ++j) out.at(i, j) = m.at(d + 1 - i, d + 1 - j);
  return out;
}

using IntMatrix = std::vector<std::vector<BigInt>>;

inline IntMatrix entries_of(const ScaledMatrix& m) {
  IntMatrix a(m.dim(), std::vector<BigInt>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) a[i][j] = m.at(i + 1, j + 1);
  return a;
}

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("matmul: dimension mismatch");
  IntMatrix c(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(a.size(), std::vector<BigInt>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  return t;
}

// max_i |row_value(i) - sum_k M[i,k] basis(k)|, with row_value the function
// the matrix claims to expand at row i.
template <class RowValue>
Real expansion_residual(const ScaledMatrix& m, RowValue&& row_value, const EvalContext& ctx) {
  PrecisionGuard g(ctx.precision_bits());
  std::vector<Real> basis;
  for (std::size_t k = 1; k <= m.dim(); ++k) basis.push_back(basis_value(m.basis(), k, ctx));
  const Real scale(m.scale());
  Real worst = 0;
  for (std::size_t i = 1; i <= m.dim(); ++i) {
    Real acc = 0;
    for (std::size_t k = 1; k <= m.dim(); ++k)
      if (m.at(i, k) != 0) acc += Real(m.at(i, k)) * basis[k - 1];
    Real err = abs(Real(row_value(i)) - acc * scale);
    if (err > worst) worst = err;
  }
  return worst;
}

// Value of the row angle (2i-1)pi/2^n raised to the integer power r, using
// sine for OddSin rows and cosine otherwise.
inline Real row_power(const BasisTag& b, std::size_t i, long r, const EvalContext& ctx) {
  PrecisionGuard g(ctx.precision_bits());
  const BigInt t(2 * static_cast<long>(i) - 1);
  Real x = (b.kind == BasisKind::OddSin) ? ctx.sin_dyadic(t, b.n) : ctx.cos_dyadic(t, b.n);
  Real out = pow(x, std::abs(r));
  if (r < 0) out = Real(1) / out;
  return out;
}

}  // namespace dyadic
