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

#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dyadic {

struct PermSign {
  long m = 1;
  int q_parity = 0;
  int sign() const { return q_parity ? -1 : 1; }
  friend bool operator==(const PermSign&, const PermSign&) = default;
};

struct GroupElement {
  long value = 1;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

namespace detail {

inline void check_odd_power(long r, int n) {
  if (r < 1 || r % 2 == 0) throw std::invalid_argument("odd power must be a positive odd integer");
  if (n < 2 || n > 30) throw std::invalid_argument("level n out of range");
}

}  // namespace detail

// sum_k (-1)^k [C(r, (r-1)/2 - (k 2^(n-1) + p - 1)) - C(r, (r-1)/2 - ((k+1) 2^(n-1) - p))]
// Defined for any p; the first row uses p in [1, 2^(n-2)].
inline BigInt first_row_entry(long r, int n, long p) {
  detail::check_odd_power(r, n);
  const long half = (r - 1) / 2, period = 1L << (n - 1);
  BigInt acc = 0;
  for (long k = 0;; ++k) {
    const long a = half - (k * period + p - 1);
    const long b = half - ((k + 1) * period - p);
    if (a < 0 && b < 0) break;
    BigInt t = binom_int(r, a) - binom_int(r, b);
    if (k % 2) acc -= t; else acc += t;
  }
  return acc;
}

inline std::vector<BigInt> first_row(long r, int n) {
  detail::check_odd_power(r, n);
  std::vector<BigInt> row;
  for (long j = 1; j <= (1L << (n - 2)); ++j) row.push_back(first_row_entry(r, n, j));
  return row;
}

// Where first_row[j] lands in row i, and with which sign.
inline PermSign perm_sign(long i, long j, int n) {
  if (n < 2) throw std::invalid_argument("perm_sign: level must be at least 2");
  const long h = 1L << (n - 2);
  if (i < 1 || j < 1 || i > h || j > h) throw std::out_of_range("perm_sign: index out of range");
  const long p = 2 * i * j - i - j + 1;
  const long s = floor_div(p - 1, h);
  const long m = mod_pos((s % 2 ? -1 : 1) * (p - s * h), h + 1);
  const long q = floor_div(h + 2 * i * j - i - j, 2 * h);
  return {m, static_cast<int>(mod_pos(q, 2L))};
}

// Row i of the matrix by placing first-row entries.
inline ScaledMatrix matrix_scatter(long r, int n) {
  detail::check_odd_power(r, n);
  const std::vector<BigInt> f = first_row(r, n);
  ScaledMatrix out(BasisTag{BasisKind::OddCos, n}, r - 1);
  const long h = static_cast<long>(out.dim());
  for (long i = 1; i <= h; ++i)
    for (long j = 1; j <= h; ++j) {
      const PermSign ps = perm_sign(i, j, n);
      out.at(i, ps.m) = ps.q_parity ? BigInt(-f[j - 1]) : f[j - 1];
    }
  return out;
}

// Each entry read off directly: v = (i+j-1)(2i-1)^(h-1), p = v mod 2^(n-1),
// sign from the parity of floor(v / 2^(n-1)), found from v mod 2^n.
inline ScaledMatrix matrix_gather(long r, int n) {
  detail::check_odd_power(r, n);
  ScaledMatrix out(BasisTag{BasisKind::OddCos, n}, r - 1);
  const long h = static_cast<long>(out.dim());
  const BigInt period = pow2(n - 1), wrap = pow2(n);
  for (long i = 1; i <= h; ++i) {
    const BigInt g = pow_mod(BigInt(2 * i - 1), BigInt(h - 1), wrap);
    for (long j = 1; j <= h; ++j) {
      const BigInt v = mod_pos(BigInt(BigInt(i + j - 1) * g), wrap);
      const long p = static_cast<long>(BigInt(v % period));
      if (p == 0) throw std::logic_error("matrix_gather: zero residue");
      const bool odd_q = v >= period;
      BigInt e = first_row_entry(r, n, p);
      out.at(i, j) = odd_q ? BigInt(-e) : e;
    }
  }
  return out;
}

inline ScaledMatrix odd_power_matrix(long r, int n) { return matrix_gather(r, n); }

// Unsigned group law on {1..2^(n-2)}.
inline GroupElement group_op(GroupElement a, GroupElement b, int n) {
  return {perm_sign(a.value, b.value, n).m};
}

// Signed extension on {+-1..+-h}: (-a)o b = -(a o b).
inline long signed_group_op(long a, long b, int n) {
  const int sa = a < 0 ? -1 : 1, sb = b < 0 ? -1 : 1;
  const PermSign ps = perm_sign(std::labs(a), std::labs(b), n);
  return sa * sb * ps.sign() * ps.m;
}

inline long signed_inverse(long a, int n) {
  const long h = 1L << (n - 2);
  for (long x = -h; x <= h; ++x)
    if (x != 0 && signed_group_op(a, x, n) == 1) return x;
  throw std::logic_error("signed_inverse: no inverse found");
}

inline std::vector<std::vector<long>> cayley_table(int n) {
  const long h = 1L << (n - 2);
  std::vector<std::vector<long>> t(h, std::vector<long>(h));
  for (long a = 1; a <= h; ++a)
    for (long b = 1; b <= h; ++b) t[a - 1][b - 1] = perm_sign(a, b, n).m;
  return t;
}

struct GroupAxioms {
  bool closure = true;
  bool associative = true;
  bool commutative = true;
  bool identity = true;
  bool inverses = true;
  bool cyclic = false;
  long generator = 0;
  bool all() const { return closure && associative && commutative && identity && inverses && cyclic; }
};

// Smallest element whose powers reach every element of the table, or 0.
inline long table_generator(const std::vector<std::vector<long>>& t) {
  const long h = static_cast<long>(t.size());
  for (long g = 1; g <= h; ++g) {
    std::vector<bool> seen(h + 1, false);
    long x = g, count = 0;
    while (x >= 1 && x <= h && !seen[x]) {
      seen[x] = true;
      ++count;
      x = t[x - 1][g - 1];
    }
    if (count == h) return g;
  }
  return 0;
}

inline long group_generator(int n) { return table_generator(cayley_table(n)); }

// Axioms read off a Cayley table on {1..h}; element 1 is the identity.
inline GroupAxioms check_group_axioms(const std::vector<std::vector<long>>& t) {
  const long h = static_cast<long>(t.size());
  GroupAxioms g;
  auto in_range = [h](long x) { return x >= 1 && x <= h; };
  for (long a = 1; a <= h; ++a)
    for (long b = 1; b <= h; ++b)
      if (!in_range(t[a - 1][b - 1])) g.closure = false;
  if (!g.closure) {
    g.associative = g.commutative = g.identity = g.inverses = false;
    return g;
  }
  auto op = [&](long a, long b) { return t[a - 1][b - 1]; };
  for (long a = 1; a <= h; ++a) {
    bool has_inv = false;
    for (long b = 1; b <= h; ++b) {
      const long ab = op(a, b);
      if (ab != op(b, a)) g.commutative = false;
      if (ab == 1) has_inv = true;
      for (long c = 1; c <= h; ++c)
        if (op(ab, c) != op(a, op(b, c))) g.associative = false;
    }
    if (op(1, a) != a || op(a, 1) != a) g.identity = false;
    if (!has_inv) g.inverses = false;
  }
  g.generator = table_generator(t);
  g.cyclic = g.generator != 0;
  return g;
}

inline GroupAxioms check_group_axioms(int n) { return check_group_axioms(cayley_table(n)); }

inline Real verify_numeric(const ScaledMatrix& m, long r, const EvalContext& ctx) {
  return expansion_residual(m, [&](std::size_t i) { return row_power(m.basis(), i, r, ctx); }, ctx);
}

inline bool is_normal(const ScaledMatrix& m) {
  const IntMatrix a = entries_of(m), t = transpose(a);
  return matmul(a, t) == matmul(t, a);
}

inline bool commutes(const ScaledMatrix& a, const ScaledMatrix& b) {
  if (a.dim() != b.dim() || !(a.basis() == b.basis()))
    throw std::invalid_argument("commutes: dimension or basis mismatch");
  const IntMatrix x = entries_of(a), y = entries_of(b);
  return matmul(x, y) == matmul(y, x);
}

// M(i,k) = s_i s_k M(m_i, m_k) with (m_x, s_x) = perm_sign(a, x).
inline bool conjugation_invariance(const ScaledMatrix& m, GroupElement a) {
  const int n = m.basis().n;
  const long h = static_cast<long>(m.dim());
  std::vector<PermSign> img;
  for (long x = 1; x <= h; ++x) img.push_back(perm_sign(a.value, x, n));
  for (long i = 1; i <= h; ++i)
    for (long k = 1; k <= h; ++k) {
      const auto& pi = img[i - 1];
      const auto& pk = img[k - 1];
      BigInt rhs = m.at(pi.m, pk.m);
      if (pi.sign() * pk.sign() < 0) rhs = -rhs;
      if (m.at(i, k) != rhs) return false;
    }
  return true;
}

namespace detail {

// Entry at a signed column index: A(i, -c) = -A(i, c).
inline BigInt signed_at(const ScaledMatrix& m, long i, long j) {
  const int si = i < 0 ? -1 : 1, sj = j < 0 ? -1 : 1;
  const BigInt& e = m.at(std::labs(i), std::labs(j));
  return (si * sj < 0) ? BigInt(-e) : e;
}

}  // namespace detail

// A(j,i) = A(j o i^-1, 1) and A(i,j) = A(1, i^-1 o j) in the signed group.
inline bool transpose_relation_holds(const ScaledMatrix& m) {
  const int n = m.basis().n;
  const long h = static_cast<long>(m.dim());
  for (long i = 1; i <= h; ++i) {
    const long inv = signed_inverse(i, n);
    for (long j = 1; j <= h; ++j) {
      if (m.at(j, i) != detail::signed_at(m, signed_group_op(j, inv, n), 1)) return false;
      if (m.at(i, j) != detail::signed_at(m, 1, signed_group_op(inv, j, n))) return false;
    }
  }
  return true;
}

// Column sums of the matrix, scaled: sum_i cos^r of the row angles.
inline BasisVector power_sum(long r, int n) {
  const ScaledMatrix m = matrix_gather(r, n);
  BasisVector v{std::vector<Rational>(m.dim(), Rational(0)), m.basis()};
  for (std::size_t j = 1; j <= m.dim(); ++j) {
    BigInt s = 0;
    for (std::size_t i = 1; i <= m.dim(); ++i) s += m.at(i, j);
    v.coeffs[j - 1] = Rational(s) * m.scale();
  }
  return v;
}

// sum_{i=1}^{2^(m-1)-1} cos^r(i pi/2^m), split by the level of i pi/2^m
// once reduced to an odd numerator.
inline std::vector<std::pair<int, BasisVector>> all_angles_power_sum(long r, int m) {
  if (m < 2) throw std::invalid_argument("all_angles_power_sum: m must be at least 2");
  std::vector<std::pair<int, BasisVector>> out;
  for (int n = 2; n <= m; ++n) out.emplace_back(n, power_sum(r, n));
  return out;
}

inline Real all_angles_power_sum_value(long r, int m, const EvalContext& ctx) {
  PrecisionGuard g(ctx.precision_bits());
  Real acc = 0;
  for (const auto& [n, v] : all_angles_power_sum(r, m)) acc += v.evaluate(ctx);
  return acc;
}

// Same construction in the sine basis.
inline ScaledMatrix odd_power_matrix_sin(long r, int n) { return reverse_rows_cols(matrix_gather(r, n)); }

}  // namespace dyadic
