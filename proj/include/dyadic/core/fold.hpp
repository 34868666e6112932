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

#include <stdexcept>

namespace dyadic {

// The angle (2i-1)pi/2^n.
struct DyadicAngle {
  long i = 1;
  int n = 2;

  bool canonical() const { return n >= 2 && i >= 1 && i <= (1L << (n - 2)); }
  // Odd numerator 2i-1 over 2^n.
  long numerator() const { return 2 * i - 1; }
};

// A basis position with a sign: value = sign * basis(k).
struct FoldedIndex {
  long k = 1;
  int sign = 1;

  friend bool operator==(const FoldedIndex&, const FoldedIndex&) = default;
};

// cos(t pi/2^n) = sign * cos((2k-1) pi/2^n), 1 <= k <= 2^(n-2).
inline FoldedIndex fold_odd_cos_index(const BigInt& t, int n) {
  if (n < 2) throw std::invalid_argument("fold_odd_cos_index: level must be at least 2");
  if (!is_odd(t)) throw std::invalid_argument("fold_odd_cos_index: even numerator");
  const BigInt full = pow2(n + 1), half = pow2(n), quarter = pow2(n - 1);
  BigInt u = mod_pos(t, full);
  if (u > half) u = full - u;
  if (u > quarter) return {static_cast<long>((half - u + 1) / 2), -1};
  return {static_cast<long>((u + 1) / 2), 1};
}

// cos(t pi/2^(n-1)) = sign * cos(k pi/2^(n-1)), 0 <= k < 2^(n-2).
inline FoldedIndex fold_even_cos_index(const BigInt& t, int n) {
  if (n < 3) throw std::invalid_argument("fold_even_cos_index: level must be at least 3");
  const BigInt full = pow2(n), half = pow2(n - 1), quarter = pow2(n - 2);
  BigInt u = mod_pos(t, full);
  if (u > half) u = full - u;
  if (u == quarter) throw zero_basis_element("fold_even_cos_index: folds onto cos(pi/2)");
  if (u > quarter) return {static_cast<long>(half - u), -1};
  return {static_cast<long>(u), 1};
}

}  // namespace dyadic
