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

#include <dyadic/even_power.hpp>
#include <dyadic/negative_power.hpp>
#include <dyadic/odd_power.hpp>

#include <stdexcept>

namespace dyadic {

// Matrix for cos^r (basis_cos) or sin^r over the level-n basis, picked by
// the sign and parity of r. Even r only has the cosine presentation.
inline ScaledMatrix power_matrix(long r, int n, bool basis_cos = true) {
  if (r < 0) return negative_power_matrix(r, n, basis_cos);
  if (r % 2 == 0) {
    if (!basis_cos) throw std::invalid_argument("even powers use the cosine basis only");
    return even_matrix(r, n);
  }
  return basis_cos ? odd_power_matrix(r, n) : odd_power_matrix_sin(r, n);
}

// max_i |row power - expansion| at ctx precision.
inline Real power_matrix_residual(const ScaledMatrix& m, long r, const EvalContext& ctx) {
  return expansion_residual(m, [&](std::size_t i) { return row_power(m.basis(), i, r, ctx); }, ctx);
}

}  // namespace dyadic
