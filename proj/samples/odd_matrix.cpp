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
// Prints the cos^15 expansion matrix at level 4 and checks it numerically.

#include <dyadic/odd_power.hpp>

#include <iostream>

int main() {
  using namespace dyadic;
  const ScaledMatrix m = odd_power_matrix(15, 4);
  std::cout << "cos^15((2i-1)pi/16) = sum_k M[i,k] cos((2k-1)pi/16), M = (1/2^" << m.log2_denom() << ") *\n";
  for (std::size_t i = 1; i <= m.dim(); ++i) {
    for (std::size_t j = 1; j <= m.dim(); ++j) std::cout << '\t' << m.at(i, j);
    std::cout << '\n';
  }
  EvalContext ctx(256);
  const Real res = verify_numeric(m, 15, ctx);
  std::cout << "residual at 256 bits: " << static_cast<double>(res) << '\n';
  return ctx.within(res) ? 0 : 1;
}
