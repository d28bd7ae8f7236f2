/*
 * Copyright 2026 The planesym Authors
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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "planesym/hexgrid.hpp"
#include "planesym/poly.hpp"

namespace planesym {

BigInt factorial(long n);
/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// H(n) = 0! 1! ... (n-1)!.
BigInt hyperfactorial(long n);
/// H_k(n) = (n-k)! (n-2k)! ..., over the terms with n - jk >= 0.
BigInt staggered_hyperfactorial(long k, long n);
/// F_k(n) = n (n-k) (n-2k) ..., stopping at the smallest positive term.
BigInt staggered_factorial(long k, long n);

struct FormulaResult {
  int class_id = 1;
  BoxDims dims;
  BigInt value;
};

/// Table value N_i(a, b, c). Boxes not fixed by the class give 0, as do
/// complement classes on boxes of odd volume. Throws std::invalid_argument
/// for a fixed box outside every pattern the class supports.
FormulaResult n_class(int class_id, const BoxDims& dims);

/// One ratio identity evaluated on both sides.
struct RatioCheck {
  std::string name;
  mpq_class lhs;
  mpq_class rhs;
  bool pass = false;
};

/// All identities applicable at (a, b, c):
///   case 1: N1(a+1,b+1,c-1) / N1(a,b,c) = C(a+b+c, c-1) / C(a+b, a)   (c >= 1)
///   case 3: N3(a+1) / N3(a) = (3a+2)/a * C(3a, a-1) / C(2a, a)          (a = b = c >= 1)
///   case 5: N5(2a+2,2b+2,2c-2) / N5(2a,2b,2c) = (case 1 ratio)^2        (c >= 1)
///   case 9: N9(2a+2) / N9(2a) = C(3a+1, a)^2 / C(2a, a)^2               (a = b = c)
std::vector<RatioCheck> ratio_identities(int a, int b, int c);

/// Right-hand sides of the ratio identities.
mpq_class ratio_case1(int a, int b, int c);
mpq_class ratio_case3(int a);
mpq_class ratio_case9(int a);

/// Counts by telescoping the ratio identities from a degenerate base case.
/// Classes 1, 3, 5 and 9 only. Throws std::invalid_argument for other
/// classes or unreachable dims.
BigInt n_class_via_ratios(int class_id, const BoxDims& dims);

}  // namespace planesym
