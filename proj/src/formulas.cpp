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

#include "planesym/formulas.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "planesym/symmetry.hpp"

namespace planesym {

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return exact_divide(factorial(n), factorial(k) * factorial(n - k));
}

BigInt hyperfactorial(long n) { return staggered_hyperfactorial(1, n); }

BigInt staggered_hyperfactorial(long k, long n) {
  if (k < 1) throw std::invalid_argument("staggered_hyperfactorial: k must be positive");
  BigInt out = 1;
  for (long m = n - k; m >= 0; m -= k) out *= factorial(m);
  return out;
}

BigInt staggered_factorial(long k, long n) {
  if (k < 1) throw std::invalid_argument("staggered_factorial: k must be positive");
  BigInt out = 1;
  for (long m = n; m >= 1; m -= k) out *= m;
  return out;
}

namespace {


BigInt Hk(long k, long n) { return staggered_hyperfactorial(k, n); }
BigInt Fk(long k, long n) { return staggered_factorial(k, n); }

BigInt n1(long a, long b, long c) {
  return exact_divide(hyperfactorial(a + b + c) * hyperfactorial(a) * hyperfactorial(b) * hyperfactorial(c),
                      hyperfactorial(a + b) * hyperfactorial(a + c) * hyperfactorial(b + c));
}

BigInt n2(long a, long b) {
  return exact_divide(Hk(2, 2 * a + b + 1) * hyperfactorial(a) * Hk(2, b), Hk(2, 2 * a + 1) * hyperfactorial(a + b));
}

BigInt n3(long a) {
  return exact_divide(Hk(3, 3 * a + 2) * hyperfactorial(a), hyperfactorial(2 * a) * Fk(3, 3 * a - 2));
}

BigInt n4(long a) { return exact_divide(Hk(2, a) * Hk(6, 3 * a + 5), Hk(2, 2 * a + 1) * Fk(6, 3 * a - 2)); }

BigInt n5(std::array<long, 3> d) {
  const auto odd = std::count_if(d.begin(), d.end(), [](long x) { return x % 2 == 1; });
  if (odd == 3) return 0;
  // Move the side of distinct parity (if any) to the last slot.
  std::stable_partition(d.begin(), d.end(), [odd](long x) { return (x % 2 == 1) == (odd == 2); });
  const long a = d[0] / 2;
  const long b = d[1] / 2;
  const long c = d[2] / 2;
  if (odd == 0) {
    const BigInt v = n1(a, b, c);
    return v * v;
  }
  if (odd == 1) return n1(a, b, c) * n1(a, b, c + 1);
  return n1(a + 1, b, c) * n1(a, b + 1, c);
}

BigInt n6(long a, long b) {
  return exact_divide(Hk(2, 2 * b + 1) * Hk(2, 2 * b + 2 * a) * hyperfactorial(a),
                      hyperfactorial(2 * b + a) * Hk(2, 2 * a));
}

BigInt n8(long a) {
  return exact_divide(Fk(3, 3 * a - 2) * Hk(6, 6 * a) * Hk(2, 2 * a), Hk(4, 4 * a + 1) * Hk(4, 4 * a));
}

BigInt n9(long a) {
  const BigInt r = exact_divide(Hk(3, 3 * a + 1) * hyperfactorial(a), hyperfactorial(2 * a));
  return r * r;
}

BigInt n10(long a) { return exact_divide(Hk(3, 3 * a + 1) * hyperfactorial(a), hyperfactorial(2 * a)); }

[[noreturn]] void unsupported(int id, const BoxDims& d) {
  throw std::invalid_argument("n_class: no formula for class " + std::to_string(id) + " at (" + d.to_string() + ")");
}

}  // namespace

FormulaResult n_class(int class_id, const BoxDims& dims) {
  const auto cls = SymmetryClass::get(class_id);
  if (dims.a < 0 || dims.b < 0 || dims.c < 0) throw std::invalid_argument("n_class: negative side");
  FormulaResult res{class_id, dims, 0};
  if (!cls.fixes(dims)) return res;
  const long a = dims.a;
  const long b = dims.b;
  const long c = dims.c;
  // A box with a zero side holds only the empty partition.
  if (a * b * c == 0) {
    res.value = 1;
    return res;
  }
  const bool has_complement = class_id == 5 || class_id == 7 || class_id == 9 || class_id == 10;
  if (has_complement && (a * b * c) % 2 == 1) return res;
  switch (class_id) {
    case 1: res.value = n1(a, b, c); break;
    case 2: res.value = n2(a, c); break;
    case 3: res.value = n3(a); break;
    case 4: res.value = n4(a); break;
    case 5: res.value = n5({a, b, c}); break;
    case 6:
      // A transpose-complementary partition needs an even height bound.
      if (c % 2 == 1) return res;
      res.value = n6(a, c / 2);
      break;
    case 7:
      if (c % 2 == 1) return res;
      res.value = a % 2 == 0 ? n1(a / 2, a / 2, c / 2) : n1(a / 2, a / 2 + 1, c / 2);
      break;
    case 8:
      if (a % 2 == 1) return res;
      res.value = n8(a / 2);
      break;
    case 9: res.value = n9(a / 2); break;
    case 10: res.value = n10(a / 2); break;
    default: unsupported(class_id, dims);
  }
  return res;
}

mpq_class ratio_case1(int a, int b, int c) {
  mpq_class r(binomial(a + b + c, c - 1), binomial(a + b, a));
  r.canonicalize();
  return r;
}

mpq_class ratio_case3(int a) {
  if (a < 1) throw std::invalid_argument("ratio_case3: a must be positive");
  mpq_class r(BigInt(3 * a + 2) * binomial(3 * a, a - 1), BigInt(a) * binomial(2 * a, a));
  r.canonicalize();
  return r;
}

mpq_class ratio_case9(int a) {
  const BigInt num = binomial(3 * a + 1, a);
  const BigInt den = binomial(2 * a, a);
  mpq_class r(num * num, den * den);
  r.canonicalize();
  return r;
}

namespace {

mpq_class quotient(const BigInt& num, const BigInt& den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

RatioCheck make_check(std::string name, mpq_class lhs, mpq_class rhs) {
  RatioCheck chk{std::move(name), std::move(lhs), std::move(rhs), false};
  chk.pass = chk.lhs == chk.rhs;
  return chk;
}

}  // namespace

std::vector<RatioCheck> ratio_identities(int a, int b, int c) {
  std::vector<RatioCheck> out;
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("ratio_identities: negative side");
  if (c >= 1) {
    out.push_back(make_check("case1",
                             quotient(n_class(1, {a + 1, b + 1, c - 1}).value, n_class(1, {a, b, c}).value),
                             ratio_case1(a, b, c)));
    const mpq_class r1 = ratio_case1(a, b, c);
    out.push_back(make_check(
        "case5", quotient(n_class(5, {2 * a + 2, 2 * b + 2, 2 * c - 2}).value, n_class(5, {2 * a, 2 * b, 2 * c}).value),
        r1 * r1));
  }
  if (a == b && b == c) {
    if (a >= 1) {
      out.push_back(make_check("case3", quotient(n_class(3, {a + 1, a + 1, a + 1}).value, n_class(3, {a, a, a}).value),
                               ratio_case3(a)));
    }
    out.push_back(make_check("case9",
                             quotient(n_class(9, {2 * a + 2, 2 * a + 2, 2 * a + 2}).value, n_class(9, {2 * a, 2 * a, 2 * a}).value),
                             ratio_case9(a)));
  }
  return out;
}

namespace {

mpq_class telescope_case1(int a, int b, int c) {
  // N1(a,b,c) = N1(a+1,b+1,c-1) / ratio, ending at N1(a+c,b+c,0) = 1.
  mpq_class value = 1;
  for (int k = c; k >= 1; --k) {
    const int shift = c - k;
    value /= ratio_case1(a + shift, b + shift, k);
  }
  return value;
}

BigInt to_integer_checked(const mpq_class& v) {
  if (v.get_den() != 1) throw std::logic_error("n_class_via_ratios: telescoped value is not an integer");
  return v.get_num();
}

}  // namespace

BigInt n_class_via_ratios(int class_id, const BoxDims& dims) {
  if (dims.a < 0 || dims.b < 0 || dims.c < 0) throw std::invalid_argument("n_class_via_ratios: negative side");
  switch (class_id) {
    case 1: return to_integer_checked(telescope_case1(dims.a, dims.b, dims.c));
    case 3: {
      if (dims.a != dims.b || dims.b != dims.c) break;
      if (dims.a == 0) return 1;
      mpq_class value = 2;
      for (int k = 1; k < dims.a; ++k) value *= ratio_case3(k);
      return to_integer_checked(value);
    }
    case 5: {
      if (dims.a % 2 == 1 || dims.b % 2 == 1 || dims.c % 2 == 1) break;
      const mpq_class r = telescope_case1(dims.a / 2, dims.b / 2, dims.c / 2);
      return to_integer_checked(r * r);
    }
    case 9: {
      if (dims.a != dims.b || dims.b != dims.c || dims.a % 2 == 1) break;
      mpq_class value = 1;
      for (int k = 0; 2 * k < dims.a; ++k) value *= ratio_case9(k);
      return to_integer_checked(value);
    }
    default:
      throw std::invalid_argument("n_class_via_ratios: class " + std::to_string(class_id) + " has no ratio recurrence");
  }
  throw std::invalid_argument("n_class_via_ratios: (" + dims.to_string() + ") is not reachable for class " +
                              std::to_string(class_id));
}

}  // namespace planesym
