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

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace planesym {

using BigInt = mpz_class;

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending order of exponent and kept trimmed, so
/// the zero polynomial has an empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  Poly(long value);  // NOLINT(google-explicit-constructor)
  Poly(const BigInt& value);  // NOLINT(google-explicit-constructor)
  Poly(std::initializer_list<long> coeffs);
  explicit Poly(std::vector<BigInt> coeffs);

  /// The monomial coeff * q^exponent.
  static Poly monomial(std::size_t exponent, const BigInt& coeff = 1);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree of the polynomial; -1 for zero.
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Smallest exponent with a nonzero coefficient; -1 for zero.
  [[nodiscard]] long order() const;

  [[nodiscard]] const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of q^k (zero past the degree).
  [[nodiscard]] BigInt coeff(std::size_t k) const;
  /// Constant term; throws if the polynomial is not constant.
  [[nodiscard]] BigInt constant() const;

  [[nodiscard]] BigInt eval(const BigInt& q) const;
  [[nodiscard]] mpq_class eval(const mpq_class& q) const;

  /// Divide by q^k; throws if a dropped coefficient is nonzero.
  [[nodiscard]] Poly shift_down(std::size_t k) const;

  /// Multiply by -1 if needed so the lowest-degree coefficient is positive.
  [[nodiscard]] Poly sign_normalized() const;

  /// Renders ascending, e.g. "1 + 2*q + q^2"; zero renders as "0".
  [[nodiscard]] std::string to_string() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator-(const Poly& p);
  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Exact quotient num / den. Throws std::domain_error unless den divides num in Z[q].
Poly exact_divide(const Poly& num, const Poly& den);

/// Exact quotient of integers. Throws std::domain_error on a nonzero remainder.
BigInt exact_divide(const BigInt& num, const BigInt& den);

}  // namespace planesym
