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

#include "planesym/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace planesym {

Poly::Poly(long value) {
  if (value != 0) coeffs_.emplace_back(value);
}

Poly::Poly(const BigInt& value) {
  if (value != 0) coeffs_.push_back(value);
}

Poly::Poly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Poly::Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(std::size_t exponent, const BigInt& coeff) {
  if (coeff == 0) return {};
  std::vector<BigInt> c(exponent + 1, BigInt(0));
  c[exponent] = coeff;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long Poly::order() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return static_cast<long>(k);
  }
  return -1;
}

BigInt Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

BigInt Poly::constant() const {
  if (!is_constant()) throw std::domain_error("Poly::constant: polynomial " + to_string() + " is not constant");
  return coeff(0);
}

BigInt Poly::eval(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

mpq_class Poly::eval(const mpq_class& q) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + mpq_class(*it);
  return acc;
}

Poly Poly::shift_down(std::size_t k) const {
  if (k == 0 || is_zero()) return *this;
  for (std::size_t i = 0; i < std::min(k, coeffs_.size()); ++i) {
    if (coeffs_[i] != 0) throw std::domain_error("Poly::shift_down: not divisible by q^" + std::to_string(k));
  }
  if (k >= coeffs_.size()) return {};
  return Poly(std::vector<BigInt>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

Poly Poly::sign_normalized() const {
  long lo = order();
  if (lo >= 0 && coeffs_[static_cast<std::size_t>(lo)] < 0) return -*this;
  return *this;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'q';
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly operator-(const Poly& p) {
  Poly r = p;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly exact_divide(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) throw std::domain_error("exact_divide: inexact polynomial division");
  std::vector<BigInt> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dn = d.size();
  std::vector<BigInt> quot(rem.size() - dn + 1, BigInt(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + dn - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t())) {
      throw std::domain_error("exact_divide: inexact polynomial division");
    }
    BigInt qk = top / d.back();
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= qk * d[j];
    quot[k] = std::move(qk);
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::domain_error("exact_divide: inexact polynomial division");
  }
  return Poly(std::move(quot));
}

BigInt exact_divide(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("exact_divide: division by zero");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::domain_error("exact_divide: " + num.get_str() + " is not divisible by " + den.get_str());
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace planesym
