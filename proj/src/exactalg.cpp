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

#include "planesym/exactalg.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace planesym {

IntMatrix evaluate(const PolyMatrix& m, const BigInt& q) {
  return m.map([&](const Poly& p) { return p.eval(q); });
}

IntMatrix to_integer(const PolyMatrix& m) {
  return m.map([](const Poly& p) { return p.constant(); });
}

namespace {

template <typename Scalar>
Scalar bareiss(ExactMatrix<Scalar> a) {
  if (!a.square()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return Scalar(1);
  bool negate = false;
  Scalar prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && detail::is_zero(a(pivot, k))) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Scalar t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = exact_divide(t, prev);
      }
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  Scalar result = a(n - 1, n - 1);
  if (negate) result = -result;
  return result;
}

mpq_class pfaffian_rational(ExactMatrix<mpq_class> a) {
  const std::size_t n = a.rows();
  if (n % 2 == 1) return 0;
  mpq_class result = 1;
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t pivot = k + 1;
    while (pivot < n && a(k, pivot) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k + 1) {
      // Simultaneous row/column swap flips the sign of the Pfaffian.
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(k + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, pivot), a(i, k + 1));
      result = -result;
    }
    const mpq_class piv = a(k, k + 1);
    result *= piv;
    // Schur complement: C + B^T M^{-1} B with M = [[0, piv], [-piv, 0]].
    for (std::size_t i = k + 2; i < n; ++i) {
      for (std::size_t j = k + 2; j < n; ++j) {
        a(i, j) += (a(k + 1, i) * a(k, j) - a(k, i) * a(k + 1, j)) / piv;
      }
    }
  }
  return result;
}

void require_skew(const IntMatrix& m, const char* who) {
  if (!m.is_skew()) throw std::invalid_argument(std::string(who) + ": matrix is not skew-symmetric");
}

}  // namespace

BigInt det_signed(const IntMatrix& m) { return bareiss(m); }
Poly det_signed(const PolyMatrix& m) { return bareiss(m); }

BigInt det(const IntMatrix& m) { return abs(det_signed(m)); }
Poly det(const PolyMatrix& m) { return det_signed(m).sign_normalized(); }

BigInt pfaffian_signed(const IntMatrix& m) {
  require_skew(m, "pfaffian_signed");
  mpq_class pf = pfaffian_rational(m.map([](const BigInt& x) { return mpq_class(x); }));
  if (pf.get_den() != 1) throw std::logic_error("pfaffian_signed: non-integral Pfaffian");
  return pf.get_num();
}

BigInt integer_sqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("integer_sqrt: negative input " + n.get_str());
  BigInt root;
  BigInt rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) throw std::domain_error("integer_sqrt: " + n.get_str() + " is not a perfect square");
  return root;
}

BigInt pfaffian_abs(const IntMatrix& m) {
  require_skew(m, "pfaffian_abs");
  if (m.rows() % 2 == 1) return 0;
  return integer_sqrt(det_signed(m));
}

Poly pfaffian_abs(const PolyMatrix& m) {
  if (!m.is_skew()) throw std::invalid_argument("pfaffian_abs: matrix is not skew-symmetric");
  const std::size_t n = m.rows();
  if (n % 2 == 1) return {};

  long degree_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    long row_max = -1;
    for (std::size_t j = 0; j < n; ++j) row_max = std::max(row_max, m(i, j).degree());
    if (row_max < 0) return {};
    degree_sum += row_max;
  }
  const long bound = degree_sum / 2;

  // Newton divided differences on the nodes q = 0, 1, ..., bound.
  const auto points = static_cast<std::size_t>(bound + 1);
  std::vector<mpq_class> table(points);
  for (std::size_t k = 0; k < points; ++k) {
    table[k] = mpq_class(pfaffian_signed(evaluate(m, BigInt(static_cast<long>(k)))));
  }
  for (std::size_t level = 1; level < points; ++level) {
    for (std::size_t k = points - 1; k >= level; --k) {
      table[k] = (table[k] - table[k - 1]) / mpq_class(static_cast<long>(level));
      if (k == level) break;
    }
  }
  // Expand sum_k table[k] * prod_{j<k} (q - j) into monomial form.
  std::vector<mpq_class> coeffs(points, mpq_class(0));
  std::vector<mpq_class> basis{mpq_class(1)};
  for (std::size_t k = 0; k < points; ++k) {
    for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += table[k] * basis[d];
    std::vector<mpq_class> next(basis.size() + 1, mpq_class(0));
    for (std::size_t d = 0; d < basis.size(); ++d) {
      next[d + 1] += basis[d];
      next[d] -= basis[d] * static_cast<long>(k);
    }
    basis = std::move(next);
  }
  std::vector<BigInt> out;
  out.reserve(points);
  for (const auto& c : coeffs) {
    if (c.get_den() != 1) throw std::logic_error("pfaffian_abs: non-integral interpolated coefficient");
    out.push_back(c.get_num());
  }
  Poly pf(std::move(out));
  if (!(pf * pf == det_signed(m))) throw std::logic_error("pfaffian_abs: Pf^2 != Det");
  return pf.sign_normalized();
}

}  // namespace planesym

namespace planesym::detail {

namespace {

BigInt from_int128(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  BigInt out = (hi << 64) + lo;
  return negative ? BigInt(-out) : out;
}

}  // namespace

bool permanent_int128(const IntMatrix& m, BigInt& out) {
  const std::size_t n = m.rows();
  BigInt bound = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!m(i, j).fits_slong_p()) return false;
      row += abs(m(i, j));
    }
    bound *= row;
  }
  bound <<= static_cast<unsigned long>(n);
  if (mpz_sizeinbase(bound.get_mpz_t(), 2) > 125) return false;
  ExactMatrix<__int128> small(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) small(i, j) = m(i, j).get_si();
  out = from_int128(permanent_ryser(small));
  return true;
}

}  // namespace planesym::detail
