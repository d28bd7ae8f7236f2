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

#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "planesym/matrix.hpp"

namespace planesym {

inline constexpr std::size_t kPermanentMaxDim = 28;
inline constexpr std::size_t kHafnianMaxDim = 16;

/// Signed determinant by fraction-free (Bareiss) elimination. Pivots on the
/// first nonzero entry of each column in row order.
BigInt det_signed(const IntMatrix& m);
Poly det_signed(const PolyMatrix& m);

/// |det| for integer matrices.
BigInt det(const IntMatrix& m);
/// det with the sign fixed so the lowest-degree coefficient is positive.
Poly det(const PolyMatrix& m);

/// Signed Pfaffian of a skew matrix by skew Gaussian elimination over Q.
/// Odd dimension gives 0.
BigInt pfaffian_signed(const IntMatrix& m);

/// |Pf| as the exact square root of det. Odd dimension gives 0.
BigInt pfaffian_abs(const IntMatrix& m);
/// Pf of a polynomial skew matrix, sign-normalized. Computed by exact
/// elimination at enough integer points of q followed by interpolation;
/// Pf^2 == det is checked before returning.
Poly pfaffian_abs(const PolyMatrix& m);

/// Exact square root; throws std::domain_error unless n is a perfect square.
BigInt integer_sqrt(const BigInt& n);

namespace detail {
inline bool is_zero(const BigInt& x) { return x == 0; }
inline bool is_zero(const Poly& x) { return x.is_zero(); }
inline bool is_zero(__int128 x) { return x == 0; }
}  // namespace detail

namespace detail {

/// Ryser over 128-bit integers; valid when 2^n times the product of the row
/// absolute sums stays below 2^126. Returns false if that bound fails.
bool permanent_int128(const IntMatrix& m, BigInt& out);

template <typename Scalar>
Scalar permanent_ryser(const ExactMatrix<Scalar>& m) {
  const std::size_t n = m.rows();
  // Nonzero entries per column: only those rows change when a column flips.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> column(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!is_zero(m(i, j))) column[j].emplace_back(i, m(i, j));

  std::vector<Scalar> row_sums(n, Scalar(0));
  std::size_t zero_rows = n;
  Scalar total(0);
  unsigned long long gray = 0;
  const unsigned long long subsets = 1ULL << n;
  for (unsigned long long k = 1; k < subsets; ++k) {
    const unsigned long long next = k ^ (k >> 1);
    const unsigned long long flipped = next ^ gray;
    const auto col = static_cast<std::size_t>(__builtin_ctzll(flipped));
    const bool added = (next & flipped) != 0;
    for (const auto& [row, value] : column[col]) {
      const bool was_zero = is_zero(row_sums[row]);
      if (added) {
        row_sums[row] += value;
      } else {
        row_sums[row] -= value;
      }
      const bool now_zero = is_zero(row_sums[row]);
      if (was_zero && !now_zero) --zero_rows;
      if (!was_zero && now_zero) ++zero_rows;
    }
    gray = next;
    if (zero_rows != 0) continue;
    Scalar prod(1);
    for (std::size_t i = 0; i < n; ++i) prod *= row_sums[i];
    // Sign is (-1)^(n - |S|).
    if (((n - static_cast<std::size_t>(__builtin_popcountll(gray))) & 1U) != 0) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return total;
}

}  // namespace detail

/// Permanent by Ryser's inclusion-exclusion with a Gray-code walk over column
/// subsets. Oracle use only: dimension is capped at kPermanentMaxDim.
template <typename Scalar>
Scalar permanent(const ExactMatrix<Scalar>& m) {
  if (!m.square()) throw std::invalid_argument("permanent: matrix is not square");
  const std::size_t n = m.rows();
  if (n > kPermanentMaxDim) throw std::length_error("permanent: dimension over oracle limit");
  if (n == 0) return Scalar(1);
  if constexpr (std::is_same_v<Scalar, BigInt>) {
    BigInt out;
    if (detail::permanent_int128(m, out)) return out;
  }
  return detail::permanent_ryser(m);
}

namespace detail {
template <typename Scalar>
Scalar hafnian_rec(const ExactMatrix<Scalar>& m, std::vector<bool>& used) {
  const std::size_t n = m.rows();
  std::size_t first = 0;
  while (first < n && used[first]) ++first;
  if (first == n) return Scalar(1);
  used[first] = true;
  Scalar sum(0);
  for (std::size_t j = first + 1; j < n; ++j) {
    if (used[j] || detail::is_zero(m(first, j))) continue;
    used[j] = true;
    sum += m(first, j) * hafnian_rec(m, used);
    used[j] = false;
  }
  used[first] = false;
  return sum;
}
}  // namespace detail

/// Hafnian by recursion on the first unmatched index. Odd dimension gives 0.
template <typename Scalar>
Scalar hafnian(const ExactMatrix<Scalar>& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("hafnian: matrix is not symmetric");
  if (m.rows() > kHafnianMaxDim) throw std::length_error("hafnian: dimension over oracle limit");
  if (m.rows() % 2 == 1) return Scalar(0);
  std::vector<bool> used(m.rows(), false);
  return detail::hafnian_rec(m, used);
}

}  // namespace planesym
