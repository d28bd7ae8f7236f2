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
#include <string>
#include <utility>
#include <vector>

#include "planesym/poly.hpp"

namespace planesym {

/// Dense matrix over an exact ring, with label sets for rows and columns.
///
/// Labels are informational only: they name the graph vertices a row or
/// column came from and carry no ordering, so callers should only rely on
/// absolute determinants and Pfaffians.
template <typename Scalar>
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ExactMatrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] const std::vector<std::string>& row_labels() const { return row_labels_; }
  [[nodiscard]] const std::vector<std::string>& col_labels() const { return col_labels_; }
  void set_labels(std::vector<std::string> rows, std::vector<std::string> cols) {
    row_labels_ = std::move(rows);
    col_labels_ = std::move(cols);
  }

  [[nodiscard]] ExactMatrix transposed() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    t.set_labels(col_labels_, row_labels_);
    return t;
  }

  [[nodiscard]] bool is_skew() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i; j < cols_; ++j) {
        if (!((*this)(i, j) == -(*this)(j, i))) return false;
      }
    }
    return true;
  }

  [[nodiscard]] bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  template <typename F>
  [[nodiscard]] auto map(F&& f) const {
    using Out = decltype(f(std::declval<const Scalar&>()));
    ExactMatrix<Out> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    out.set_labels(row_labels_, col_labels_);
    return out;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

using IntMatrix = ExactMatrix<BigInt>;
using PolyMatrix = ExactMatrix<Poly>;

/// Entrywise q = value specialization of a polynomial matrix.
IntMatrix evaluate(const PolyMatrix& m, const BigInt& q);

/// Converts a matrix whose entries are all constant polynomials.
IntMatrix to_integer(const PolyMatrix& m);

}  // namespace planesym
