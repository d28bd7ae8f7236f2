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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "planesym/graph.hpp"
#include "planesym/matrix.hpp"

namespace planesym::testing {

/// Laplace expansion along the first row.
inline BigInt cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const BigInt term = m(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

/// Sum over all permutations.
inline BigInt permutation_permanent(const IntMatrix& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    BigInt prod = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) prod *= m(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Expansion along the first row: Pf(A) = sum_j (-1)^(j+1) a_{0j} Pf(A without 0, j).
inline BigInt expansion_pfaffian(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n % 2 == 1) return 0;
  BigInt total = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (m(0, j) == 0) continue;
    std::vector<std::size_t> keep;
    for (std::size_t k = 1; k < n; ++k)
      if (k != j) keep.push_back(k);
    IntMatrix minor(keep.size(), keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
      for (std::size_t c = 0; c < keep.size(); ++c) minor(r, c) = m(keep[r], keep[c]);
    const BigInt term = m(0, j) * expansion_pfaffian(minor);
    total += (j % 2 == 1) ? term : BigInt(-term);
  }
  return total;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline IntMatrix random_skew(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = dist(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

inline bool all_components_even(const PlanarMultigraph& g) {
  int ncomp = 0;
  const auto comp = g.components(&ncomp);
  std::vector<int> size(static_cast<std::size_t>(ncomp), 0);
  for (int c : comp) ++size[static_cast<std::size_t>(c)];
  return std::all_of(size.begin(), size.end(), [](int s) { return s % 2 == 0; });
}

/// Random subgraph of a rows x cols grid, optionally with one random diagonal
/// per cell (which breaks bipartiteness), embedded from grid positions.
/// Resampled until every component has an even number of vertices.
inline PlanarMultigraph random_grid_graph(std::mt19937& rng, int rows, int cols, bool diagonals, double keep = 0.75) {
  std::bernoulli_distribution coin(keep);
  std::bernoulli_distribution flip(0.5);
  for (;;) {
    PlanarMultigraph g;
    std::vector<std::pair<double, double>> pos;
    std::vector<int> colors;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        g.add_vertex(std::to_string(r) + "," + std::to_string(c));
        pos.emplace_back(c, r);
        colors.push_back((r + c) % 2);
      }
    auto at = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        if (c + 1 < cols && coin(rng)) g.add_edge(at(r, c), at(r, c + 1));
        if (r + 1 < rows && coin(rng)) g.add_edge(at(r, c), at(r + 1, c));
        if (diagonals && r + 1 < rows && c + 1 < cols && coin(rng)) {
          if (flip(rng)) {
            g.add_edge(at(r, c), at(r + 1, c + 1));
          } else {
            g.add_edge(at(r, c + 1), at(r + 1, c));
          }
        }
      }
    if (!all_components_even(g)) continue;
    embed_geometric(g, pos);
    if (!diagonals) g.set_bipartition(colors);
    return g;
  }
}

/// Grid shapes with an even number of vertices, at most 14.
inline std::pair<int, int> random_grid_shape(std::mt19937& rng) {
  static const std::vector<std::pair<int, int>> shapes{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 3}, {2, 6}, {2, 7}};
  std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
  return shapes[pick(rng)];
}

/// The cycle 0-1-...-(n-1)-0 drawn as a regular polygon.
inline PlanarMultigraph cycle_graph(int n) {
  PlanarMultigraph g;
  std::vector<std::pair<double, double>> pos;
  std::vector<int> colors;
  for (int i = 0; i < n; ++i) {
    g.add_vertex(std::to_string(i));
    const double t = 2.0 * 3.141592653589793 * i / n;
    pos.emplace_back(std::cos(t), std::sin(t));
    colors.push_back(i % 2);
  }
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  embed_geometric(g, pos);
  if (n % 2 == 0) g.set_bipartition(colors);
  return g;
}

}  // namespace planesym::testing
