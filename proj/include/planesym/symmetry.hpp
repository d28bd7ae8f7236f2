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

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "planesym/graph.hpp"
#include "planesym/hexgrid.hpp"
#include "planesym/partition.hpp"

namespace planesym {

/// An element of the order-12 group generated by transpose, rotation and
/// complement, encoded as a permutation of the three box axes plus a
/// complement flag.
///
/// `perm` pushes coordinates: the image of a point p has coordinate p[i] in
/// position perm[i]. Composition is (p1, c1) * (p2, c2) = (p1 o p2, c1 ^ c2)
/// and acts as "apply the right factor first".
struct SymmetryElement {
  std::array<int, 3> perm{0, 1, 2};
  bool comp = false;

  static SymmetryElement identity() { return {}; }
  /// tau: swaps the first two box axes.
  static SymmetryElement transpose() { return {{1, 0, 2}, false}; }
  /// rho: cyclic shift of the box axes, B(a,b,c) -> B(c,a,b).
  static SymmetryElement rotation() { return {{1, 2, 0}, false}; }
  /// kappa: complement with all coordinates reversed.
  static SymmetryElement complement() { return {{0, 1, 2}, true}; }

  [[nodiscard]] bool odd() const;
  [[nodiscard]] std::string name() const;

  friend SymmetryElement operator*(const SymmetryElement& lhs, const SymmetryElement& rhs);
  auto operator<=>(const SymmetryElement&) const = default;
};

/// True iff g maps the box B(a,b,c) to itself.
bool fixes_box(const SymmetryElement& g, const BoxDims& box);

/// One of the ten symmetry classes G1..G10.
struct SymmetryClass {
  int id = 1;
  std::string name;
  std::vector<SymmetryElement> generators;

  /// Throws std::invalid_argument unless 1 <= id <= 10.
  static SymmetryClass get(int id);
  /// Box constraint: every generator fixes the box.
  [[nodiscard]] bool fixes(const BoxDims& box) const;
  /// Classes whose quotient graphs are bipartite: 1, 3, 6, 8.
  [[nodiscard]] bool bipartite() const;
};

/// Closure of the generators under composition, sorted.
std::vector<SymmetryElement> group_elements(const SymmetryClass& cls);

/// Action on triangles. Rotations permute coordinates; reflections of the
/// hexagon that exchange up and down triangles also apply the affine flip
/// (x,y,z) -> (b+c-1-x, a+c-1-y, a+b-1-z). The flip is applied iff
/// comp xor odd(perm). Throws std::invalid_argument if g does not fix the box.
TriangleId act_triangle(const SymmetryElement& g, const TriangleId& t, const HexRegion& region);

/// Action on plane partitions through their cube sets.
PlanePartition act_partition(const SymmetryElement& g, const PlanePartition& pp);

enum class Parity { kOdd, kEven };

/// A planar gadget whose attachment vertices may be matched to the outside:
/// for every subset X of attachments with |X| of the gadget's parity the
/// gadget minus X has exactly one perfect matching, and none otherwise.
struct ParityGadget {
  PlanarMultigraph graph;
  std::vector<int> attachments;
  Parity parity = Parity::kOdd;
};

/// Strip v1..vm (m = 2n-1 for odd parity, 2n for even) with path edges
/// v_i v_{i+1} and chords v_{2i} v_{2i+2}; attachments are v1, v3, ..., v_{2n-1}.
ParityGadget build_parity_gadget(int n_attach, Parity parity);

/// Result of the quotient construction Z(a,b,c) // G.
struct QuotientGraph {
  /// Quotient with an explicit bachelorhood vertex (possibly isolated), after
  /// removal of forced fixed-vertex components. Has a planar rotation system.
  PlanarMultigraph with_bachelorhood;
  /// Final graph: bachelorhood replaced by a parity gadget (or dropped when
  /// isolated). Its ordinary perfect matchings biject with the G-invariant
  /// matchings of Z(a,b,c).
  PlanarMultigraph graph;
  int removed_fixed_vertices = 0;
  int dropped_loops = 0;
  int gadget_attachments = 0;
};

/// Builds Z(a,b,c)//G. Throws std::invalid_argument if the box is not fixed by
/// the class and std::logic_error if the construction fails an internal
/// check (non-planar result, Euler formula, stray fixed vertices).
QuotientGraph quotient_graph(const HexRegion& region, const SymmetryClass& cls);

}  // namespace planesym
