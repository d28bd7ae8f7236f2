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

#include <optional>
#include <string>
#include <vector>

#include "planesym/graph.hpp"
#include "planesym/matrix.hpp"

namespace planesym {

/// A planar multigraph together with a sign (+1 / -1) per edge id.
struct SignedGraph {
  PlanarMultigraph base;
  std::vector<int> signs;
};

/// A planar multigraph together with a tail vertex per edge id.
struct OrientedGraph {
  PlanarMultigraph base;
  std::vector<int> tails;

  [[nodiscard]] int head(int edge_id) const { return base.edge(edge_id).other(tails.at(static_cast<std::size_t>(edge_id))); }
};

struct FaceReport {
  std::size_t sides = 0;
  /// Negative sides (signings) or clockwise edges (orientations).
  std::size_t count = 0;
  bool flat = false;
};

struct FlatnessReport {
  std::vector<FaceReport> faces;
  bool flat = true;
  [[nodiscard]] std::size_t non_flat_count() const;
};

/// Per-face flatness of a signing: faces with 4k sides need an odd number of
/// negative sides, faces with 4k+2 sides an even number. Every face counts,
/// the outer one included.
FlatnessReport check_flat(const SignedGraph& sg);

/// Per-face flatness of an orientation: each face needs an odd number of
/// edges pointing clockwise around it. One face per connected component is
/// exempt (the root used by flat_orientation: the face containing the first
/// dart of that component).
FlatnessReport check_flat(const OrientedGraph& og);

/// Flat signing of a planar bipartite graph. Starts from all-positive signs
/// and pairs non-flat faces along dual BFS paths, flipping every crossed edge.
/// Throws std::invalid_argument for non-bipartite input, a component with an
/// odd number of vertices, or an inconsistent embedding.
SignedGraph flat_signing(const PlanarMultigraph& g);

/// Flat (Kasteleyn) orientation: spanning-forest edges are oriented from
/// parent to child, then each remaining edge is fixed by the face it closes,
/// processing dual-tree leaves first. Throws std::invalid_argument for an
/// inconsistent embedding.
OrientedGraph flat_orientation(const PlanarMultigraph& g);

/// Bipartite adjacency matrix: rows are colour-0 vertices, columns colour-1
/// vertices, entries the signed sum of parallel edge weights. Returns
/// std::nullopt when the colour classes differ in size (no perfect matching).
std::optional<PolyMatrix> bipartite_matrix(const SignedGraph& sg);

/// Unsigned bipartite adjacency matrix of a graph with a bipartition.
std::optional<PolyMatrix> bipartite_matrix(const PlanarMultigraph& g);

/// Skew matrix A with A(i,j) = w(i->j) - w(j->i).
PolyMatrix skew_matrix(const OrientedGraph& og);

/// Symmetric weighted adjacency matrix (oracle use).
PolyMatrix symmetric_matrix(const PlanarMultigraph& g);

}  // namespace planesym
