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
#include <optional>
#include <string>
#include <vector>

#include "planesym/poly.hpp"

namespace planesym {

struct Edge {
  int u = 0;
  int v = 0;
  Poly weight = 1;
  int id = 0;

  [[nodiscard]] int other(int w) const { return w == u ? v : u; }
};

/// A directed traversal of an edge: from `from` to the other endpoint.
struct Dart {
  int edge = 0;
  int from = 0;
  int to = 0;
};

/// One face of an embedded graph as the cyclic list of darts bounding it.
/// Darts are oriented with the face on their left.
struct Face {
  std::vector<Dart> darts;
  [[nodiscard]] std::size_t sides() const { return darts.size(); }
};

/// Undirected multigraph with a rotation system (per-vertex counterclockwise
/// order of incident edge ids). Parallel edges are distinct edges.
class PlanarMultigraph {
 public:
  PlanarMultigraph() = default;

  int add_vertex(std::string label);
  int add_edge(int u, int v, Poly weight = 1);

  [[nodiscard]] std::size_t vertex_count() const { return labels_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }
  [[nodiscard]] const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }

  /// Edge ids incident to v, in insertion order.
  [[nodiscard]] const std::vector<int>& incident(int v) const { return incident_.at(static_cast<std::size_t>(v)); }

  [[nodiscard]] const std::vector<int>& rotation(int v) const { return rotation_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] bool has_rotation() const { return !rotation_.empty(); }
  /// Replaces the rotation system. Each list must be a permutation of the
  /// incident edges of its vertex.
  void set_rotation(std::vector<std::vector<int>> rotation);

  void set_weight(int edge_id, Poly weight);

  [[nodiscard]] const std::vector<int>& colors() const { return colors_; }
  [[nodiscard]] bool has_bipartition() const { return colors_.size() == vertex_count(); }
  void set_bipartition(std::vector<int> colors);
  [[nodiscard]] bool bipartition_consistent() const;

  [[nodiscard]] std::optional<int> bachelorhood() const { return bachelorhood_; }
  void set_bachelorhood(std::optional<int> v) { bachelorhood_ = v; }

  /// Traces every face of the rotation system. Requires has_rotation().
  [[nodiscard]] std::vector<Face> faces() const;

  /// Component id of every vertex, numbered from 0 in vertex order.
  [[nodiscard]] std::vector<int> components(int* count = nullptr) const;

  /// True iff V - E + F = 2 for every connected component.
  [[nodiscard]] bool euler_ok() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> colors_;
  std::optional<int> bachelorhood_;
};

/// Sets the rotation system from 2D vertex positions by sorting incident
/// edges counterclockwise by angle. Parallel edges must not occur.
void embed_geometric(PlanarMultigraph& g, const std::vector<std::pair<double, double>>& positions);

/// Computes a planar rotation system with the Boyer-Myrvold algorithm.
/// Parallel edges are handled by subdivision. Returns false if the graph is
/// not planar (the rotation system is then left untouched).
bool embed_planar(PlanarMultigraph& g);

/// Optional per-edge annotation for export.
struct EdgeAnnotation {
  enum class Kind { kNone, kSigns, kOrientation };
  Kind kind = Kind::kNone;
  std::vector<int> signs;        // kSigns: +1 / -1 per edge id
  std::vector<int> tails;        // kOrientation: tail vertex per edge id
};

/// DOT rendering, one line per vertex then one line per edge (sorted by id).
std::string to_dot(const PlanarMultigraph& g, const EdgeAnnotation& ann = {});
/// JSON rendering: {"vertices", "edges":[{"u","v","w","id"}], "rotation"}.
std::string to_json(const PlanarMultigraph& g, const EdgeAnnotation& ann = {});

}  // namespace planesym
