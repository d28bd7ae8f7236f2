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
#include <map>
#include <string>
#include <vector>

#include "planesym/graph.hpp"

namespace planesym {

/// Side lengths of a box B(a, b, c), equivalently of the hexagon H(a, b, c).
struct BoxDims {
  int a = 0;
  int b = 0;
  int c = 0;

  [[nodiscard]] std::array<int, 3> as_array() const { return {a, b, c}; }
  [[nodiscard]] std::string to_string() const;
  auto operator<=>(const BoxDims&) const = default;
};

enum class Orientation { kUp, kDown };

/// A unit triangle of the triangulated hexagon.
///
/// Coordinates are integer lattice coordinates with x + y + z equal to
/// a+b+c-1 for up triangles and a+b+c-2 for down triangles, and
/// 0 <= x <= b+c-1, 0 <= y <= a+c-1, 0 <= z <= a+b-1.
struct TriangleId {
  int x = 0;
  int y = 0;
  int z = 0;

  [[nodiscard]] int operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }
  [[nodiscard]] std::string to_string() const;
  auto operator<=>(const TriangleId&) const = default;
};

/// The triangulated hexagon T(a, b, c).
class HexRegion {
 public:
  explicit HexRegion(BoxDims dims);

  [[nodiscard]] const BoxDims& dims() const { return dims_; }
  /// All triangles in lexicographic (x, y, z) order.
  [[nodiscard]] const std::vector<TriangleId>& triangles() const { return triangles_; }
  [[nodiscard]] std::size_t size() const { return triangles_.size(); }

  /// Inclusive upper bound for each coordinate: (b+c-1, a+c-1, a+b-1).
  [[nodiscard]] std::array<int, 3> bounds() const;
  [[nodiscard]] bool contains(const TriangleId& t) const;
  /// Index of t in triangles(); throws std::out_of_range if t is not in the region.
  [[nodiscard]] int index_of(const TriangleId& t) const;

 private:
  BoxDims dims_;
  std::vector<TriangleId> triangles_;
  std::map<TriangleId, int> index_;
};

/// Builds T(a, b, c). Throws std::invalid_argument on a negative side.
HexRegion build_hexagon(int a, int b, int c);

Orientation orientation(const TriangleId& t, const HexRegion& region);

/// Adjacent triangles inside the region: down triangles gain 1 in one
/// coordinate, up triangles lose 1.
std::vector<TriangleId> neighbors(const TriangleId& t, const HexRegion& region);

/// Axis whose coordinate differs between the endpoints of an edge of Z(a,b,c).
int edge_axis(const TriangleId& s, const TriangleId& t);

/// Planar drawing position (the triangle's centroid projected to the plane).
std::pair<double, double> triangle_position(const TriangleId& t);

/// The matching graph Z(a, b, c): vertex i is region.triangles()[i], colour 0
/// for up triangles and 1 for down triangles, all weights 1, rotation system
/// from the geometric drawing.
PlanarMultigraph build_graph(const HexRegion& region);

/// Axis of the q-weighted edge class: edges joining a down triangle d to
/// d + e_z are the tops of the cube columns.
inline constexpr int kQWeightAxis = 2;

/// Z(a, b, c) with every edge d -> d + e_z weighted q^(d.y) and all other
/// edges weighted 1. Adding one cube multiplies a matching's weight by q.
PlanarMultigraph q_weight_graph(const HexRegion& region);

/// Exponent of the weight of the matching of the empty plane partition in
/// q_weight_graph: b * a(a-1)/2.
long empty_partition_q_exponent(const BoxDims& dims);

}  // namespace planesym
