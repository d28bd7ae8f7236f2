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

#include "planesym/hexgrid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace planesym {

std::string BoxDims::to_string() const {
  std::ostringstream out;
  out << a << ',' << b << ',' << c;
  return out.str();
}

std::string TriangleId::to_string() const {
  std::ostringstream out;
  out << '(' << x << ',' << y << ',' << z << ')';
  return out.str();
}

HexRegion::HexRegion(BoxDims dims) : dims_(dims) {
  if (dims.a < 0 || dims.b < 0 || dims.c < 0) throw std::invalid_argument("hexagon side lengths must be non-negative");
  const auto bound = bounds();
  const int s = dims.a + dims.b + dims.c;
  for (int x = 0; x <= bound[0]; ++x) {
    for (int y = 0; y <= bound[1]; ++y) {
      for (int sum : {s - 2, s - 1}) {
        const int z = sum - x - y;
        if (z < 0 || z > bound[2]) continue;
        TriangleId t{x, y, z};
        index_.emplace(t, static_cast<int>(triangles_.size()));
        triangles_.push_back(t);
      }
    }
  }
  std::sort(triangles_.begin(), triangles_.end());
  for (std::size_t i = 0; i < triangles_.size(); ++i) index_[triangles_[i]] = static_cast<int>(i);
}

std::array<int, 3> HexRegion::bounds() const {
  return {dims_.b + dims_.c - 1, dims_.a + dims_.c - 1, dims_.a + dims_.b - 1};
}

bool HexRegion::contains(const TriangleId& t) const { return index_.count(t) != 0; }

int HexRegion::index_of(const TriangleId& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) throw std::out_of_range("triangle " + t.to_string() + " is not in H(" + dims_.to_string() + ")");
  return it->second;
}

HexRegion build_hexagon(int a, int b, int c) { return HexRegion(BoxDims{a, b, c}); }

Orientation orientation(const TriangleId& t, const HexRegion& region) {
  (void)region.index_of(t);
  const auto& d = region.dims();
  return t.x + t.y + t.z == d.a + d.b + d.c - 1 ? Orientation::kUp : Orientation::kDown;
}

std::vector<TriangleId> neighbors(const TriangleId& t, const HexRegion& region) {
  const int step = orientation(t, region) == Orientation::kDown ? 1 : -1;
  std::vector<TriangleId> out;
  for (int axis = 0; axis < 3; ++axis) {
    TriangleId n = t;
    (axis == 0 ? n.x : axis == 1 ? n.y : n.z) += step;
    if (region.contains(n)) out.push_back(n);
  }
  return out;
}

int edge_axis(const TriangleId& s, const TriangleId& t) {
  if (s.x != t.x) return 0;
  if (s.y != t.y) return 1;
  return 2;
}

std::pair<double, double> triangle_position(const TriangleId& t) {
  // Unit vectors at 0, 120 and 240 degrees; (1,1,1) projects to the origin.
  const double h = std::sqrt(3.0) / 2.0;
  return {t.x - 0.5 * t.y - 0.5 * t.z, h * t.y - h * t.z};
}

PlanarMultigraph build_graph(const HexRegion& region) {
  PlanarMultigraph g;
  std::vector<int> colors;
  std::vector<std::pair<double, double>> positions;
  for (const auto& t : region.triangles()) {
    g.add_vertex(t.to_string());
    colors.push_back(orientation(t, region) == Orientation::kUp ? 0 : 1);
    positions.push_back(triangle_position(t));
  }
  for (std::size_t i = 0; i < region.size(); ++i) {
    const auto& t = region.triangles()[i];
    if (colors[i] != 1) continue;
    for (const auto& up : neighbors(t, region)) g.add_edge(region.index_of(up), static_cast<int>(i));
  }
  embed_geometric(g, positions);
  g.set_bipartition(std::move(colors));
  return g;
}

PlanarMultigraph q_weight_graph(const HexRegion& region) {
  PlanarMultigraph g = build_graph(region);
  for (const auto& e : g.edges()) {
    const auto& up = region.triangles()[static_cast<std::size_t>(e.u)];
    const auto& down = region.triangles()[static_cast<std::size_t>(e.v)];
    if (edge_axis(up, down) == kQWeightAxis) g.set_weight(e.id, Poly::monomial(static_cast<std::size_t>(down.y)));
  }
  return g;
}

long empty_partition_q_exponent(const BoxDims& dims) {
  return static_cast<long>(dims.b) * dims.a * (dims.a - 1) / 2;
}

}  // namespace planesym
