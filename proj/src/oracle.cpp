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

#include "planesym/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace planesym {

namespace {

bool fill_partition(PlanePartition& p, int cell, const std::function<bool(const PlanePartition&)>& visit) {
  const BoxDims& d = p.box();
  if (cell == d.a * d.b) return visit(p);
  const int i = cell / d.b;
  const int j = cell % d.b;
  int cap = d.c;
  if (i > 0) cap = std::min(cap, p.height(i - 1, j));
  if (j > 0) cap = std::min(cap, p.height(i, j - 1));
  for (int h = 0; h <= cap; ++h) {
    p.set_height(i, j, h);
    if (!fill_partition(p, cell + 1, visit)) return false;
  }
  p.set_height(i, j, 0);
  return true;
}

// Self-complementary candidates: cell k and its mirror a*b-1-k sum to c. Only the
// first half is branched on; validity of the whole matrix is checked at the end.
bool fill_self_complementary(PlanePartition& p, int cell, const std::function<bool(const PlanePartition&)>& visit) {
  const BoxDims& d = p.box();
  const int cells = d.a * d.b;
  const int mirror = cells - 1 - cell;
  if (cell > mirror) return p.valid() ? visit(p) : true;
  const int i = cell / d.b;
  const int j = cell % d.b;
  int cap = d.c;
  if (i > 0) cap = std::min(cap, p.height(i - 1, j));
  if (j > 0) cap = std::min(cap, p.height(i, j - 1));
  for (int h = 0; h <= cap; ++h) {
    if (cell == mirror && 2 * h != d.c) continue;
    p.set_height(i, j, h);
    p.set_height(mirror / d.b, mirror % d.b, d.c - h);
    if (!fill_self_complementary(p, cell + 1, visit)) return false;
  }
  return true;
}

}  // namespace

void for_each_partition(const BoxDims& dims, const std::function<bool(const PlanePartition&)>& visit) {
  if (dims.a < 0 || dims.b < 0 || dims.c < 0) throw std::invalid_argument("for_each_partition: negative side");
  PlanePartition p(dims);
  fill_partition(p, 0, visit);
}

std::vector<PlanePartition> enumerate_partitions(const BoxDims& dims) {
  std::vector<PlanePartition> out;
  for_each_partition(dims, [&](const PlanePartition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

BigInt count_symmetric(int class_id, const BoxDims& dims) {
  const auto cls = SymmetryClass::get(class_id);
  if (!cls.fixes(dims)) return 0;
  unsigned long count = 0;
  const auto visit = [&](const PlanePartition& p) {
    if (std::all_of(cls.generators.begin(), cls.generators.end(),
                    [&](const SymmetryElement& g) { return act_partition(g, p) == p; })) {
      ++count;
    }
    return true;
  };
  const auto& gens = cls.generators;
  if (std::find(gens.begin(), gens.end(), SymmetryElement::complement()) != gens.end()) {
    PlanePartition p(dims);
    fill_self_complementary(p, 0, visit);
  } else {
    for_each_partition(dims, visit);
  }
  return BigInt(count);
}

Poly q_sum(const BoxDims& dims) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(dims.a) * static_cast<std::size_t>(dims.b) *
                                 static_cast<std::size_t>(std::max(dims.c, 0)) + 1,
                             0);
  for_each_partition(dims, [&](const PlanePartition& p) {
    coeffs[static_cast<std::size_t>(p.volume())] += 1;
    return true;
  });
  return Poly(std::move(coeffs));
}

namespace {

struct MatchingSearch {
  const PlanarMultigraph& g;
  int bachelor;
  const std::function<bool(const Matching&)>& visit;
  std::vector<bool> covered;
  std::vector<int> chosen;

  bool run(int from) {
    int v = from;
    const int n = static_cast<int>(g.vertex_count());
    while (v < n && (covered[static_cast<std::size_t>(v)] || v == bachelor)) ++v;
    if (v == n) {
      Matching m{chosen};
      std::sort(m.edges.begin(), m.edges.end());
      return visit(m);
    }
    covered[static_cast<std::size_t>(v)] = true;
    for (int id : g.incident(v)) {
      const int w = g.edge(id).other(v);
      if (w != bachelor && covered[static_cast<std::size_t>(w)]) continue;
      if (w != bachelor) covered[static_cast<std::size_t>(w)] = true;
      chosen.push_back(id);
      const bool go_on = run(v + 1);
      chosen.pop_back();
      if (w != bachelor) covered[static_cast<std::size_t>(w)] = false;
      if (!go_on) {
        covered[static_cast<std::size_t>(v)] = false;
        return false;
      }
    }
    covered[static_cast<std::size_t>(v)] = false;
    return true;
  }
};

}  // namespace

void for_each_matching(const PlanarMultigraph& g, bool with_bachelors,
                       const std::function<bool(const Matching&)>& visit) {
  if (g.vertex_count() > kMatchingMaxVertices) throw std::length_error("for_each_matching: graph over oracle size limit");
  const int bachelor = with_bachelors && g.bachelorhood() ? *g.bachelorhood() : -1;
  MatchingSearch search{g, bachelor, visit, std::vector<bool>(g.vertex_count(), false), {}};
  search.run(0);
}

std::vector<Matching> enumerate_matchings(const PlanarMultigraph& g, bool with_bachelors) {
  std::vector<Matching> out;
  for_each_matching(g, with_bachelors, [&](const Matching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

BigInt count_matchings(const PlanarMultigraph& g, bool with_bachelors) {
  unsigned long count = 0;
  for_each_matching(g, with_bachelors, [&](const Matching&) {
    ++count;
    return true;
  });
  return BigInt(count);
}

Poly matching_weight(const PlanarMultigraph& g, const Matching& m) {
  Poly w = 1;
  for (int id : m.edges) w *= g.edge(id).weight;
  return w;
}

Poly weighted_matching_sum(const PlanarMultigraph& g) {
  Poly total;
  for_each_matching(g, false, [&](const Matching& m) {
    total += matching_weight(g, m);
    return true;
  });
  return total;
}

PlanePartition matching_to_partition(const Matching& m, const HexRegion& region) {
  const BoxDims& d = region.dims();
  const auto& tri = region.triangles();
  const PlanarMultigraph g = build_graph(region);
  std::vector<int> cover(tri.size(), 0);
  // Cube-top lozenges keyed by diagonal i - j, each with its down triangle's x.
  std::map<int, std::vector<int>> tops;
  for (int id : m.edges) {
    if (id < 0 || static_cast<std::size_t>(id) >= g.edge_count()) {
      throw std::invalid_argument("matching_to_partition: edge id out of range");
    }
    const Edge& e = g.edge(id);
    ++cover[static_cast<std::size_t>(e.u)];
    ++cover[static_cast<std::size_t>(e.v)];
    const TriangleId& down = tri[static_cast<std::size_t>(e.v)];
    if (edge_axis(tri[static_cast<std::size_t>(e.u)], down) == kQWeightAxis) tops[down.z - d.b + 1].push_back(down.x);
  }
  if (std::any_of(cover.begin(), cover.end(), [](int k) { return k != 1; })) {
    throw std::invalid_argument("matching_to_partition: not a perfect matching");
  }
  PlanePartition p(d);
  for (auto& [diag, xs] : tops) {
    std::sort(xs.begin(), xs.end());
    int j = std::max(0, -diag);
    for (int x : xs) {
      const int i = diag + j;
      if (i < 0 || i >= d.a || j >= d.b) throw std::logic_error("matching_to_partition: lozenge outside the floor");
      p.set_height(i, j, d.c + j - x);
      ++j;
    }
  }
  if (!p.valid()) throw std::logic_error("matching_to_partition: reconstructed heights are not a plane partition");
  return p;
}

}  // namespace planesym
