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

#include "planesym/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace planesym {

bool SymmetryElement::odd() const {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
  return inversions % 2 == 1;
}

std::string SymmetryElement::name() const {
  std::ostringstream out;
  out << '[' << perm[0] << perm[1] << perm[2] << (comp ? "|k" : "") << ']';
  return out.str();
}

SymmetryElement operator*(const SymmetryElement& lhs, const SymmetryElement& rhs) {
  SymmetryElement out;
  for (std::size_t i = 0; i < 3; ++i) out.perm[i] = lhs.perm[static_cast<std::size_t>(rhs.perm[i])];
  out.comp = lhs.comp != rhs.comp;
  return out;
}

bool fixes_box(const SymmetryElement& g, const BoxDims& box) {
  const auto dims = box.as_array();
  std::array<int, 3> image{};
  for (std::size_t i = 0; i < 3; ++i) image[static_cast<std::size_t>(g.perm[i])] = dims[i];
  return image == dims;
}

SymmetryClass SymmetryClass::get(int id) {
  const auto t = SymmetryElement::transpose();
  const auto r = SymmetryElement::rotation();
  const auto k = SymmetryElement::complement();
  switch (id) {
    case 1: return {1, "<e>", {}};
    case 2: return {2, "<tau>", {t}};
    case 3: return {3, "<rho>", {r}};
    case 4: return {4, "<tau,rho>", {t, r}};
    case 5: return {5, "<kappa>", {k}};
    case 6: return {6, "<kappa tau>", {k * t}};
    case 7: return {7, "<kappa,tau>", {k, t}};
    case 8: return {8, "<kappa tau,rho>", {k * t, r}};
    case 9: return {9, "<kappa,rho>", {k, r}};
    case 10: return {10, "<kappa,tau,rho>", {k, t, r}};
    default: throw std::invalid_argument("symmetry class id must be in 1..10, got " + std::to_string(id));
  }
}

bool SymmetryClass::fixes(const BoxDims& box) const {
  return std::all_of(generators.begin(), generators.end(), [&](const auto& g) { return fixes_box(g, box); });
}

bool SymmetryClass::bipartite() const { return id == 1 || id == 3 || id == 6 || id == 8; }

std::vector<SymmetryElement> group_elements(const SymmetryClass& cls) {
  std::set<SymmetryElement> seen{SymmetryElement::identity()};
  std::vector<SymmetryElement> frontier{SymmetryElement::identity()};
  while (!frontier.empty()) {
    const auto g = frontier.back();
    frontier.pop_back();
    for (const auto& gen : cls.generators) {
      const auto h = gen * g;
      if (seen.insert(h).second) frontier.push_back(h);
    }
  }
  return {seen.begin(), seen.end()};
}

TriangleId act_triangle(const SymmetryElement& g, const TriangleId& t, const HexRegion& region) {
  if (!fixes_box(g, region.dims())) {
    throw std::invalid_argument("symmetry " + g.name() + " does not fix H(" + region.dims().to_string() + ")");
  }
  (void)region.index_of(t);
  std::array<int, 3> out{};
  for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(g.perm[static_cast<std::size_t>(i)])] = t[i];
  if (g.comp != g.odd()) {
    const auto bound = region.bounds();
    for (std::size_t i = 0; i < 3; ++i) out[i] = bound[i] - out[i];
  }
  return TriangleId{out[0], out[1], out[2]};
}

PlanePartition act_partition(const SymmetryElement& g, const PlanePartition& pp) {
  const BoxDims box = pp.box();
  if (!fixes_box(g, box)) {
    throw std::invalid_argument("symmetry " + g.name() + " does not fix B(" + box.to_string() + ")");
  }
  PlanePartition out(box);
  for (int i = 0; i < box.a; ++i) {
    for (int j = 0; j < box.b; ++j) {
      for (int k = 0; k < box.c; ++k) {
        std::array<int, 3> cube{i, j, k};
        if (g.comp) {
          if (pp.contains_cube(i, j, k)) continue;
          cube = {box.a - 1 - i, box.b - 1 - j, box.c - 1 - k};
        } else if (!pp.contains_cube(i, j, k)) {
          continue;
        }
        std::array<int, 3> image{};
        for (std::size_t ax = 0; ax < 3; ++ax) image[static_cast<std::size_t>(g.perm[ax])] = cube[ax];
        out.set_height(image[0], image[1], out.height(image[0], image[1]) + 1);
      }
    }
  }
  if (!out.valid()) throw std::logic_error("act_partition: image is not a plane partition");
  return out;
}

ParityGadget build_parity_gadget(int n_attach, Parity parity) {
  if (n_attach < 1) throw std::invalid_argument("build_parity_gadget: need at least one attachment point");
  const int m = parity == Parity::kOdd ? 2 * n_attach - 1 : 2 * n_attach;
  ParityGadget gadget;
  gadget.parity = parity;
  std::vector<std::pair<double, double>> positions;
  for (int i = 0; i < m; ++i) {
    gadget.graph.add_vertex("g" + std::to_string(i + 1));
    // 1-based odd vertices on the top row, even ones below.
    positions.emplace_back(static_cast<double>(i), i % 2 == 0 ? 1.0 : 0.0);
    if (i % 2 == 0) gadget.attachments.push_back(i);
  }
  for (int i = 0; i + 1 < m; ++i) gadget.graph.add_edge(i, i + 1);
  for (int i = 1; i + 2 < m; i += 2) gadget.graph.add_edge(i, i + 2);
  embed_geometric(gadget.graph, positions);
  return gadget;
}

namespace {

// Matchings covering every vertex but `bachelor` (-1 for none), which may take
// any number of partners.
long count_matchings_from(const PlanarMultigraph& g, int bachelor, std::vector<bool>& used) {
  int v = 0;
  const int n = static_cast<int>(g.vertex_count());
  while (v < n && (used[static_cast<std::size_t>(v)] || v == bachelor)) ++v;
  if (v == n) return 1;
  used[static_cast<std::size_t>(v)] = true;
  long total = 0;
  for (int id : g.incident(v)) {
    const int w = g.edge(id).other(v);
    if (w == bachelor) {
      total += count_matchings_from(g, bachelor, used);
      continue;
    }
    if (used[static_cast<std::size_t>(w)]) continue;
    used[static_cast<std::size_t>(w)] = true;
    total += count_matchings_from(g, bachelor, used);
    used[static_cast<std::size_t>(w)] = false;
  }
  used[static_cast<std::size_t>(v)] = false;
  return total;
}

long count_matchings(const PlanarMultigraph& g, int bachelor) {
  std::vector<bool> used(g.vertex_count(), false);
  return count_matchings_from(g, bachelor, used);
}

struct LiftedEdge {
  int edge = -1;   // edge of Z(a,b,c)
  int vertex = -1; // endpoint routed to the bachelorhood, or -1 for an ordinary edge
  auto operator<=>(const LiftedEdge&) const = default;
};

PlanarMultigraph without_last_vertex(const PlanarMultigraph& g) {
  PlanarMultigraph out;
  const int n = static_cast<int>(g.vertex_count()) - 1;
  for (int v = 0; v < n; ++v) out.add_vertex(g.label(v));
  for (const auto& e : g.edges()) out.add_edge(e.u, e.v, e.weight);
  std::vector<std::vector<int>> rotation;
  for (int v = 0; v < n; ++v) rotation.push_back(g.rotation(v));
  out.set_rotation(std::move(rotation));
  if (g.has_bipartition()) out.set_bipartition({g.colors().begin(), g.colors().begin() + n});
  return out;
}

}  // namespace

QuotientGraph quotient_graph(const HexRegion& region, const SymmetryClass& cls) {
  if (!cls.fixes(region.dims())) {
    throw std::invalid_argument("class " + std::to_string(cls.id) + " does not fix B(" + region.dims().to_string() + ")");
  }
  const auto elements = group_elements(cls);
  const PlanarMultigraph z = build_graph(region);
  QuotientGraph result;

  if (elements.size() == 1) {
    result.graph = z;
    result.with_bachelorhood = z;
    result.with_bachelorhood.add_vertex("B");
    result.with_bachelorhood.set_bachelorhood(static_cast<int>(z.vertex_count()));
    return result;
  }

  const int n = static_cast<int>(z.vertex_count());
  const auto& tri = region.triangles();
  std::vector<std::vector<int>> vmap(elements.size(), std::vector<int>(static_cast<std::size_t>(n)));
  for (std::size_t gi = 0; gi < elements.size(); ++gi)
    for (int v = 0; v < n; ++v)
      vmap[gi][static_cast<std::size_t>(v)] = region.index_of(act_triangle(elements[gi], tri[static_cast<std::size_t>(v)], region));

  std::map<std::pair<int, int>, int> edge_of;
  for (const auto& e : z.edges()) edge_of[{std::min(e.u, e.v), std::max(e.u, e.v)}] = e.id;
  auto edge_image = [&](std::size_t gi, int id) {
    const Edge& e = z.edge(id);
    const int a = vmap[gi][static_cast<std::size_t>(e.u)];
    const int b = vmap[gi][static_cast<std::size_t>(e.v)];
    return edge_of.at({std::min(a, b), std::max(a, b)});
  };

  // Reversed edges are rerouted to the bachelorhood through both endpoints.
  std::vector<LiftedEdge> lifted;
  for (const auto& e : z.edges()) {
    bool reversed = false;
    for (std::size_t gi = 0; gi < elements.size() && !reversed; ++gi) {
      reversed = vmap[gi][static_cast<std::size_t>(e.u)] == e.v && vmap[gi][static_cast<std::size_t>(e.v)] == e.u;
    }
    if (reversed) {
      lifted.push_back({e.id, e.u});
      lifted.push_back({e.id, e.v});
    } else {
      lifted.push_back({e.id, -1});
    }
  }
  std::map<LiftedEdge, int> lifted_index;
  for (std::size_t k = 0; k < lifted.size(); ++k) lifted_index[lifted[k]] = static_cast<int>(k);
  auto lifted_image = [&](std::size_t gi, const LiftedEdge& le) {
    LiftedEdge img{edge_image(gi, le.edge), le.vertex < 0 ? -1 : vmap[gi][static_cast<std::size_t>(le.vertex)]};
    return lifted_index.at(img);
  };

  // Drop edges whose stabilizer misses part of an endpoint's stabilizer.
  std::vector<bool> alive(lifted.size(), true);
  for (std::size_t k = 0; k < lifted.size(); ++k) {
    const auto& le = lifted[k];
    const Edge& e = z.edge(le.edge);
    std::vector<int> endpoints;
    if (le.vertex < 0) {
      endpoints = {e.u, e.v};
    } else {
      endpoints = {le.vertex};
    }
    for (std::size_t gi = 0; gi < elements.size() && alive[k]; ++gi) {
      const bool fixes_endpoint = std::any_of(endpoints.begin(), endpoints.end(), [&](int v) {
        return vmap[gi][static_cast<std::size_t>(v)] == v;
      });
      if (fixes_endpoint && lifted_image(gi, le) != static_cast<int>(k)) alive[k] = false;
    }
  }

  // Vertex orbits, numbered by their smallest member.
  std::vector<int> orbit(static_cast<std::size_t>(n), -1);
  std::vector<int> representative;
  for (int v = 0; v < n; ++v) {
    if (orbit[static_cast<std::size_t>(v)] >= 0) continue;
    const int id = static_cast<int>(representative.size());
    representative.push_back(v);
    for (std::size_t gi = 0; gi < elements.size(); ++gi) orbit[static_cast<std::size_t>(vmap[gi][static_cast<std::size_t>(v)])] = id;
  }
  const int orbit_count = static_cast<int>(representative.size());
  const int bachelor = orbit_count;  // provisional index

  // Edge orbits become quotient edges.
  std::vector<std::pair<int, int>> qedges;
  std::vector<bool> done(lifted.size(), false);
  for (std::size_t k = 0; k < lifted.size(); ++k) {
    if (!alive[k] || done[k]) continue;
    for (std::size_t gi = 0; gi < elements.size(); ++gi) done[static_cast<std::size_t>(lifted_image(gi, lifted[k]))] = true;
    const auto& le = lifted[k];
    const Edge& e = z.edge(le.edge);
    if (le.vertex >= 0) {
      qedges.emplace_back(orbit[static_cast<std::size_t>(le.vertex)], bachelor);
    } else if (orbit[static_cast<std::size_t>(e.u)] == orbit[static_cast<std::size_t>(e.v)]) {
      ++result.dropped_loops;
    } else {
      qedges.emplace_back(orbit[static_cast<std::size_t>(e.u)], orbit[static_cast<std::size_t>(e.v)]);
    }
  }

  // Vertices fixed by an orientation-preserving reflection (a conjugate of
  // kappa tau).
  std::vector<bool> reflection_fixed(static_cast<std::size_t>(orbit_count), false);
  for (int o = 0; o < orbit_count; ++o) {
    const int v = representative[static_cast<std::size_t>(o)];
    for (std::size_t gi = 0; gi < elements.size(); ++gi) {
      const auto& g = elements[gi];
      if (g.comp && g.odd() && vmap[gi][static_cast<std::size_t>(v)] == v) reflection_fixed[static_cast<std::size_t>(o)] = true;
    }
  }
  std::vector<std::vector<int>> qincident(static_cast<std::size_t>(orbit_count + 1));
  for (std::size_t k = 0; k < qedges.size(); ++k) {
    qincident[static_cast<std::size_t>(qedges[k].first)].push_back(static_cast<int>(k));
    qincident[static_cast<std::size_t>(qedges[k].second)].push_back(static_cast<int>(k));
  }
  // The fixed vertices form components joined to nothing but the
  // bachelorhood. A component with a unique matching (bachelorhood free) is
  // forced and removed; one with no matching is kept, so the quotient has
  // none either.
  std::vector<bool> removed(static_cast<std::size_t>(orbit_count), false);
  std::vector<bool> seen(static_cast<std::size_t>(orbit_count), false);
  for (int o = 0; o < orbit_count; ++o) {
    if (!reflection_fixed[static_cast<std::size_t>(o)] || seen[static_cast<std::size_t>(o)]) continue;
    std::vector<int> members{o};
    seen[static_cast<std::size_t>(o)] = true;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const int v = members[k];
      for (int qe : qincident[static_cast<std::size_t>(v)]) {
        const auto& [x, y] = qedges[static_cast<std::size_t>(qe)];
        const int w = x == v ? y : x;
        if (w == bachelor) continue;
        if (!reflection_fixed[static_cast<std::size_t>(w)]) {
          throw std::logic_error("quotient_graph: fixed vertices are not cut off from the rest of the quotient");
        }
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    PlanarMultigraph piece;
    for (std::size_t k = 0; k <= members.size(); ++k) piece.add_vertex("");
    const int piece_bachelor = static_cast<int>(members.size());
    auto local = [&](int v) {
      if (v == bachelor) return piece_bachelor;
      return static_cast<int>(std::lower_bound(members.begin(), members.end(), v) - members.begin());
    };
    for (const auto& [x, y] : qedges) {
      const bool inside = std::binary_search(members.begin(), members.end(), x) ||
                          std::binary_search(members.begin(), members.end(), y);
      if (inside) piece.add_edge(local(x), local(y));
    }
    if (count_matchings(piece, piece_bachelor) == 1) {
      for (int v : members) removed[static_cast<std::size_t>(v)] = true;
      result.removed_fixed_vertices += static_cast<int>(members.size());
    }
  }

  // Assemble the quotient with an explicit bachelorhood vertex.
  PlanarMultigraph& qb = result.with_bachelorhood;
  std::vector<int> new_index(static_cast<std::size_t>(orbit_count + 1), -1);
  std::vector<int> colors;
  for (int o = 0; o < orbit_count; ++o) {
    if (removed[static_cast<std::size_t>(o)]) continue;
    const auto& t = tri[static_cast<std::size_t>(representative[static_cast<std::size_t>(o)])];
    new_index[static_cast<std::size_t>(o)] = qb.add_vertex(t.to_string());
    colors.push_back(orientation(t, region) == Orientation::kUp ? 0 : 1);
  }
  const int nonbachelor = static_cast<int>(qb.vertex_count());
  new_index[static_cast<std::size_t>(bachelor)] = qb.add_vertex("B");
  colors.push_back(0);
  qb.set_bachelorhood(nonbachelor);
  for (const auto& [u, v] : qedges) {
    const int nu = new_index[static_cast<std::size_t>(u)];
    const int nv = new_index[static_cast<std::size_t>(v)];
    if (nu < 0 || nv < 0) continue;
    qb.add_edge(nu, nv);
  }
  if (!embed_planar(qb)) throw std::logic_error("quotient_graph: quotient with bachelorhood is not planar");
  if (!qb.euler_ok()) throw std::logic_error("quotient_graph: embedding fails the Euler check");

  const auto& bachelor_rotation = qb.rotation(nonbachelor);
  if (bachelor_rotation.empty()) {
    result.graph = without_last_vertex(qb);
  } else {
    PlanarMultigraph& out = result.graph;
    for (int v = 0; v < nonbachelor; ++v) out.add_vertex(qb.label(v));
    const Parity parity = nonbachelor % 2 == 1 ? Parity::kOdd : Parity::kEven;
    const auto gadget = build_parity_gadget(static_cast<int>(bachelor_rotation.size()), parity);
    for (std::size_t v = 0; v < gadget.graph.vertex_count(); ++v) out.add_vertex("B." + gadget.graph.label(static_cast<int>(v)));
    std::map<int, int> attachment_of_edge;
    for (std::size_t k = 0; k < bachelor_rotation.size(); ++k) {
      attachment_of_edge[bachelor_rotation[k]] = nonbachelor + gadget.attachments[k];
    }
    for (const auto& e : qb.edges()) {
      if (e.v == nonbachelor || e.u == nonbachelor) {
        const int inner = e.u == nonbachelor ? e.v : e.u;
        out.add_edge(inner, attachment_of_edge.at(e.id));
      } else {
        out.add_edge(e.u, e.v);
      }
    }
    for (const auto& e : gadget.graph.edges()) out.add_edge(nonbachelor + e.u, nonbachelor + e.v);
    result.gadget_attachments = static_cast<int>(bachelor_rotation.size());
    if (!embed_planar(out)) throw std::logic_error("quotient_graph: gadget splice is not planar");
  }
  if (!result.graph.euler_ok()) throw std::logic_error("quotient_graph: final embedding fails the Euler check");

  if (cls.bipartite()) {
    colors.pop_back();
    result.graph.set_bipartition(colors);
    if (!result.graph.bipartition_consistent()) throw std::logic_error("quotient_graph: expected a bipartite quotient");
  }
  return result;
}

}  // namespace planesym
