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

#include "planesym/kasteleyn.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace planesym {

std::size_t FlatnessReport::non_flat_count() const {
  return static_cast<std::size_t>(std::count_if(faces.begin(), faces.end(), [](const FaceReport& f) { return !f.flat; }));
}

namespace {

struct FaceIndex {
  std::vector<Face> faces;
  std::vector<int> face_of_dart;  // indexed 2 * edge + (from == edge.u ? 0 : 1)
};

int dart_slot(const PlanarMultigraph& g, const Dart& d) { return 2 * d.edge + (g.edge(d.edge).u == d.from ? 0 : 1); }

FaceIndex index_faces(const PlanarMultigraph& g) {
  if (!g.has_rotation() && g.edge_count() > 0) throw std::invalid_argument("graph has no rotation system");
  if (!g.euler_ok()) throw std::invalid_argument("rotation system is not a planar embedding (Euler check failed)");
  FaceIndex idx;
  idx.faces = g.faces();
  idx.face_of_dart.assign(2 * g.edge_count(), -1);
  for (std::size_t f = 0; f < idx.faces.size(); ++f)
    for (const auto& d : idx.faces[f].darts) idx.face_of_dart[static_cast<std::size_t>(dart_slot(g, d))] = static_cast<int>(f);
  return idx;
}

/// First face (in trace order) of every component, keyed by component id.
std::vector<int> root_faces(const PlanarMultigraph& g, const FaceIndex& idx, const std::vector<int>& comp, int ncomp) {
  std::vector<int> roots(static_cast<std::size_t>(ncomp), -1);
  for (std::size_t f = 0; f < idx.faces.size(); ++f) {
    const int c = comp[static_cast<std::size_t>(idx.faces[f].darts.front().from)];
    if (roots[static_cast<std::size_t>(c)] < 0) roots[static_cast<std::size_t>(c)] = static_cast<int>(f);
  }
  (void)g;
  return roots;
}

bool signing_face_flat(std::size_t sides, std::size_t negatives) {
  return (sides % 4 == 0) ? (negatives % 2 == 1) : (negatives % 2 == 0);
}

}  // namespace

FlatnessReport check_flat(const SignedGraph& sg) {
  FlatnessReport report;
  for (const auto& face : sg.base.faces()) {
    FaceReport fr;
    fr.sides = face.sides();
    for (const auto& d : face.darts) fr.count += sg.signs.at(static_cast<std::size_t>(d.edge)) < 0 ? 1 : 0;
    fr.flat = signing_face_flat(fr.sides, fr.count);
    report.flat = report.flat && fr.flat;
    report.faces.push_back(fr);
  }
  return report;
}

FlatnessReport check_flat(const OrientedGraph& og) {
  FlatnessReport report;
  const auto faces = og.base.faces();
  int ncomp = 0;
  const auto comp = og.base.components(&ncomp);
  std::vector<bool> root_seen(static_cast<std::size_t>(ncomp), false);
  for (const auto& face : faces) {
    FaceReport fr;
    fr.sides = face.sides();
    for (const auto& d : face.darts) fr.count += og.tails.at(static_cast<std::size_t>(d.edge)) != d.from ? 1 : 0;
    const auto c = static_cast<std::size_t>(comp[static_cast<std::size_t>(face.darts.front().from)]);
    const bool is_root = !root_seen[c];
    root_seen[c] = true;
    fr.flat = is_root || fr.count % 2 == 1;
    report.flat = report.flat && fr.flat;
    report.faces.push_back(fr);
  }
  return report;
}

SignedGraph flat_signing(const PlanarMultigraph& g) {
  if (!g.has_bipartition() || !g.bipartition_consistent()) throw std::invalid_argument("flat_signing: graph is not bipartite");
  int ncomp = 0;
  const auto comp = g.components(&ncomp);
  std::vector<int> comp_size(static_cast<std::size_t>(ncomp), 0);
  for (int c : comp) ++comp_size[static_cast<std::size_t>(c)];
  if (std::any_of(comp_size.begin(), comp_size.end(), [](int s) { return s % 2 == 1; })) {
    throw std::invalid_argument("flat_signing: a component has an odd number of vertices");
  }

  const FaceIndex idx = index_faces(g);
  SignedGraph sg{g, std::vector<int>(g.edge_count(), 1)};
  const std::size_t nf = idx.faces.size();

  std::vector<bool> non_flat(nf, false);
  for (std::size_t f = 0; f < nf; ++f) non_flat[f] = !signing_face_flat(idx.faces[f].sides(), 0);

  // Dual graph: face -> (edge, neighbouring face), skipping bridges.
  std::vector<std::vector<std::pair<int, int>>> dual(nf);
  for (const auto& e : g.edges()) {
    const int f0 = idx.face_of_dart[static_cast<std::size_t>(2 * e.id)];
    const int f1 = idx.face_of_dart[static_cast<std::size_t>(2 * e.id + 1)];
    if (f0 == f1) continue;
    dual[static_cast<std::size_t>(f0)].emplace_back(e.id, f1);
    dual[static_cast<std::size_t>(f1)].emplace_back(e.id, f0);
  }

  for (std::size_t start = 0; start < nf; ++start) {
    if (!non_flat[start]) continue;
    // BFS to the nearest other non-flat face.
    std::vector<int> via_edge(nf, -1);
    std::vector<int> parent(nf, -1);
    std::vector<bool> seen(nf, false);
    std::deque<int> queue{static_cast<int>(start)};
    seen[start] = true;
    int target = -1;
    while (!queue.empty() && target < 0) {
      const int f = queue.front();
      queue.pop_front();
      for (const auto& [edge, h] : dual[static_cast<std::size_t>(f)]) {
        if (seen[static_cast<std::size_t>(h)]) continue;
        seen[static_cast<std::size_t>(h)] = true;
        parent[static_cast<std::size_t>(h)] = f;
        via_edge[static_cast<std::size_t>(h)] = edge;
        if (non_flat[static_cast<std::size_t>(h)]) {
          target = h;
          break;
        }
        queue.push_back(h);
      }
    }
    if (target < 0) throw std::invalid_argument("flat_signing: odd number of non-flat faces in a component");
    for (int f = target; f != static_cast<int>(start); f = parent[static_cast<std::size_t>(f)]) {
      sg.signs[static_cast<std::size_t>(via_edge[static_cast<std::size_t>(f)])] *= -1;
    }
    non_flat[start] = false;
    non_flat[static_cast<std::size_t>(target)] = false;
  }
  return sg;
}

OrientedGraph flat_orientation(const PlanarMultigraph& g) {
  const FaceIndex idx = index_faces(g);
  int ncomp = 0;
  const auto comp = g.components(&ncomp);
  OrientedGraph og{g, std::vector<int>(g.edge_count(), -1)};

  // Spanning forest, oriented parent -> child.
  std::vector<bool> in_tree(g.edge_count(), false);
  std::vector<bool> visited(g.vertex_count(), false);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (visited[s]) continue;
    visited[s] = true;
    std::deque<int> queue{static_cast<int>(s)};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int id : g.incident(v)) {
        const int w = g.edge(id).other(v);
        if (visited[static_cast<std::size_t>(w)]) continue;
        visited[static_cast<std::size_t>(w)] = true;
        in_tree[static_cast<std::size_t>(id)] = true;
        og.tails[static_cast<std::size_t>(id)] = v;
        queue.push_back(w);
      }
    }
  }

  // Dual spanning tree on the remaining edges, rooted at each component's first face.
  const std::size_t nf = idx.faces.size();
  const auto roots = root_faces(g, idx, comp, ncomp);
  std::vector<std::vector<std::pair<int, int>>> dual(nf);
  for (const auto& e : g.edges()) {
    if (in_tree[static_cast<std::size_t>(e.id)]) continue;
    const int f0 = idx.face_of_dart[static_cast<std::size_t>(2 * e.id)];
    const int f1 = idx.face_of_dart[static_cast<std::size_t>(2 * e.id + 1)];
    dual[static_cast<std::size_t>(f0)].emplace_back(e.id, f1);
    dual[static_cast<std::size_t>(f1)].emplace_back(e.id, f0);
  }
  std::vector<int> parent_edge(nf, -1);
  std::vector<bool> reached(nf, false);
  std::vector<int> order;
  for (int r : roots) {
    if (r < 0) continue;
    reached[static_cast<std::size_t>(r)] = true;
    std::deque<int> queue{r};
    while (!queue.empty()) {
      const int f = queue.front();
      queue.pop_front();
      order.push_back(f);
      for (const auto& [edge, h] : dual[static_cast<std::size_t>(f)]) {
        if (reached[static_cast<std::size_t>(h)]) {
          if (parent_edge[static_cast<std::size_t>(f)] != edge) {
            throw std::invalid_argument("flat_orientation: non-tree edges do not form a dual tree");
          }
          continue;
        }
        reached[static_cast<std::size_t>(h)] = true;
        parent_edge[static_cast<std::size_t>(h)] = edge;
        queue.push_back(h);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    throw std::invalid_argument("flat_orientation: dual graph is disconnected");
  }

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto f = static_cast<std::size_t>(*it);
    const int pe = parent_edge[f];
    if (pe < 0) continue;
    std::size_t clockwise = 0;
    const Dart* pe_dart = nullptr;
    for (const auto& d : idx.faces[f].darts) {
      if (d.edge == pe) {
        pe_dart = &d;
        continue;
      }
      const int tail = og.tails[static_cast<std::size_t>(d.edge)];
      if (tail < 0) throw std::logic_error("flat_orientation: face processed before its children");
      if (tail != d.from) ++clockwise;
    }
    // Clockwise means against the counterclockwise trace of the face.
    og.tails[static_cast<std::size_t>(pe)] = clockwise % 2 == 1 ? pe_dart->from : pe_dart->to;
  }
  return og;
}

std::optional<PolyMatrix> bipartite_matrix(const SignedGraph& sg) {
  const auto& g = sg.base;
  if (!g.has_bipartition()) throw std::invalid_argument("bipartite_matrix: graph has no bipartition");
  std::vector<int> row_of(g.vertex_count(), -1);
  std::vector<int> col_of(g.vertex_count(), -1);
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.colors()[v] == 0) {
      row_of[v] = static_cast<int>(row_labels.size());
      row_labels.push_back(g.label(static_cast<int>(v)));
    } else {
      col_of[v] = static_cast<int>(col_labels.size());
      col_labels.push_back(g.label(static_cast<int>(v)));
    }
  }
  if (row_labels.size() != col_labels.size()) return std::nullopt;
  PolyMatrix m(row_labels.size(), col_labels.size());
  for (const auto& e : g.edges()) {
    const int r = row_of[static_cast<std::size_t>(e.u)] >= 0 ? row_of[static_cast<std::size_t>(e.u)] : row_of[static_cast<std::size_t>(e.v)];
    const int c = col_of[static_cast<std::size_t>(e.u)] >= 0 ? col_of[static_cast<std::size_t>(e.u)] : col_of[static_cast<std::size_t>(e.v)];
    if (r < 0 || c < 0) throw std::invalid_argument("bipartite_matrix: edge inside a colour class");
    Poly w = e.weight;
    if (sg.signs.at(static_cast<std::size_t>(e.id)) < 0) w = -w;
    m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) += w;
  }
  m.set_labels(std::move(row_labels), std::move(col_labels));
  return m;
}

std::optional<PolyMatrix> bipartite_matrix(const PlanarMultigraph& g) {
  return bipartite_matrix(SignedGraph{g, std::vector<int>(g.edge_count(), 1)});
}

PolyMatrix skew_matrix(const OrientedGraph& og) {
  const auto& g = og.base;
  PolyMatrix m(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) {
    const auto t = static_cast<std::size_t>(og.tails.at(static_cast<std::size_t>(e.id)));
    const auto h = static_cast<std::size_t>(e.other(static_cast<int>(t)));
    m(t, h) += e.weight;
    m(h, t) -= e.weight;
  }
  m.set_labels(g.labels(), g.labels());
  return m;
}

PolyMatrix symmetric_matrix(const PlanarMultigraph& g) {
  PolyMatrix m(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) {
    m(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)) += e.weight;
    m(static_cast<std::size_t>(e.v), static_cast<std::size_t>(e.u)) += e.weight;
  }
  m.set_labels(g.labels(), g.labels());
  return m;
}

}  // namespace planesym
