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

#include "planesym/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <json.hpp>

namespace planesym {

int PlanarMultigraph::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  incident_.emplace_back();
  if (!rotation_.empty()) rotation_.emplace_back();
  if (!colors_.empty()) colors_.push_back(0);
  return static_cast<int>(labels_.size()) - 1;
}

int PlanarMultigraph::add_edge(int u, int v, Poly weight) {
  const auto n = static_cast<int>(labels_.size());
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: self-loops are not supported");
  const int id = static_cast<int>(edges_.size());
  edges_.push_back(Edge{u, v, std::move(weight), id});
  incident_[static_cast<std::size_t>(u)].push_back(id);
  incident_[static_cast<std::size_t>(v)].push_back(id);
  rotation_.clear();
  return id;
}

void PlanarMultigraph::set_rotation(std::vector<std::vector<int>> rotation) {
  if (rotation.size() != labels_.size()) throw std::invalid_argument("set_rotation: wrong vertex count");
  for (std::size_t v = 0; v < rotation.size(); ++v) {
    std::vector<int> a = rotation[v];
    std::vector<int> b = incident_[v];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw std::invalid_argument("set_rotation: rotation at vertex " + std::to_string(v) + " does not list its edges");
  }
  rotation_ = std::move(rotation);
}

void PlanarMultigraph::set_weight(int edge_id, Poly weight) {
  edges_.at(static_cast<std::size_t>(edge_id)).weight = std::move(weight);
}

void PlanarMultigraph::set_bipartition(std::vector<int> colors) {
  if (!colors.empty() && colors.size() != labels_.size()) throw std::invalid_argument("set_bipartition: wrong size");
  colors_ = std::move(colors);
}

bool PlanarMultigraph::bipartition_consistent() const {
  if (colors_.size() != vertex_count()) return false;
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return colors_[static_cast<std::size_t>(e.u)] != colors_[static_cast<std::size_t>(e.v)];
  });
}

std::vector<Face> PlanarMultigraph::faces() const {
  if (rotation_.empty() && !edges_.empty()) throw std::logic_error("faces: graph has no rotation system");
  // Position of each edge within the rotation list of each endpoint.
  std::vector<std::array<std::size_t, 2>> pos(edges_.size());
  for (std::size_t v = 0; v < rotation_.size(); ++v) {
    for (std::size_t k = 0; k < rotation_[v].size(); ++k) {
      const Edge& e = edges_[static_cast<std::size_t>(rotation_[v][k])];
      pos[static_cast<std::size_t>(e.id)][e.u == static_cast<int>(v) ? 0 : 1] = k;
    }
  }
  auto dart_index = [&](int edge, int from) { return 2 * edge + (edges_[static_cast<std::size_t>(edge)].u == from ? 0 : 1); };

  std::vector<bool> seen(2 * edges_.size(), false);
  std::vector<Face> result;
  for (std::size_t start = 0; start < seen.size(); ++start) {
    if (seen[start]) continue;
    Face face;
    std::size_t d = start;
    while (!seen[d]) {
      seen[d] = true;
      const Edge& e = edges_[d / 2];
      const int from = (d % 2 == 0) ? e.u : e.v;
      const int to = e.other(from);
      face.darts.push_back(Dart{e.id, from, to});
      // Clockwise neighbour of e at `to`, i.e. its predecessor in ccw order.
      const auto& rot = rotation_[static_cast<std::size_t>(to)];
      const std::size_t k = pos[static_cast<std::size_t>(e.id)][e.u == to ? 0 : 1];
      const int next_edge = rot[(k + rot.size() - 1) % rot.size()];
      d = static_cast<std::size_t>(dart_index(next_edge, to));
    }
    result.push_back(std::move(face));
  }
  return result;
}

std::vector<int> PlanarMultigraph::components(int* count) const {
  std::vector<int> comp(labels_.size(), -1);
  int next = 0;
  for (std::size_t s = 0; s < labels_.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{static_cast<int>(s)};
    comp[s] = next;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int id : incident_[static_cast<std::size_t>(v)]) {
        const int w = edges_[static_cast<std::size_t>(id)].other(v);
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return comp;
}

bool PlanarMultigraph::euler_ok() const {
  int ncomp = 0;
  const auto comp = components(&ncomp);
  std::vector<long> chi(static_cast<std::size_t>(ncomp), 0);
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    chi[static_cast<std::size_t>(comp[v])] += 1;
    if (incident_[v].empty()) chi[static_cast<std::size_t>(comp[v])] += 1;  // the one face around an isolated vertex
  }
  for (const auto& e : edges_) chi[static_cast<std::size_t>(comp[static_cast<std::size_t>(e.u)])] -= 1;
  if (!edges_.empty()) {
    for (const auto& f : faces()) chi[static_cast<std::size_t>(comp[static_cast<std::size_t>(f.darts.front().from)])] += 1;
  }
  return std::all_of(chi.begin(), chi.end(), [](long x) { return x == 2; });
}

void embed_geometric(PlanarMultigraph& g, const std::vector<std::pair<double, double>>& positions) {
  if (positions.size() != g.vertex_count()) throw std::invalid_argument("embed_geometric: wrong position count");
  std::vector<std::vector<int>> rotation(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::pair<double, int>> keyed;
    for (int id : g.incident(static_cast<int>(v))) {
      const auto w = static_cast<std::size_t>(g.edge(id).other(static_cast<int>(v)));
      const double angle = std::atan2(positions[w].second - positions[v].second, positions[w].first - positions[v].first);
      keyed.emplace_back(angle, id);
    }
    std::sort(keyed.begin(), keyed.end());
    for (const auto& [angle, id] : keyed) rotation[v].push_back(id);
  }
  g.set_rotation(std::move(rotation));
}

bool embed_planar(PlanarMultigraph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>,
                                           boost::property<boost::edge_index_t, int>>;
  using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

  const auto n = static_cast<int>(g.vertex_count());
  int extra = 0;
  std::map<std::pair<int, int>, int> seen_pairs;
  std::vector<std::pair<int, int>> simple_edges;  // boost edge index -> endpoints
  std::vector<int> original;                      // boost edge index -> edge id
  for (const auto& e : g.edges()) {
    const auto key = std::minmax(e.u, e.v);
    if (seen_pairs[key]++ == 0) {
      simple_edges.emplace_back(e.u, e.v);
      original.push_back(e.id);
    } else {
      const int mid = n + extra++;
      simple_edges.emplace_back(e.u, mid);
      original.push_back(e.id);
      simple_edges.emplace_back(mid, e.v);
      original.push_back(e.id);
    }
  }
  BoostGraph bg(static_cast<std::size_t>(n + extra));
  for (std::size_t k = 0; k < simple_edges.size(); ++k) {
    boost::add_edge(static_cast<std::size_t>(simple_edges[k].first), static_cast<std::size_t>(simple_edges[k].second),
                    static_cast<int>(k), bg);
  }
  std::vector<std::vector<BoostEdge>> embedding(boost::num_vertices(bg));
  const bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                          boost::boyer_myrvold_params::embedding = embedding.data());
  if (!planar) return false;
  auto index = boost::get(boost::edge_index, bg);
  std::vector<std::vector<int>> rotation(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    for (const auto& be : embedding[static_cast<std::size_t>(v)]) {
      rotation[static_cast<std::size_t>(v)].push_back(original[static_cast<std::size_t>(index[be])]);
    }
  }
  g.set_rotation(std::move(rotation));
  return true;
}

namespace {

nlohmann::ordered_json weight_json(const Poly& w) {
  if (w.is_constant() && w.constant().fits_slong_p()) return w.constant().get_si();
  return w.to_string();
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string to_dot(const PlanarMultigraph& g, const EdgeAnnotation& ann) {
  const bool oriented = ann.kind == EdgeAnnotation::Kind::kOrientation;
  std::ostringstream out;
  out << (oriented ? "digraph" : "graph") << " planesym {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << dot_escape(g.label(static_cast<int>(v))) << "\"];\n";
  }
  for (const auto& e : g.edges()) {
    int u = e.u;
    int v = e.v;
    if (oriented && ann.tails.at(static_cast<std::size_t>(e.id)) != u) std::swap(u, v);
    out << "  " << u << (oriented ? " -> " : " -- ") << v << " [id=" << e.id << ", label=\"" << e.weight.to_string()
        << "\"";
    if (ann.kind == EdgeAnnotation::Kind::kSigns) out << ", sign=" << ann.signs.at(static_cast<std::size_t>(e.id));
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const PlanarMultigraph& g, const EdgeAnnotation& ann) {
  const bool oriented = ann.kind == EdgeAnnotation::Kind::kOrientation;
  nlohmann::ordered_json doc;
  doc["vertices"] = g.labels();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    int u = e.u;
    int v = e.v;
    if (oriented && ann.tails.at(static_cast<std::size_t>(e.id)) != u) std::swap(u, v);
    nlohmann::ordered_json item;
    item["u"] = u;
    item["v"] = v;
    item["w"] = weight_json(e.weight);
    item["id"] = e.id;
    if (ann.kind == EdgeAnnotation::Kind::kSigns) item["sign"] = ann.signs.at(static_cast<std::size_t>(e.id));
    edges.push_back(std::move(item));
  }
  doc["edges"] = std::move(edges);
  if (oriented) doc["oriented"] = true;
  nlohmann::ordered_json rotation = nlohmann::ordered_json::object();
  if (g.has_rotation()) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) rotation[std::to_string(v)] = g.rotation(static_cast<int>(v));
  }
  doc["rotation"] = std::move(rotation);
  if (g.bachelorhood()) doc["bachelorhood"] = *g.bachelorhood();
  return doc.dump(2) + "\n";
}

}  // namespace planesym
