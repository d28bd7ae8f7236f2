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

#include <doctest.h>

#include <random>

#include "planesym/exactalg.hpp"
#include "planesym/hexgrid.hpp"
#include "planesym/kasteleyn.hpp"
#include "planesym/oracle.hpp"
#include "planesym/symmetry.hpp"
#include "support.hpp"

using namespace planesym;
using planesym::testing::cycle_graph;
using planesym::testing::random_grid_graph;
using planesym::testing::random_grid_shape;

namespace {

std::size_t negatives(const SignedGraph& sg) {
  return static_cast<std::size_t>(std::count(sg.signs.begin(), sg.signs.end(), -1));
}

BigInt det_count(const PlanarMultigraph& g) {
  const auto m = bipartite_matrix(flat_signing(g));
  return m ? det(to_integer(*m)) : BigInt(0);
}

BigInt pf_count(const PlanarMultigraph& g) { return pfaffian_abs(to_integer(skew_matrix(flat_orientation(g)))); }

PlanarMultigraph single_edge() {
  PlanarMultigraph g;
  g.add_vertex("u");
  g.add_vertex("v");
  g.add_edge(0, 1);
  g.set_rotation({{0}, {0}});
  g.set_bipartition({0, 1});
  return g;
}

}  // namespace

TEST_CASE("check_flat on cycles") {
  const auto c6 = cycle_graph(6);
  const auto r6 = check_flat(SignedGraph{c6, std::vector<int>(6, 1)});
  CHECK(r6.flat);
  CHECK(r6.faces.size() == 2);

  const auto c4 = cycle_graph(4);
  const auto r4 = check_flat(SignedGraph{c4, std::vector<int>(4, 1)});
  CHECK_FALSE(r4.flat);
  // On the sphere the 4-cycle has two faces, inside and outside, both 4-sided.
  CHECK(r4.non_flat_count() == 2);
  CHECK(r4.faces[0].sides == 4);
}

TEST_CASE("flat_signing examples") {
  const auto c6 = cycle_graph(6);
  CHECK(negatives(flat_signing(c6)) == 0);

  const auto s4 = flat_signing(cycle_graph(4));
  CHECK((negatives(s4) == 1 || negatives(s4) == 3));
  CHECK(check_flat(s4).flat);

  const auto q3 = quotient_graph(build_hexagon(2, 2, 2), SymmetryClass::get(3)).graph;
  CHECK(check_flat(flat_signing(q3)).flat);
  CHECK(det_count(q3) == 5);

  PlanarMultigraph triangle;
  for (int i = 0; i < 3; ++i) triangle.add_vertex(std::to_string(i));
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(2, 0);
  embed_planar(triangle);
  CHECK_THROWS_AS(flat_signing(triangle), std::invalid_argument);

  PlanarMultigraph path3;
  for (int i = 0; i < 3; ++i) path3.add_vertex(std::to_string(i));
  path3.add_edge(0, 1);
  path3.add_edge(1, 2);
  embed_planar(path3);
  path3.set_bipartition({0, 1, 0});
  CHECK_THROWS_AS(flat_signing(path3), std::invalid_argument);
}

TEST_CASE("flat_orientation examples") {
  const auto e = single_edge();
  const auto oe = flat_orientation(e);
  CHECK(check_flat(oe).flat);
  CHECK(skew_matrix(oe) == to_integer(skew_matrix(oe)).map([](const BigInt& x) { return Poly(x); }));
  CHECK(pfaffian_abs(to_integer(skew_matrix(oe))) == 1);

  const auto c6 = cycle_graph(6);
  const auto o6 = flat_orientation(c6);
  CHECK(check_flat(o6).flat);
  // The non-root face of the cycle sees an odd number of clockwise edges.
  const auto report = check_flat(o6);
  CHECK(std::any_of(report.faces.begin(), report.faces.end(), [](const FaceReport& f) { return f.count % 2 == 1; }));
  CHECK(pf_count(c6) == 2);

  const auto q5 = quotient_graph(build_hexagon(2, 2, 2), SymmetryClass::get(5)).graph;
  CHECK(check_flat(flat_orientation(q5)).flat);
  CHECK(pf_count(q5) == 4);
}

TEST_CASE("matrix builders") {
  const auto m6 = bipartite_matrix(cycle_graph(6));
  REQUIRE(m6);
  CHECK(m6->rows() == 3);
  CHECK(permanent(to_integer(*m6)) == 2);
  CHECK(det(to_integer(*m6)) == 2);

  const auto me = bipartite_matrix(single_edge());
  REQUIRE(me);
  CHECK(abs(det_signed(to_integer(*me))) == 1);

  const auto oe = flat_orientation(single_edge());
  const auto a = to_integer(skew_matrix(oe));
  CHECK(a.is_skew());
  CHECK(abs(a(0, 1)) == 1);

  // Unequal colour classes: no perfect matching.
  PlanarMultigraph star;
  for (int i = 0; i < 4; ++i) star.add_vertex(std::to_string(i));
  for (int i = 1; i < 4; ++i) star.add_edge(0, i);
  embed_planar(star);
  star.set_bipartition({0, 1, 1, 1});
  CHECK_FALSE(bipartite_matrix(star).has_value());

  // Odd path: skew matrix of odd size, Pfaffian 0.
  PlanarMultigraph path3;
  for (int i = 0; i < 3; ++i) path3.add_vertex(std::to_string(i));
  path3.add_edge(0, 1);
  path3.add_edge(1, 2);
  embed_planar(path3);
  CHECK(pfaffian_abs(to_integer(skew_matrix(flat_orientation(path3)))) == 0);

  // Parallel edges add up.
  PlanarMultigraph doubled;
  doubled.add_vertex("u");
  doubled.add_vertex("v");
  doubled.add_edge(0, 1);
  doubled.add_edge(0, 1, 3);
  embed_planar(doubled);
  doubled.set_bipartition({0, 1});
  CHECK(to_integer(*bipartite_matrix(doubled))(0, 0) == 4);
  CHECK(to_integer(symmetric_matrix(doubled))(1, 0) == 4);
}

TEST_CASE("permanent-determinant identity on Z(a,b,c), sides up to 3") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        const auto g = build_graph(build_hexagon(a, b, c));
        if (g.vertex_count() == 0) continue;
        const auto sg = flat_signing(g);
        CHECK(check_flat(sg).flat);
        const auto signed_m = to_integer(*bipartite_matrix(sg));
        const auto plain_m = to_integer(*bipartite_matrix(g));
        CHECK(det(signed_m) == permanent(plain_m));
        CHECK(det(signed_m) == count_matchings(g));
      }
}

TEST_CASE("random planar bipartite graphs") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [rows, cols] = random_grid_shape(rng);
    const auto g = random_grid_graph(rng, rows, cols, false);
    const auto all_positive = check_flat(SignedGraph{g, std::vector<int>(g.edge_count(), 1)});
    CHECK(all_positive.non_flat_count() % 2 == 0);
    const auto sg = flat_signing(g);
    CHECK(check_flat(sg).flat);
    const auto m = bipartite_matrix(sg);
    const BigInt count = count_matchings(g);
    if (!m) {
      CHECK(count == 0);
      continue;
    }
    CHECK(det(to_integer(*m)) == permanent(to_integer(*bipartite_matrix(g))));
    CHECK(det(to_integer(*m)) == count);
  }
}

TEST_CASE("Hafnian-Pfaffian identity on random planar graphs") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [rows, cols] = random_grid_shape(rng);
    const auto g = random_grid_graph(rng, rows, cols, trial % 2 == 0);
    const auto og = flat_orientation(g);
    CHECK(check_flat(og).flat);
    const auto a = to_integer(skew_matrix(og));
    CHECK(a.is_skew());
    const BigInt pf = pfaffian_abs(a);
    CHECK(pf * pf == det(a));
    CHECK(pf == hafnian(to_integer(symmetric_matrix(g))));
    CHECK(pf == count_matchings(g));
  }
}
