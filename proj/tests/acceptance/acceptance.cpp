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

// Prints one PASS/FAIL line per acceptance criterion and exits nonzero on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "planesym/exactalg.hpp"
#include "planesym/formulas.hpp"
#include "planesym/hexgrid.hpp"
#include "planesym/kasteleyn.hpp"
#include "planesym/oracle.hpp"
#include "planesym/pipeline.hpp"
#include "planesym/symmetry.hpp"
#include "../unit/support.hpp"

using namespace planesym;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::ostringstream failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (pass) failures << what;
    pass = false;
  }
};

std::string box_name(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

PlanarMultigraph without_vertices(const PlanarMultigraph& g, const std::vector<int>& drop) {
  PlanarMultigraph out;
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (std::find(drop.begin(), drop.end(), static_cast<int>(v)) == drop.end())
      index[v] = out.add_vertex(g.label(static_cast<int>(v)));
  for (const auto& e : g.edges()) {
    const int u = index[static_cast<std::size_t>(e.u)];
    const int v = index[static_cast<std::size_t>(e.v)];
    if (u >= 0 && v >= 0) out.add_edge(u, v);
  }
  return out;
}

void three_way_agreement(Outcome& out) {
  for (int id = 1; id <= 10; ++id) {
    const auto cls = SymmetryClass::get(id);
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b)
        for (int c = 0; c <= 4; ++c) {
          if (!cls.fixes({a, b, c})) continue;
          const BigInt f = n_class(id, {a, b, c}).value;
          const BigInt m = count_by_matrix(id, {a, b, c});
          const BigInt o = count_symmetric(id, {a, b, c});
          out.expect(f == m && m == o, "class " + std::to_string(id) + " " + box_name(a, b, c) + ": formula " +
                                           f.get_str() + ", matrix " + m.get_str() + ", oracle " + o.get_str());
        }
  }
}

void specific_values(Outcome& out) {
  struct Case {
    int id;
    BoxDims dims;
    long expected;
  };
  const std::vector<Case> cases{{1, {1, 1, 1}, 2}, {1, {2, 2, 2}, 20}, {3, {2, 2, 2}, 5}, {5, {2, 2, 2}, 4},
                                {9, {2, 2, 2}, 1}, {9, {4, 4, 4}, 4},  {10, {2, 2, 2}, 1}};
  for (const auto& cs : cases) {
    for (Method m : {Method::kFormula, Method::kMatrix, Method::kOracle}) {
      const BigInt v = count(cs.id, cs.dims, m);
      out.expect(v == cs.expected, "N" + std::to_string(cs.id) + box_name(cs.dims.a, cs.dims.b, cs.dims.c) + " by " +
                                       method_name(m) + " = " + v.get_str());
    }
  }
  out.expect(n_class(5, {2, 2, 2}).value == n_class(1, {1, 1, 1}).value * n_class(1, {1, 1, 1}).value,
             "N5(2,2,2) != N1(1,1,1)^2");
}

void permanent_determinant(Outcome& out) {
  const auto check = [&](const PlanarMultigraph& g, const std::string& name) {
    const auto sg = flat_signing(g);
    out.expect(check_flat(sg).flat, name + ": signing not flat");
    const auto signed_m = bipartite_matrix(sg);
    const BigInt matchings = count_matchings(g);
    if (!signed_m) {
      out.expect(matchings == 0, name + ": unbalanced colour classes but matchings exist");
      return;
    }
    const BigInt d = det(to_integer(*signed_m));
    const BigInt p = permanent(to_integer(*bipartite_matrix(g)));
    out.expect(d == p && p == matchings,
               name + ": |det| " + d.get_str() + ", permanent " + p.get_str() + ", matchings " + matchings.get_str());
  };
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        const auto g = build_graph(build_hexagon(a, b, c));
        if (g.vertex_count() > 0) check(g, "Z" + box_name(a, b, c));
      }
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [rows, cols] = testing::random_grid_shape(rng);
    const auto g = testing::random_grid_graph(rng, rows, cols, false);
    out.expect(g.vertex_count() <= 14, "random graph too large");
    check(g, "random graph " + std::to_string(trial));
  }
}

void hafnian_pfaffian(Outcome& out) {
  const auto check_graph = [&](const PlanarMultigraph& g, const std::string& name) {
    const auto og = flat_orientation(g);
    out.expect(check_flat(og).flat, name + ": orientation not flat");
    const auto a = to_integer(skew_matrix(og));
    const BigInt pf = pfaffian_abs(a);
    const BigInt hf = hafnian(to_integer(symmetric_matrix(g)));
    out.expect(a.is_skew() && pf * pf == det(a), name + ": Pf^2 != Det");
    out.expect(pf == hf, name + ": |Pf| " + pf.get_str() + " != Hf " + hf.get_str());
  };
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [rows, cols] = testing::random_grid_shape(rng);
    check_graph(testing::random_grid_graph(rng, rows, cols, trial % 2 == 0), "random graph " + std::to_string(trial));
  }
  for (int id = 1; id <= 10; ++id) {
    const auto cls = SymmetryClass::get(id);
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b)
        for (int c = 1; c <= 4; ++c) {
          if (!cls.fixes({a, b, c})) continue;
          const auto q = quotient_graph(build_hexagon(a, b, c), cls).graph;
          if (q.vertex_count() > 14) continue;
          check_graph(q, "class " + std::to_string(id) + " quotient " + box_name(a, b, c));
        }
  }
  for (std::size_t n = 2; n <= 14; n += 2)
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = testing::random_skew(rng, n, -3, 3);
      const BigInt pf = pfaffian_signed(a);
      out.expect(pf * pf == det_signed(a), "random skew " + std::to_string(n) + "x" + std::to_string(n));
    }
}

void q_enumeration(Outcome& out) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        const Poly det_q = q_count({a, b, c});
        out.expect(det_q == q_sum({a, b, c}), "q-determinant differs from q-sum at " + box_name(a, b, c));
        out.expect(det_q.eval(BigInt(1)) == n_class(1, {a, b, c}).value, "q = 1 differs from N1 at " + box_name(a, b, c));
      }
}

void ratio_identities_check(Outcome& out) {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 1; c <= 6; ++c)
        for (const auto& r : ratio_identities(a, b, c))
          if (r.name == "case1" || r.name == "case5") out.expect(r.pass, r.name + " at " + box_name(a, b, c));
  for (int a = 0; a <= 4; ++a)
    for (const auto& r : ratio_identities(a, a, a))
      if (r.name == "case3" || r.name == "case9") out.expect(r.pass, r.name + " at a = " + std::to_string(a));
  for (int a = 1; a <= 2; ++a) {
    mpq_class observed(count_symmetric(9, {2 * a + 2, 2 * a + 2, 2 * a + 2}), count_symmetric(9, {2 * a, 2 * a, 2 * a}));
    observed.canonicalize();
    out.expect(observed == ratio_case9(a), "case9 oracle ratio at a = " + std::to_string(a) + " is " + observed.get_str());
  }
}

void quotient_lemma(Outcome& out) {
  for (int id = 1; id <= 10; ++id) {
    const auto cls = SymmetryClass::get(id);
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b)
        for (int c = 0; c <= 4; ++c) {
          if (!cls.fixes({a, b, c})) continue;
          const auto q = quotient_graph(build_hexagon(a, b, c), cls);
          const BigInt matchings = count_matchings(q.graph);
          const BigInt invariant = count_symmetric(id, {a, b, c});
          out.expect(matchings == invariant, "class " + std::to_string(id) + " " + box_name(a, b, c) + ": quotient " +
                                                 matchings.get_str() + ", invariant " + invariant.get_str());
        }
  }
}

void parity_gadget(Outcome& out) {
  for (int n = 1; n <= 8; ++n)
    for (Parity parity : {Parity::kOdd, Parity::kEven}) {
      const auto gadget = build_parity_gadget(n, parity);
      out.expect(gadget.attachments.size() == static_cast<std::size_t>(n), "attachment count");
      for (unsigned mask = 0; mask < (1U << n); ++mask) {
        std::vector<int> removed;
        for (int k = 0; k < n; ++k)
          if ((mask >> k) & 1U) removed.push_back(gadget.attachments[static_cast<std::size_t>(k)]);
        const bool odd = removed.size() % 2 == 1;
        const BigInt expected = odd == (parity == Parity::kOdd) ? 1 : 0;
        const BigInt got = count_matchings(without_vertices(gadget.graph, removed));
        out.expect(got == expected, "gadget n=" + std::to_string(n) + (parity == Parity::kOdd ? " odd" : " even") +
                                        " subset " + std::to_string(mask) + ": " + got.get_str() + " matchings");
      }
    }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"three-way agreement, all classes, sides <= 4", three_way_agreement},
      {"specific values", specific_values},
      {"permanent-determinant identity", permanent_determinant},
      {"Hafnian-Pfaffian identity and Pf^2 = Det", hafnian_pfaffian},
      {"q-enumeration", q_enumeration},
      {"ratio identities", ratio_identities_check},
      {"quotient lemma, sides <= 4", quotient_lemma},
      {"parity-gadget contract, up to 8 attachments", parity_gadget},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && out.pass;
    std::printf("criterion %zu: %s - %s (%zu checks, %.2fs)%s%s\n", i + 1, out.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), out.checks, secs, out.pass ? "" : ": ", out.failures.str().c_str());
  }
  return all ? 0 : 1;
}
