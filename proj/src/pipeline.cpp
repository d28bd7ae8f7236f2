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

#include "planesym/pipeline.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "planesym/exactalg.hpp"
#include "planesym/formulas.hpp"
#include "planesym/kasteleyn.hpp"
#include "planesym/oracle.hpp"
#include "planesym/symmetry.hpp"

namespace planesym {

std::string method_name(Method m) {
  switch (m) {
    case Method::kFormula: return "formula";
    case Method::kMatrix: return "matrix";
    case Method::kOracle: return "oracle";
    case Method::kRatios: return "ratios";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  for (Method m : {Method::kFormula, Method::kMatrix, Method::kOracle, Method::kRatios}) {
    if (method_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown method '" + name + "'");
}

namespace {

bool has_odd_component(const PlanarMultigraph& g) {
  int ncomp = 0;
  const auto comp = g.components(&ncomp);
  std::vector<int> size(static_cast<std::size_t>(ncomp), 0);
  for (int c : comp) ++size[static_cast<std::size_t>(c)];
  for (int s : size)
    if (s % 2 == 1) return true;
  return false;
}

BigInt graph_matrix_count(const PlanarMultigraph& g, bool bipartite) {
  if (g.vertex_count() == 0) return 1;
  if (has_odd_component(g)) return 0;
  if (bipartite) {
    const auto m = bipartite_matrix(flat_signing(g));
    if (!m) return 0;
    return det(to_integer(*m));
  }
  return pfaffian_abs(to_integer(skew_matrix(flat_orientation(g))));
}

}  // namespace

BigInt count_by_matrix(int class_id, const BoxDims& dims) {
  const auto cls = SymmetryClass::get(class_id);
  if (!cls.fixes(dims)) return 0;
  const auto q = quotient_graph(build_hexagon(dims.a, dims.b, dims.c), cls);
  return graph_matrix_count(q.graph, cls.bipartite());
}

BigInt count_by_quotient_matchings(int class_id, const BoxDims& dims) {
  const auto cls = SymmetryClass::get(class_id);
  if (!cls.fixes(dims)) return 0;
  return count_matchings(quotient_graph(build_hexagon(dims.a, dims.b, dims.c), cls).graph);
}

Poly q_count(const BoxDims& dims) {
  const auto region = build_hexagon(dims.a, dims.b, dims.c);
  const auto g = q_weight_graph(region);
  if (g.vertex_count() == 0) return 1;
  const auto m = bipartite_matrix(flat_signing(g));
  if (!m) throw std::logic_error("q_count: unbalanced hexagon");
  const Poly d = det(*m);
  const long shift = empty_partition_q_exponent(dims);
  if (d.order() != shift) throw std::logic_error("q_count: lowest term is not the empty partition");
  return d.shift_down(static_cast<std::size_t>(shift)).sign_normalized();
}

BigInt count(int class_id, const BoxDims& dims, Method method) {
  switch (method) {
    case Method::kFormula: return n_class(class_id, dims).value;
    case Method::kMatrix: return count_by_matrix(class_id, dims);
    case Method::kOracle: return count_symmetric(class_id, dims);
    case Method::kRatios: return n_class_via_ratios(class_id, dims);
  }
  throw std::invalid_argument("count: unknown method");
}

std::vector<BoxDims> class_boxes(int class_id, int max_side) {
  const auto cls = SymmetryClass::get(class_id);
  std::vector<BoxDims> out;
  for (int a = 1; a <= max_side; ++a)
    for (int b = 1; b <= max_side; ++b)
      for (int c = 1; c <= max_side; ++c)
        if (cls.fixes({a, b, c})) out.push_back({a, b, c});
  return out;
}

RunReport verify(int max_side, const std::set<int>& classes, bool timing) {
  RunReport report;
  for (int id : classes) {
    for (const auto& dims : class_boxes(id, max_side)) {
      std::vector<Method> methods{Method::kFormula, Method::kMatrix, Method::kOracle};
      const bool ratios = (id == 1 || id == 3 || id == 9) || (id == 5 && dims.a % 2 == 0 && dims.b % 2 == 0 && dims.c % 2 == 0);
      const bool ratio_reachable = id != 9 || dims.a % 2 == 0;
      if (ratios && ratio_reachable) methods.push_back(Method::kRatios);
      std::optional<BigInt> first;
      for (Method m : methods) {
        const auto start = std::chrono::steady_clock::now();
        const BigInt value = count(id, dims, m);
        const auto stop = std::chrono::steady_clock::now();
        const long long micros =
            timing ? std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count() : 0;
        report.records.push_back({id, dims, m, value.get_str(), micros});
        if (!first) {
          first = value;
        } else if (*first != value) {
          report.pass = false;
          report.mismatches.push_back("class " + std::to_string(id) + " (" + dims.to_string() + "): " + method_name(m) +
                                      " gives " + value.get_str() + ", formula gives " + first->get_str());
        }
      }
    }
  }
  return report;
}

std::string to_csv(const RunReport& report) {
  std::ostringstream out;
  out << "class,a,b,c,method,value,micros\n";
  for (const auto& r : report.records) {
    out << r.class_id << ',' << r.dims.a << ',' << r.dims.b << ',' << r.dims.c << ',' << method_name(r.method) << ','
        << r.value << ',' << r.micros << '\n';
  }
  return out.str();
}

}  // namespace planesym
