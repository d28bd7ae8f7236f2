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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>

#include "planesym/formulas.hpp"
#include "planesym/graph.hpp"
#include "planesym/hexgrid.hpp"
#include "planesym/kasteleyn.hpp"
#include "planesym/oracle.hpp"
#include "planesym/pipeline.hpp"
#include "planesym/symmetry.hpp"

namespace py = pybind11;
using namespace planesym;

namespace {

BoxDims dims_of(const std::tuple<int, int, int>& t) { return {std::get<0>(t), std::get<1>(t), std::get<2>(t)}; }

// Big integers cross the boundary as Python ints via their decimal string.
py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.get_str())); }

std::vector<py::int_> coeffs_to_py(const Poly& p) {
  std::vector<py::int_> out;
  for (const auto& c : p.coeffs()) out.push_back(to_py(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_planesym, m) {
  m.doc() = "Exact enumeration of symmetric plane partitions";

  m.def("n_class", [](int cls, std::tuple<int, int, int> d) { return to_py(n_class(cls, dims_of(d)).value); },
        py::arg("class_id"), py::arg("dims"));
  m.def("n_class_via_ratios", [](int cls, std::tuple<int, int, int> d) { return to_py(n_class_via_ratios(cls, dims_of(d))); },
        py::arg("class_id"), py::arg("dims"));
  m.def("count",
        [](int cls, std::tuple<int, int, int> d, const std::string& method) {
          return to_py(count(cls, dims_of(d), parse_method(method)));
        },
        py::arg("class_id"), py::arg("dims"), py::arg("method") = "formula");
  m.def("q_count", [](std::tuple<int, int, int> d) { return coeffs_to_py(q_count(dims_of(d))); }, py::arg("dims"),
        "Ascending coefficients of the normalized q-determinant.");
  m.def("q_sum", [](std::tuple<int, int, int> d) { return coeffs_to_py(q_sum(dims_of(d))); }, py::arg("dims"));
  m.def("hyperfactorial", [](long n) { return to_py(hyperfactorial(n)); });
  m.def("staggered_hyperfactorial", [](long k, long n) { return to_py(staggered_hyperfactorial(k, n)); });
  m.def("staggered_factorial", [](long k, long n) { return to_py(staggered_factorial(k, n)); });
  m.def("enumerate_partitions", [](std::tuple<int, int, int> d) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& p : enumerate_partitions(dims_of(d))) out.push_back(p.rows());
    return out;
  });
  m.def("export_graph",
        [](const std::string& kind, int cls, std::tuple<int, int, int> d, const std::string& format) {
          if (kind != "z" && kind != "quotient") throw std::invalid_argument("kind must be 'z' or 'quotient'");
          if (format != "dot" && format != "json") throw std::invalid_argument("format must be 'dot' or 'json'");
          const auto region = build_hexagon(std::get<0>(d), std::get<1>(d), std::get<2>(d));
          const PlanarMultigraph g =
              kind == "z" ? build_graph(region) : quotient_graph(region, SymmetryClass::get(cls)).graph;
          return format == "dot" ? to_dot(g) : to_json(g);
        },
        py::arg("kind"), py::arg("class_id"), py::arg("dims"), py::arg("format") = "json");
  m.def("verify",
        [](int max_side, std::vector<int> classes) {
          const auto report = verify(max_side, {classes.begin(), classes.end()}, false);
          return py::make_tuple(report.pass, to_csv(report));
        },
        py::arg("max_side"), py::arg("classes"));
}
