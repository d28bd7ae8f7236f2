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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "planesym/hexgrid.hpp"
#include "planesym/poly.hpp"

namespace planesym {

enum class Method { kFormula, kMatrix, kOracle, kRatios };

std::string method_name(Method m);
/// Parses "formula", "matrix", "oracle" or "ratios"; throws std::invalid_argument otherwise.
Method parse_method(const std::string& name);

/// Kasteleyn count of the quotient graph: |det| of a flat-signed bipartite
/// matrix for the bipartite classes, |Pf| of a flat-oriented skew matrix
/// otherwise. Boxes not fixed by the class give 0.
BigInt count_by_matrix(int class_id, const BoxDims& dims);

/// Brute-force perfect matchings of the quotient graph.
BigInt count_by_quotient_matchings(int class_id, const BoxDims& dims);

/// Normalized q-determinant of q_weight_graph: the determinant of the
/// flat-signed weighted bipartite matrix divided by the weight of the empty
/// partition's matching, with positive coefficients.
Poly q_count(const BoxDims& dims);

/// Dispatch over the four counting routes. Throws std::invalid_argument when
/// the method does not support the class.
BigInt count(int class_id, const BoxDims& dims, Method method);

struct RunRecord {
  int class_id = 1;
  BoxDims dims;
  Method method = Method::kFormula;
  std::string value;
  long long micros = 0;
};

struct RunReport {
  std::vector<RunRecord> records;
  bool pass = true;
  /// Human-readable description of each disagreeing cell.
  std::vector<std::string> mismatches;
};

/// Boxes with sides in [1, max_side] fixed by the class, in lexicographic order.
std::vector<BoxDims> class_boxes(int class_id, int max_side);

/// Three-way agreement harness: formula, matrix and oracle (plus ratios where
/// the class has a recurrence) for every class and box. With timing off every
/// elapsed time is reported as 0 so the output is byte-stable.
RunReport verify(int max_side, const std::set<int>& classes, bool timing = true);

/// CSV with header class,a,b,c,method,value,micros.
std::string to_csv(const RunReport& report);

}  // namespace planesym
