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

#include <cstddef>
#include <functional>
#include <vector>

#include "planesym/graph.hpp"
#include "planesym/hexgrid.hpp"
#include "planesym/partition.hpp"
#include "planesym/poly.hpp"
#include "planesym/symmetry.hpp"

namespace planesym {

inline constexpr std::size_t kMatchingMaxVertices = 128;

/// Calls visit on every plane partition in B(a, b, c), in lexicographic order
/// of the row-major height sequence. Returning false from visit stops early.
void for_each_partition(const BoxDims& dims, const std::function<bool(const PlanePartition&)>& visit);

/// All plane partitions in B(a, b, c), lexicographic on rows.
std::vector<PlanePartition> enumerate_partitions(const BoxDims& dims);

/// Number of partitions fixed by every generator of the class; 0 when the box
/// is not fixed. Classes containing the complement only search
/// self-complementary height matrices.
BigInt count_symmetric(int class_id, const BoxDims& dims);

/// Sum of q^volume over all partitions in the box.
Poly q_sum(const BoxDims& dims);

/// A set of edge ids, sorted ascending.
struct Matching {
  std::vector<int> edges;
  auto operator<=>(const Matching&) const = default;
};

/// Backtracking over the lowest-id uncovered vertex. With with_bachelors set
/// the graph's bachelorhood vertex may be matched to any subset of its
/// neighbours (including none); every other vertex is covered exactly once.
/// Throws std::length_error above kMatchingMaxVertices.
void for_each_matching(const PlanarMultigraph& g, bool with_bachelors,
                       const std::function<bool(const Matching&)>& visit);

std::vector<Matching> enumerate_matchings(const PlanarMultigraph& g, bool with_bachelors = false);
BigInt count_matchings(const PlanarMultigraph& g, bool with_bachelors = false);

/// Product of the edge weights of a matching.
Poly matching_weight(const PlanarMultigraph& g, const Matching& m);

/// Sum of matching weights over all perfect matchings.
Poly weighted_matching_sum(const PlanarMultigraph& g);

/// Reads off the plane partition of a perfect matching of build_graph(region)
/// from its cube-top lozenges. Throws std::invalid_argument if m is not a
/// perfect matching of that graph.
PlanePartition matching_to_partition(const Matching& m, const HexRegion& region);

}  // namespace planesym
