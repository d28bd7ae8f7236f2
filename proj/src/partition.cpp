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

#include "planesym/partition.hpp"

#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace planesym {

PlanePartition::PlanePartition(BoxDims box)
    : box_(box), heights_(static_cast<std::size_t>(box.a) * static_cast<std::size_t>(box.b), 0) {}

PlanePartition::PlanePartition(BoxDims box, std::vector<std::vector<int>> heights) : PlanePartition(box) {
  if (heights.size() != static_cast<std::size_t>(box.a)) throw std::invalid_argument("PlanePartition: wrong row count");
  for (int i = 0; i < box.a; ++i) {
    const auto& row = heights[static_cast<std::size_t>(i)];
    if (row.size() != static_cast<std::size_t>(box.b)) throw std::invalid_argument("PlanePartition: wrong row length");
    for (int j = 0; j < box.b; ++j) set_height(i, j, row[static_cast<std::size_t>(j)]);
  }
  if (!valid()) throw std::invalid_argument("PlanePartition: heights are not a plane partition in B(" + box.to_string() + ")");
}

PlanePartition PlanePartition::full(BoxDims box) {
  PlanePartition p(box);
  std::fill(p.heights_.begin(), p.heights_.end(), box.c);
  return p;
}

std::vector<std::vector<int>> PlanePartition::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(box_.a));
  for (int i = 0; i < box_.a; ++i)
    for (int j = 0; j < box_.b; ++j) out[static_cast<std::size_t>(i)].push_back(height(i, j));
  return out;
}

long PlanePartition::volume() const { return std::accumulate(heights_.begin(), heights_.end(), 0L); }

bool PlanePartition::valid() const {
  for (int i = 0; i < box_.a; ++i) {
    for (int j = 0; j < box_.b; ++j) {
      const int h = height(i, j);
      if (h < 0 || h > box_.c) return false;
      if (i > 0 && height(i - 1, j) < h) return false;
      if (j > 0 && height(i, j - 1) < h) return false;
    }
  }
  return true;
}

std::string PlanePartition::to_json() const { return nlohmann::json(rows()).dump(); }

}  // namespace planesym
