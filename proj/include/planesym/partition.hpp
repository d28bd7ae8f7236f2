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

#include <string>
#include <vector>

#include "planesym/hexgrid.hpp"

namespace planesym {

/// A plane partition in the box B(a, b, c), stored as an a x b height matrix
/// with entries in [0, c], weakly decreasing along rows and columns.
class PlanePartition {
 public:
  PlanePartition() = default;
  /// The empty partition in the given box.
  explicit PlanePartition(BoxDims box);
  /// Throws std::invalid_argument unless heights form a valid partition.
  PlanePartition(BoxDims box, std::vector<std::vector<int>> heights);

  static PlanePartition full(BoxDims box);

  [[nodiscard]] const BoxDims& box() const { return box_; }
  [[nodiscard]] int height(int i, int j) const { return heights_[static_cast<std::size_t>(i * box_.b + j)]; }
  void set_height(int i, int j, int h) { heights_[static_cast<std::size_t>(i * box_.b + j)] = h; }
  [[nodiscard]] std::vector<std::vector<int>> rows() const;

  /// Number of cubes.
  [[nodiscard]] long volume() const;
  [[nodiscard]] bool contains_cube(int i, int j, int k) const { return k < height(i, j); }
  [[nodiscard]] bool valid() const;

  /// JSON array of arrays of heights.
  [[nodiscard]] std::string to_json() const;

  auto operator<=>(const PlanePartition&) const = default;

 private:
  BoxDims box_;
  std::vector<int> heights_;
};

}  // namespace planesym
