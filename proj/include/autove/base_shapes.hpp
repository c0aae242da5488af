// Copyright 2026 The AutoVE Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUTOVE_BASE_SHAPES_HPP_
#define AUTOVE_BASE_SHAPES_HPP_

#include <array>
#include <stdexcept>
#include <string_view>

#include "autove/shape_gen.hpp"

namespace autove {

// Canonical base genomes for the scale/rotation datasets. Bump the version
// whenever a gene value changes so stored datasets stay comparable.
inline constexpr int kBaseShapesVersion = 1;
inline constexpr int kBaseShapeCount = 5;

struct BaseShape {
  std::string_view name;
  std::array<double, kGeneCount> genes;  // dr0, dtheta0, dr1, dtheta1, ...
};

inline constexpr std::array<BaseShape, kBaseShapeCount> kBaseShapes = {{
    {"near_circle",
     {0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5,
      0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5}},
    // Lobes on the even control points.
    {"four_lobe_star",
     {0.9, 0.5, 0.35, 0.5, 0.9, 0.5, 0.35, 0.5,
      0.9, 0.5, 0.35, 0.5, 0.9, 0.5, 0.35, 0.5}},
    // Corners at 45 degrees, edge midpoints at corner radius / sqrt(2).
    {"squarish",
     {0.5567, 0.5, 0.8333, 0.5, 0.5567, 0.5, 0.8333, 0.5,
      0.5567, 0.5, 0.8333, 0.5, 0.5567, 0.5, 0.8333, 0.5}},
    // Equilateral triangle of circumradius 0.9 with vertices at 90, 210 and
    // 330 degrees; points 5 and 7 swing 15 degrees onto the vertices.
    {"triangular",
     {0.4662, 0.5, 0.4066, 0.5, 0.8889, 0.5, 0.4066, 0.5,
      0.4662, 0.5, 0.4066, 0.1667, 0.3889, 0.5, 0.8889, 0.8333}},
    {"irregular_blob",
     {0.7, 0.3, 0.4, 0.6, 0.55, 0.45, 0.8, 0.7,
      0.35, 0.55, 0.6, 0.4, 0.5, 0.65, 0.45, 0.5}},
}};

inline Genome base_shape(int id) {
  if (id < 0 || id >= kBaseShapeCount) {
    throw std::out_of_range("base shape id must be in [0, 5)");
  }
  return Genome(kBaseShapes[static_cast<std::size_t>(id)].genes);
}

}  // namespace autove

#endif  // AUTOVE_BASE_SHAPES_HPP_
