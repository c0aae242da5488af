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

#ifndef AUTOVE_SYMMETRY_FITNESS_HPP_
#define AUTOVE_SYMMETRY_FITNESS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <tuple>
#include <vector>

#include "autove/bitmap.hpp"
#include "autove/shape_gen.hpp"

namespace autove {

inline constexpr int kBoundarySamples = 64;

// Boundary resampled at equally spaced polar angles. `points` are relative to
// the boundary's center of mass in bounding-box-normalized coordinates;
// `center` is that center of mass in the same normalized frame.
struct BoundarySamples {
  std::vector<Point2> points;
  Point2 center;
};

// Foreground pixels with at least one background (or off-grid) 4-neighbour.
inline std::vector<std::array<int, 2>> boundary_pixels(const Bitmap& b) {
  std::vector<std::array<int, 2>> out;
  for (int r = 0; r < kGridSize; ++r) {
    for (int c = 0; c < kGridSize; ++c) {
      if (!b.at(r, c)) continue;
      if (!b.inside(r - 1, c) || !b.inside(r + 1, c) || !b.inside(r, c - 1) ||
          !b.inside(r, c + 1)) {
        out.push_back({c, r});
      }
    }
  }
  return out;
}

// Each sample direction takes the boundary pixel closest in polar angle.
// Offsets from the center of mass are kept as exact integers (scaled by the
// pixel count and the opposite bounding-box extent), so a pixel set that is
// point-symmetric on the grid yields exactly mirrored samples.
inline BoundarySamples extract_boundary(const Bitmap& b) {
  const auto pixels = boundary_pixels(b);
  if (pixels.empty()) throw ShapeError("empty shape");

  std::int64_t xmin = kGridSize, xmax = -1, ymin = kGridSize, ymax = -1;
  std::int64_t sx = 0, sy = 0;
  for (auto [x, y] : pixels) {
    xmin = std::min<std::int64_t>(xmin, x);
    xmax = std::max<std::int64_t>(xmax, x);
    ymin = std::min<std::int64_t>(ymin, y);
    ymax = std::max<std::int64_t>(ymax, y);
    sx += x;
    sy += y;
  }
  const auto n = static_cast<std::int64_t>(pixels.size());
  const std::int64_t wx = std::max<std::int64_t>(xmax - xmin, 1);
  const std::int64_t wy = std::max<std::int64_t>(ymax - ymin, 1);

  // Image rows grow downwards; flip so angles run counter-clockwise.
  struct Offset {
    std::int64_t ex, ey;  // direction in normalized space, integer scaled
    std::int64_t dx, dy;  // n * (pixel - center of mass)
  };
  std::vector<Offset> offsets;
  offsets.reserve(pixels.size());
  bool any_nonzero = false;
  for (auto [x, y] : pixels) {
    const std::int64_t dx = n * x - sx;
    const std::int64_t dy = -(n * y - sy);
    offsets.push_back({dx * wy, dy * wx, dx, dy});
    any_nonzero |= dx != 0 || dy != 0;
  }

  std::array<Point2, kBoundarySamples> dirs;
  for (int k = 0; k < kBoundarySamples / 2; ++k) {
    const double a = 2.0 * std::numbers::pi * k / kBoundarySamples;
    dirs[k] = {std::cos(a), std::sin(a)};
    dirs[k + kBoundarySamples / 2] = {-dirs[k].x, -dirs[k].y};
  }

  const auto to_normalized = [&](const Offset& o) {
    return Point2{2.0 * static_cast<double>(o.dx) / static_cast<double>(n * wx),
                  2.0 * static_cast<double>(o.dy) / static_cast<double>(n * wy)};
  };

  BoundarySamples out;
  out.center = {2.0 * (static_cast<double>(sx) / n - xmin) / wx - 1.0,
                -(2.0 * (static_cast<double>(sy) / n - ymin) / wy - 1.0)};
  out.points.reserve(kBoundarySamples);
  for (const Point2& u : dirs) {
    using Key = std::tuple<double, double, double, double>;
    Key best{std::numeric_limits<double>::infinity(), 0.0, 0.0, 0.0};
    const Offset* pick = &offsets.front();
    for (const Offset& o : offsets) {
      if (any_nonzero && o.dx == 0 && o.dy == 0) continue;
      const double ex = static_cast<double>(o.ex);
      const double ey = static_cast<double>(o.ey);
      const double cross = u.x * ey - u.y * ex;
      const double dot = u.x * ex + u.y * ey;
      // Secondary keys prefer the outer pixel, then a fixed side; all of them
      // are unchanged under reflection through the center.
      const Key key{std::abs(std::atan2(cross, dot)), -(ex * ex + ey * ey),
                    cross, dot};
      if (key < best) {
        best = key;
        pick = &o;
      }
    }
    out.points.push_back(to_normalized(*pick));
  }
  return out;
}

// Sum over opposite sample pairs of the distance between one sample and the
// mirror image of its partner. Zero exactly for point symmetry.
inline double symmetry_error(const BoundarySamples& s) {
  const std::size_t half = s.points.size() / 2;
  double e = 0.0;
  for (std::size_t j = 0; j < half; ++j) e += norm(s.points[j] + s.points[j + half]);
  return e;
}

inline double fitness_from_error(double symmetry_error) {
  return 1.0 / (1.0 + symmetry_error);
}

inline double fitness(const Bitmap& b) {
  return fitness_from_error(symmetry_error(extract_boundary(b)));
}

}  // namespace autove

#endif  // AUTOVE_SYMMETRY_FITNESS_HPP_
