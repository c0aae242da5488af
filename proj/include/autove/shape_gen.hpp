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

#ifndef AUTOVE_SHAPE_GEN_HPP_
#define AUTOVE_SHAPE_GEN_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "autove/bitmap.hpp"

namespace autove {

inline constexpr int kGeneCount = 16;
inline constexpr int kControlPointCount = 8;
inline constexpr int kDefaultSamplesPerSegment = 16;

inline constexpr double kRadiusMin = 0.1;
inline constexpr double kRadiusMax = 1.0;
// Each control point may swing a quarter of its pi/4 sector either way.
inline constexpr double kAngularSpan = std::numbers::pi / 4.0;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double norm(Point2 p) { return std::hypot(p.x, p.y); }

// 16 genes in [0,1]. Gene 2i drives the radius of control point i, gene 2i+1
// its angular offset. Out-of-range input is clamped, never stored.
class Genome {
 public:
  Genome() { genes_.fill(0.5); }
  explicit Genome(std::span<const double> genes) {
    if (genes.size() != static_cast<std::size_t>(kGeneCount)) {
      throw std::invalid_argument("genome needs exactly 16 genes");
    }
    for (int i = 0; i < kGeneCount; ++i)
      genes_[i] = std::clamp(genes[i], 0.0, 1.0);
  }
  static Genome Uniform(double value) {
    std::array<double, kGeneCount> g;
    g.fill(value);
    return Genome(g);
  }

  double operator[](int i) const { return genes_[static_cast<std::size_t>(i)]; }
  double radial(int point) const { return (*this)[2 * point]; }
  double angular(int point) const { return (*this)[2 * point + 1]; }
  std::span<const double, kGeneCount> genes() const { return genes_; }

  friend bool operator==(const Genome&, const Genome&) = default;

 private:
  std::array<double, kGeneCount> genes_;
};

struct PolarPoint {
  double radius = 0.0;
  double angle = 0.0;
};

using PolarPolygon = std::array<PolarPoint, kControlPointCount>;
using ControlPolygon = std::array<Point2, kControlPointCount>;

inline PolarPolygon decode_polar(const Genome& g) {
  PolarPolygon out;
  for (int i = 0; i < kControlPointCount; ++i) {
    out[i].angle = 2.0 * std::numbers::pi * i / kControlPointCount +
                   (g.angular(i) - 0.5) * kAngularSpan;
    out[i].radius = kRadiusMin + g.radial(i) * (kRadiusMax - kRadiusMin);
  }
  return out;
}

// Scale radii and rotate all angles; used to span the dataset factors.
inline PolarPolygon transform(PolarPolygon p, double scale, double rotation) {
  for (auto& pt : p) {
    pt.radius *= scale;
    pt.angle += rotation;
  }
  return p;
}

inline ControlPolygon to_cartesian(const PolarPolygon& p) {
  ControlPolygon out;
  for (int i = 0; i < kControlPointCount; ++i) {
    out[i] = {p[i].radius * std::cos(p[i].angle),
              p[i].radius * std::sin(p[i].angle)};
  }
  return out;
}

inline ControlPolygon decode_control_points(const Genome& g) {
  return to_cartesian(decode_polar(g));
}

namespace detail {

// Knot spacing for centripetal parameterization; floored so coincident
// control points do not divide by zero.
inline double knot_step(Point2 a, Point2 b) {
  return std::max(std::sqrt(norm(b - a)), 1e-12);
}

inline Point2 lerp_knots(Point2 a, Point2 b, double ta, double tb, double t) {
  return ((tb - t) / (tb - ta)) * a + ((t - ta) / (tb - ta)) * b;
}

// Barry-Goldman evaluation of the segment p1 -> p2.
inline Point2 catmull_rom(Point2 p0, Point2 p1, Point2 p2, Point2 p3,
                          double u) {
  const double t0 = 0.0;
  const double t1 = t0 + knot_step(p0, p1);
  const double t2 = t1 + knot_step(p1, p2);
  const double t3 = t2 + knot_step(p2, p3);
  const double t = t1 + u * (t2 - t1);
  const Point2 a1 = lerp_knots(p0, p1, t0, t1, t);
  const Point2 a2 = lerp_knots(p1, p2, t1, t2, t);
  const Point2 a3 = lerp_knots(p2, p3, t2, t3, t);
  const Point2 b1 = lerp_knots(a1, a2, t0, t2, t);
  const Point2 b2 = lerp_knots(a2, a3, t1, t3, t);
  return lerp_knots(b1, b2, t1, t2, t);
}

}  // namespace detail

// Closed centripetal Catmull-Rom spline through the control points in order.
// Segment i starts exactly at control point i.
template <std::size_t N>
std::vector<Point2> spline_outline(const std::array<Point2, N>& points,
                                   int samples_per_segment) {
  static_assert(N >= 3);
  if (samples_per_segment < 2) {
    throw std::invalid_argument("spline_outline: samples_per_segment < 2");
  }
  constexpr int n = static_cast<int>(N);
  std::vector<Point2> out;
  out.reserve(N * static_cast<std::size_t>(samples_per_segment));
  for (int i = 0; i < n; ++i) {
    const Point2 p0 = points[(i + n - 1) % n];
    const Point2 p1 = points[i];
    const Point2 p2 = points[(i + 1) % n];
    const Point2 p3 = points[(i + 2) % n];
    out.push_back(p1);
    for (int k = 1; k < samples_per_segment; ++k) {
      out.push_back(detail::catmull_rom(
          p0, p1, p2, p3, static_cast<double>(k) / samples_per_segment));
    }
  }
  return out;
}

// Pixel centers of the 64x64 grid cover the window [-1,1]^2, 32 px per unit.
inline double pixel_center_x(int col) { return -1.0 + (col + 0.5) / 32.0; }
inline double pixel_center_y(int row) { return 1.0 - (row + 0.5) / 32.0; }

// Even-odd scanline fill on pixel centers. Anything outside the window is
// clipped.
inline Bitmap rasterize(std::span<const Point2> outline) {
  std::vector<Point2> distinct;
  for (const Point2& p : outline) {
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) {
      distinct.push_back(p);
      if (distinct.size() >= 3) break;
    }
  }
  if (distinct.size() < 3) throw ShapeError("degenerate shape");

  Bitmap b;
  std::vector<double> crossings;
  const std::size_t n = outline.size();
  for (int row = 0; row < kGridSize; ++row) {
    const double y = pixel_center_y(row);
    crossings.clear();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 a = outline[i];
      const Point2 c = outline[(i + 1) % n];
      if ((a.y > y) == (c.y > y)) continue;
      crossings.push_back(a.x + (y - a.y) * (c.x - a.x) / (c.y - a.y));
    }
    std::sort(crossings.begin(), crossings.end());
    for (std::size_t k = 0; k + 1 < crossings.size(); k += 2) {
      const double x0 = crossings[k];
      const double x1 = crossings[k + 1];
      // Columns whose center lies strictly inside (x0, x1).
      const int c0 = std::max(0, static_cast<int>(std::floor((x0 + 1.0) * 32.0 - 0.5)));
      const int c1 = std::min(kGridSize - 1,
                              static_cast<int>(std::ceil((x1 + 1.0) * 32.0 - 0.5)));
      for (int col = c0; col <= c1; ++col) {
        const double xc = pixel_center_x(col);
        if (xc > x0 && xc < x1) b.set(row, col, true);
      }
    }
  }
  return b;
}

inline Bitmap render_polygon(const ControlPolygon& p,
                             int samples_per_segment = kDefaultSamplesPerSegment) {
  const auto outline = spline_outline(p, samples_per_segment);
  return rasterize(outline);
}

// Thin spikes can fall between pixel centers and split off islands; only the
// largest 4-connected component is kept so every phenotype is one piece.
inline Bitmap express_polygon(const ControlPolygon& p) {
  return largest_component(render_polygon(p));
}

inline Bitmap genome_to_bitmap(const Genome& g) {
  return express_polygon(decode_control_points(g));
}

}  // namespace autove

#endif  // AUTOVE_SHAPE_GEN_HPP_
