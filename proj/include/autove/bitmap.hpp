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

#ifndef AUTOVE_BITMAP_HPP_
#define AUTOVE_BITMAP_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace autove {

inline constexpr int kGridSize = 64;
inline constexpr int kPixelCount = kGridSize * kGridSize;

// Raised for phenotypes that cannot be expressed or evaluated.
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 64x64 binary raster, row-major. A value of 1 marks the shape interior.
class Bitmap {
 public:
  Bitmap() { pixels_.fill(0); }

  static Bitmap Filled() {
    Bitmap b;
    b.pixels_.fill(1);
    return b;
  }

  std::uint8_t at(int row, int col) const {
    return pixels_[static_cast<std::size_t>(row * kGridSize + col)];
  }
  void set(int row, int col, bool on) {
    pixels_[static_cast<std::size_t>(row * kGridSize + col)] = on ? 1 : 0;
  }
  bool inside(int row, int col) const {
    return row >= 0 && row < kGridSize && col >= 0 && col < kGridSize &&
           at(row, col) != 0;
  }

  std::span<const std::uint8_t, kPixelCount> pixels() const { return pixels_; }
  std::span<std::uint8_t, kPixelCount> pixels() { return pixels_; }

  int count() const {
    return std::accumulate(pixels_.begin(), pixels_.end(), 0);
  }
  bool empty() const { return count() == 0; }

  friend bool operator==(const Bitmap&, const Bitmap&) = default;

 private:
  std::array<std::uint8_t, kPixelCount> pixels_;
};

inline int hamming_distance(const Bitmap& a, const Bitmap& b) {
  int h = 0;
  auto pa = a.pixels();
  auto pb = b.pixels();
  for (int i = 0; i < kPixelCount; ++i) h += pa[i] != pb[i];
  return h;
}

// Threshold a real-valued grid (e.g. a decoder output) into a bitmap.
inline Bitmap binarize(std::span<const double> values, double threshold = 0.5) {
  if (values.size() != static_cast<std::size_t>(kPixelCount)) {
    throw std::invalid_argument("binarize: expected 4096 values");
  }
  Bitmap b;
  auto px = b.pixels();
  for (int i = 0; i < kPixelCount; ++i) px[i] = values[i] > threshold ? 1 : 0;
  return b;
}

inline std::vector<double> to_reals(const Bitmap& b) {
  auto px = b.pixels();
  return {px.begin(), px.end()};
}

// Clockwise quarter turn in image coordinates (row index grows downwards).
inline Bitmap rotate90(const Bitmap& b) {
  Bitmap out;
  for (int r = 0; r < kGridSize; ++r)
    for (int c = 0; c < kGridSize; ++c)
      out.set(c, kGridSize - 1 - r, b.at(r, c) != 0);
  return out;
}

// Labels 4-connected foreground components; returns one label per pixel
// (-1 for background) and the component count.
inline int label_components(const Bitmap& b, std::vector<int>& labels) {
  labels.assign(kPixelCount, -1);
  int next = 0;
  std::vector<int> stack;
  for (int start = 0; start < kPixelCount; ++start) {
    if (b.pixels()[start] == 0 || labels[start] >= 0) continue;
    labels[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      const int idx = stack.back();
      stack.pop_back();
      const int r = idx / kGridSize;
      const int c = idx % kGridSize;
      constexpr int dr[4] = {-1, 1, 0, 0};
      constexpr int dc[4] = {0, 0, -1, 1};
      for (int k = 0; k < 4; ++k) {
        const int nr = r + dr[k];
        const int nc = c + dc[k];
        if (!b.inside(nr, nc)) continue;
        const int n = nr * kGridSize + nc;
        if (labels[n] >= 0) continue;
        labels[n] = next;
        stack.push_back(n);
      }
    }
    ++next;
  }
  return next;
}

inline int component_count(const Bitmap& b) {
  std::vector<int> labels;
  return label_components(b, labels);
}

// Keeps only the largest 4-connected component (lowest label on ties).
inline Bitmap largest_component(const Bitmap& b) {
  std::vector<int> labels;
  const int n = label_components(b, labels);
  if (n <= 1) return b;
  std::vector<int> sizes(static_cast<std::size_t>(n), 0);
  for (int l : labels)
    if (l >= 0) ++sizes[static_cast<std::size_t>(l)];
  const int keep = static_cast<int>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  Bitmap out;
  for (int i = 0; i < kPixelCount; ++i) out.pixels()[i] = labels[i] == keep;
  return out;
}

// Binary PGM (P5), maxval 255, foreground written as 255.
inline void write_pgm(const std::filesystem::path& path, const Bitmap& b) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << "P5\n" << kGridSize << ' ' << kGridSize << "\n255\n";
  std::array<char, kPixelCount> raw;
  for (int i = 0; i < kPixelCount; ++i)
    raw[i] = static_cast<char>(b.pixels()[i] ? 255 : 0);
  out.write(raw.data(), raw.size());
  if (!out) throw IoError("write failed: " + path.string());
}

inline Bitmap read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  in >> magic >> w >> h >> maxval;
  if (magic != "P5" || w != kGridSize || h != kGridSize || maxval != 255) {
    throw IoError("not a 64x64 P5 bitmap: " + path.string());
  }
  in.get();  // single whitespace before the raster
  std::array<char, kPixelCount> raw;
  in.read(raw.data(), raw.size());
  if (in.gcount() != kPixelCount) throw IoError("truncated: " + path.string());
  Bitmap b;
  for (int i = 0; i < kPixelCount; ++i)
    b.pixels()[i] = static_cast<unsigned char>(raw[i]) >= 128 ? 1 : 0;
  return b;
}

}  // namespace autove

#endif  // AUTOVE_BITMAP_HPP_
