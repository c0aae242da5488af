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

#ifndef AUTOVE_SOBOL_HPP_
#define AUTOVE_SOBOL_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace autove {

inline constexpr int kSobolMaxDim = 32;

namespace detail {

// Joe-Kuo (new-joe-kuo-6.21201) primitive polynomials, including the leading
// and trailing terms, with initial direction numbers m_1..m_s. Row 0 is the
// first dimension, which uses the van der Corput sequence.
struct SobolRow {
  std::uint32_t poly;
  std::array<std::uint32_t, 7> m;
};

inline constexpr std::array<SobolRow, kSobolMaxDim> kJoeKuo = {{
    {1, {1}},
    {3, {1}},
    {7, {1, 3}},
    {11, {1, 3, 1}},
    {13, {1, 1, 1}},
    {19, {1, 1, 3, 3}},
    {25, {1, 3, 5, 13}},
    {37, {1, 1, 5, 5, 17}},
    {41, {1, 1, 5, 5, 5}},
    {47, {1, 1, 7, 11, 19}},
    {55, {1, 1, 5, 1, 1}},
    {59, {1, 1, 1, 3, 11}},
    {61, {1, 3, 5, 5, 31}},
    {67, {1, 3, 3, 9, 7, 49}},
    {91, {1, 1, 1, 15, 21, 21}},
    {97, {1, 3, 1, 13, 27, 49}},
    {103, {1, 1, 1, 15, 7, 5}},
    {109, {1, 3, 1, 15, 13, 25}},
    {115, {1, 1, 5, 5, 19, 61}},
    {131, {1, 3, 7, 11, 23, 15, 103}},
    {137, {1, 3, 7, 13, 13, 15, 69}},
    {143, {1, 1, 3, 13, 7, 35, 63}},
    {145, {1, 3, 5, 9, 1, 25, 53}},
    {157, {1, 3, 1, 13, 9, 35, 107}},
    {167, {1, 3, 1, 5, 27, 61, 31}},
    {171, {1, 1, 5, 11, 19, 41, 61}},
    {185, {1, 3, 5, 3, 3, 13, 69}},
    {191, {1, 1, 7, 13, 1, 19, 1}},
    {193, {1, 3, 7, 5, 13, 19, 59}},
    {203, {1, 1, 3, 9, 25, 29, 41}},
    {211, {1, 3, 5, 13, 23, 1, 55}},
    {213, {1, 3, 7, 3, 13, 59, 17}},
}};

}  // namespace detail

// Unscrambled Sobol sequence in Gray-code order. The first call to next()
// returns the point after the origin.
class SobolSequence {
 public:
  static constexpr int kBits = 32;

  explicit SobolSequence(int dim) : dim_(dim) {
    if (dim < 1 || dim > kSobolMaxDim) {
      throw std::invalid_argument("Sobol dimension must be in [1, 32]");
    }
    directions_.resize(static_cast<std::size_t>(dim));
    state_.assign(static_cast<std::size_t>(dim), 0);
    for (int j = 0; j < dim; ++j) {
      auto& v = directions_[static_cast<std::size_t>(j)];
      if (j == 0) {
        for (int k = 0; k < kBits; ++k) v[k] = 1u << (kBits - 1 - k);
        continue;
      }
      const auto& row = detail::kJoeKuo[static_cast<std::size_t>(j)];
      const int s = std::bit_width(row.poly) - 1;
      const std::uint32_t a = (row.poly >> 1) & ((1u << (s - 1)) - 1u);
      for (int k = 0; k < s; ++k) v[k] = row.m[k] << (kBits - 1 - k);
      for (int k = s; k < kBits; ++k) {
        std::uint32_t x = v[k - s] ^ (v[k - s] >> s);
        for (int i = 1; i < s; ++i)
          if ((a >> (s - 1 - i)) & 1u) x ^= v[k - i];
        v[k] = x;
      }
    }
  }

  int dim() const { return dim_; }

  std::vector<double> next() {
    // Index of the lowest zero bit of the current counter.
    const int c = std::countr_one(index_);
    if (c >= kBits) throw std::out_of_range("Sobol sequence exhausted");
    ++index_;
    std::vector<double> point(static_cast<std::size_t>(dim_));
    for (int j = 0; j < dim_; ++j) {
      auto& x = state_[static_cast<std::size_t>(j)];
      x ^= directions_[static_cast<std::size_t>(j)][c];
      point[static_cast<std::size_t>(j)] = static_cast<double>(x) / 4294967296.0;
    }
    return point;
  }

 private:
  int dim_;
  std::uint32_t index_ = 0;
  std::vector<std::array<std::uint32_t, kBits>> directions_;
  std::vector<std::uint32_t> state_;
};

inline std::vector<std::vector<double>> sobol_init(int dim, int n) {
  if (dim > kSobolMaxDim) throw std::invalid_argument("Sobol dimension above 32");
  if (n < 1) throw std::invalid_argument("sobol_init needs n >= 1");
  SobolSequence seq(dim);
  std::vector<std::vector<double>> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(seq.next());
  return out;
}

}  // namespace autove

#endif  // AUTOVE_SOBOL_HPP_
