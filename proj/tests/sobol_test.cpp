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

#include <bit>
#include <cstdint>
#include <set>

#include <gtest/gtest.h>

#include "autove/sobol.hpp"
#include "data/sobol_reference.hpp"

namespace autove {
namespace {

TEST(Sobol, MatchesReferenceTable) {
  const auto pts = sobol_init(16, 64);
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 16; ++j)
      EXPECT_EQ(pts[i][j], kSobolReference[i][j]) << "point " << i << " dim " << j;
}

TEST(Sobol, FirstDimensionIsBitReversedGrayCode) {
  const auto pts = sobol_init(1, 4000);
  EXPECT_EQ(pts[0][0], 0.5);
  EXPECT_EQ(pts[1][0], 0.75);
  EXPECT_EQ(pts[2][0], 0.25);
  for (std::uint32_t n = 1; n <= 4000; ++n) {
    std::uint32_t g = n ^ (n >> 1), r = 0;
    for (int b = 0; b < 32; ++b) r |= ((g >> b) & 1u) << (31 - b);
    ASSERT_EQ(pts[n - 1][0], r / 4294967296.0) << n;
  }
}

TEST(Sobol, PrefixesStratifyEveryDimension) {
  const auto pts = sobol_init(32, 1023);
  for (int k = 1; k <= 10; ++k) {
    const int n = (1 << k) - 1;
    for (int j = 0; j < 32; ++j) {
      std::set<int> cells;
      for (int i = 0; i < n; ++i) cells.insert(static_cast<int>(pts[i][j] * (1 << k)));
      EXPECT_EQ(static_cast<int>(cells.size()), n) << "k " << k << " dim " << j;
      EXPECT_EQ(cells.count(0), 0u);
    }
  }
}

TEST(Sobol, CoordinatesInsideOpenUnitInterval) {
  for (const auto& p : sobol_init(32, 5000))
    for (double v : p) {
      EXPECT_GT(v, 0.0);
      EXPECT_LT(v, 1.0);
    }
}

TEST(Sobol, PrefixIsStableAcrossLengths) {
  const auto a = sobol_init(7, 10);
  const auto b = sobol_init(7, 300);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Sobol, RejectsBadArguments) {
  EXPECT_THROW(sobol_init(33, 4), std::invalid_argument);
  EXPECT_THROW(sobol_init(0, 4), std::invalid_argument);
  EXPECT_THROW(sobol_init(3, 0), std::invalid_argument);
  EXPECT_NO_THROW(sobol_init(32, 1));
}

}  // namespace
}  // namespace autove
