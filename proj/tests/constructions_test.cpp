// Copyright 2026 The lhnet Authors
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

#include "lhnet/constructions.hpp"

#include <random>

#include <gtest/gtest.h>

#include "lhnet/bisection.hpp"
#include "lhnet/error.hpp"
#include "lhnet/graph.hpp"
#include "support.hpp"

namespace lhnet {
namespace {

TEST(HighDensity, Ladder) {
  EXPECT_EQ(HdParams::ladder(3), (std::vector<int>{4, 6, 7}));
  EXPECT_EQ(HdParams::ladder(5), (std::vector<int>{16, 24, 28, 30, 31}));
  EXPECT_THROW(lh_hd({5, 20}), Error);
}

TEST(HighDensity, HopsCountDownFromNMinusOne) {
  EXPECT_EQ(lh_hd({6, 32}).hops().front(), 0x3Fu);
  EXPECT_EQ(lh_hd({6, 32}).hops().back(), 0x20u);
}

TEST(HighDensity, DiagonalizedSixCube) {
  const std::vector<Label> expected = {
      0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x07, 0x0B, 0x0D, 0x0E, 0x13,
      0x15, 0x16, 0x19, 0x1A, 0x1C, 0x1F, 0x23, 0x25, 0x26, 0x29, 0x2A,
      0x2C, 0x2F, 0x31, 0x32, 0x34, 0x37, 0x38, 0x3B, 0x3D, 0x3E};
  EXPECT_EQ(lh_hd({6, 32}, true), GeneratorSet(6, expected));
}

// b = floor((m+1)/2), diameter 2, and exactly m nodes at one hop.
TEST(HighDensity, MeasuredMetrics) {
  for (int d = 2; d <= 8; ++d) {
    const std::uint64_t n = std::uint64_t{1} << d;
    for (int m : HdParams::ladder(d)) {
      const GeneratorSet s = lh_hd({d, m});
      EXPECT_EQ(bisection_fwht(s).b, static_cast<std::uint32_t>((m + 1) / 2)) << d << "," << m;
      const DistanceProfile p = distance_profile(s);
      if (m < static_cast<int>(n) - 1) {
        EXPECT_EQ(p.diameter, 2);
        EXPECT_EQ(p.total_hops, 2 * n - 2 - static_cast<std::uint64_t>(m));
      } else {
        EXPECT_EQ(p.diameter, 1);
      }
    }
  }
}

TEST(HighDensity, Reduced) {
  const GeneratorSet hd = lh_hd({4, 8});
  const GeneratorSet r1 = lh_hd_reduced(hd, 1);
  const GeneratorSet r2 = lh_hd_reduced(hd, 2);
  EXPECT_EQ(r1.size(), 7u);
  EXPECT_EQ(r2.size(), 6u);
  EXPECT_EQ(bisection_fwht(r1).b, 3u);
  EXPECT_EQ(bisection_fwht(r2).b, 2u);
  EXPECT_THROW(lh_hd_reduced(hd, 0), Error);
  EXPECT_THROW(lh_hd_reduced(hd, 3), Error);
}

// b drops by r, except that two hops off m = n-2 leave the m = n-4 set,
// whose b is only one lower.
TEST(HighDensity, ReducedBisectionDropsByR) {
  for (int d = 3; d <= 8; ++d) {
    const int n = 1 << d;
    for (int m : HdParams::ladder(d)) {
      const GeneratorSet hd = lh_hd({d, m});
      const std::uint32_t b = bisection_fwht(hd).b;
      for (int r = 1; r <= 2; ++r) {
        if (m - r < d) continue;
        const std::uint32_t drop = r == 2 && m == n - 2 ? 1 : static_cast<std::uint32_t>(r);
        EXPECT_EQ(bisection_fwht(lh_hd_reduced(hd, r)).b, b - drop) << d << "," << m << "," << r;
      }
    }
  }
}

TEST(CubeAugmentation, LengthTable) {
  for (int d = 3; d <= 57; ++d) {
    const int expected = d <= 4 ? 3 : d <= 11 ? 4 : d <= 26 ? 5 : 6;
    EXPECT_EQ(b3_augmentation_length(d), expected) << d;
  }
  EXPECT_THROW(b3_augmentation_length(2), Error);
  EXPECT_THROW(b3_augmentation_length(58), Error);
}

TEST(CubeAugmentation, FourCubeColumns) {
  const std::vector<Label> columns = {5, 7, 3, 6};
  const GeneratorSet s = low_density_b3_with_columns(4, columns);
  EXPECT_EQ(s, GeneratorSet(4, {1, 2, 4, 8, 7, 0xE, 0xB}));
  EXPECT_EQ(bisection_fwht(s).b, 3u);
}

TEST(CubeAugmentation, RejectsBadColumns) {
  const std::vector<Label> repeated = {5, 5, 3, 6};
  EXPECT_THROW(low_density_b3_with_columns(4, repeated), Error);
  const std::vector<Label> light = {1, 7, 3, 6};
  EXPECT_THROW(low_density_b3_with_columns(4, light), Error);
}

TEST(CubeAugmentation, BisectionIsThree) {
  for (int d = 3; d <= 12; ++d) {
    const GeneratorSet s = low_density_b3(d);
    EXPECT_EQ(static_cast<int>(s.size()), d + b3_augmentation_length(d));
    EXPECT_EQ(bisection_fwht(s).b, 3u) << d;
    for (int i = 0; i < d; ++i) EXPECT_EQ(s[static_cast<std::size_t>(i)], Label{1} << i);
  }
}

TEST(CubeAugmentation, SeededChoiceIsDeterministic) {
  for (int d = 4; d <= 10; ++d) {
    const GeneratorSet a = low_density_b3(d, 99);
    EXPECT_EQ(a, low_density_b3(d, 99));
    EXPECT_EQ(bisection_fwht(a).b, 3u);
  }
}

TEST(OddAugmentation, HammingGetsParityHop) {
  const GeneratorSet s(4, {1, 2, 4, 8, 7, 0xE, 0xB});
  const GeneratorSet t = augment_odd_b(s);
  EXPECT_EQ(t.size(), 8u);
  EXPECT_EQ(t.hops().back(), 0xDu);
  EXPECT_EQ(bisection_fwht(t).b, 4u);
}

TEST(OddAugmentation, RaisesBByOne) {
  for (int d = 3; d <= 12; ++d) {
    const GeneratorSet s = low_density_b3(d);
    EXPECT_EQ(bisection_fwht(augment_odd_b(s)).b, 4u) << d;
  }
  EXPECT_EQ(bisection_fwht(augment_odd_b(hypercube(6))).b, 2u);
}

// With odd b the hop XOR is never 0 (every cut would be even), so the
// substitution path is reached only when the XOR is already a hop.
TEST(OddAugmentation, SubstitutesWhenXorIsTaken) {
  for (const GeneratorSet& s : {GeneratorSet(4, {1, 2, 4, 7, 8}),
                                GeneratorSet(5, {1, 2, 4, 8, 0x10, 0x1E})}) {
    const std::uint32_t b = bisection_fwht(s).b;
    ASSERT_EQ(b % 2, 1u);
    const GeneratorSet t = augment_odd_b(s);
    EXPECT_EQ(t.size(), s.size() + 1);
    EXPECT_EQ(bisection_fwht(t).b, b + 1);
  }
  // First hop replaced by the first value that keeps b: 1 -> 3, then 3^2^4^7^8 = A.
  EXPECT_EQ(augment_odd_b(GeneratorSet(4, {1, 2, 4, 7, 8})), GeneratorSet(4, {3, 2, 4, 7, 8, 0xA}));
}

TEST(OddAugmentation, RejectsEvenB) {
  EXPECT_THROW(augment_odd_b(GeneratorSet(3, {1, 2, 4, 7})), Error);
  EXPECT_THROW(augment_odd_b(GeneratorSet(2, {1, 2, 3})), Error);
}

TEST(Families, FoldedCubeAndMesh) {
  for (int d = 2; d <= 10; ++d) {
    const GeneratorSet f = folded_cube(d);
    EXPECT_EQ(f.hops().back(), (Label{1} << d) - 1);
    // Weight-1 and weight-2 Walsh indices both cut exactly two hops.
    EXPECT_EQ(bisection_fwht(f).b, 2u) << d;
  }
  const GeneratorSet mesh = full_mesh(4);
  EXPECT_EQ(mesh.size(), 15u);
  EXPECT_EQ(bisection_fwht(mesh).b, 8u);
  EXPECT_EQ(distance_profile(mesh).diameter, 1);
}

TEST(GreedyExtension, BNeverDecreasesAndMatchesBruteForce) {
  const auto chain = greedy_extension(hypercube(4), 15);
  ASSERT_EQ(chain.size(), 11u);
  std::uint32_t prev = 1;
  for (const GeneratorSet& s : chain) {
    const BisectionReport r = bisection_fwht(s);
    EXPECT_GE(r.b, prev);
    EXPECT_EQ(r.B, brute_force_bisection(s));
    prev = r.b;
  }
  EXPECT_EQ(prev, 8u);
}

TEST(Secondary, ImprovesOrKeepsDiameter) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const GeneratorSet s = testing::random_spanning_set(7, 9, rng);
    const int before = distance_profile(s).diameter;
    const std::uint32_t b = bisection_fwht(s).b;
    const GeneratorSet t = optimize_secondary(s);
    EXPECT_EQ(t.size(), s.size());
    EXPECT_LE(distance_profile(t).diameter, before);
    EXPECT_GE(bisection_fwht(t).b, b);
  }
}

TEST(Secondary, AverageObjective) {
  std::mt19937_64 rng(42);
  const GeneratorSet s = testing::random_spanning_set(6, 7, rng);
  SecondaryOptions opts;
  opts.objective = SecondaryObjective::kAverageHops;
  const GeneratorSet t = optimize_secondary(s, opts);
  EXPECT_LE(distance_profile(t).total_hops, distance_profile(s).total_hops);
  opts.depth = 3;
  EXPECT_THROW(optimize_secondary(s, opts), Error);
}

}  // namespace
}  // namespace lhnet
