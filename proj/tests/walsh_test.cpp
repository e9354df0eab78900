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

#include "lhnet/walsh.hpp"

#include <random>

#include <gtest/gtest.h>

#include "lhnet/error.hpp"
#include "support.hpp"

namespace lhnet {
namespace {

TEST(Walsh, ParityMatchesPopcount) {
  for (std::uint64_t x = 0; x < 4096; ++x) {
    EXPECT_EQ(parity(x), std::popcount(x) % 2);
  }
}

TEST(Walsh, AlgebraicFormIsOneMinusTwiceBinary) {
  for (Label k = 0; k < 64; ++k) {
    for (Label x = 0; x < 64; ++x) {
      EXPECT_EQ(walsh_algebraic(k, x), 1 - 2 * walsh_binary(k, x));
    }
  }
}

TEST(Walsh, RowsAreOrthogonal) {
  for (int d = 0; d <= 8; ++d) {
    const Label n = Label{1} << d;
    for (Label j = 0; j < n; ++j) {
      for (Label k = 0; k < n; ++k) {
        std::int64_t dot = 0;
        for (Label x = 0; x < n; ++x) dot += walsh_algebraic(j, x) * walsh_algebraic(k, x);
        ASSERT_EQ(dot, j == k ? static_cast<std::int64_t>(n) : 0) << "n=" << n;
      }
    }
  }
}

TEST(Walsh, ProductIsXorIndex) {
  const Label n = 256;
  for (Label j = 0; j < n; j += 7) {
    for (Label k = 0; k < n; k += 5) {
      for (Label x = 0; x < n; ++x) {
        ASSERT_EQ(walsh_algebraic(j, x) * walsh_algebraic(k, x), walsh_algebraic(j ^ k, x));
      }
    }
  }
}

TEST(Walsh, NonconstantRowsAreBalanced) {
  for (int d = 1; d <= 8; ++d) {
    const Label n = Label{1} << d;
    for (Label k = 1; k < n; ++k) {
      int ones = 0;
      for (Label x = 0; x < n; ++x) ones += walsh_binary(k, x);
      ASSERT_EQ(ones, static_cast<int>(n / 2));
    }
  }
}

TEST(Walsh, FwhtMatchesDirectSum) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> value(-50, 50);
  for (std::size_t n = 1; n <= 256; n *= 2) {
    for (int trial = 0; trial < 5; ++trial) {
      Spectrum f(n);
      for (auto& v : f) v = value(rng);
      ASSERT_EQ(fwht(f), testing::naive_walsh(f)) << "n=" << n;
    }
  }
}

TEST(Walsh, FwhtTwiceScalesByN) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::int64_t> value(-1000, 1000);
  for (std::size_t n = 1; n <= 4096; n *= 2) {
    Spectrum f(n);
    for (auto& v : f) v = value(rng);
    Spectrum g = fwht(fwht(f));
    for (auto& v : g) {
      ASSERT_EQ(v % static_cast<std::int64_t>(n), 0);
      v /= static_cast<std::int64_t>(n);
    }
    ASSERT_EQ(g, f) << "n=" << n;
  }
}

TEST(Walsh, FwhtOfDeltaIsAllOnes) {
  Spectrum f(16, 0);
  f[0] = 1;
  EXPECT_EQ(fwht(f), Spectrum(16, 1));
}

TEST(Walsh, FwhtRejectsNonPowerOfTwo) {
  EXPECT_THROW(fwht(Spectrum(12, 0)), Error);
  EXPECT_THROW(fwht(Spectrum{}), Error);
}

}  // namespace
}  // namespace lhnet
