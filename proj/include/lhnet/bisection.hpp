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

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lhnet/generator_set.hpp"
#include "lhnet/walsh.hpp"

namespace lhnet {

/// Balanced +1/-1 labeling of the n nodes, with the first component +1.
class PartitionVector {
 public:
  // Throws Error unless every entry is +1/-1 and exactly half are +1. A
  // vector starting with -1 is flipped, which leaves every cut unchanged.
  explicit PartitionVector(std::vector<std::int8_t> signs);

  std::size_t size() const noexcept { return signs_.size(); }
  std::span<const std::int8_t> signs() const noexcept { return signs_; }
  std::int8_t operator[](std::size_t i) const { return signs_[i]; }

 private:
  std::vector<std::int8_t> signs_;
};

// Equipartition induced by the Walsh function U_k over n nodes; k in [1, n).
PartitionVector walsh_partition(Label k, std::size_t n);

// Links with endpoints on opposite sides, by direct edge counting.
std::uint64_t cut_value(const GeneratorSet& set, const PartitionVector& x);
// Same, validating a raw sign vector first (throws Error if unbalanced).
std::uint64_t cut_value(const GeneratorSet& set, std::span<const std::int8_t> signs);

struct BisectionReport {
  int dimension = 0;
  // Relative bisection, in units of n/2 links.
  std::uint32_t b = 0;
  // Absolute bisection in links: B = b n / 2.
  std::uint64_t B = 0;
  // Smallest Walsh index achieving the minimum cut.
  Label t = 0;
  // Largest Walsh cut C_k over k >= 1, in units of n/2 (diagnostic only).
  std::uint32_t max_cut = 0;

  std::size_t node_count() const noexcept { return std::size_t{1} << dimension; }
  PartitionVector partition() const { return walsh_partition(t, node_count()); }

  friend bool operator==(const BisectionReport&, const BisectionReport&) = default;
};

// Per-index cuts C_k = sum_s P(k & h_s) for k in [0, n); C_0 = 0.
std::vector<std::uint32_t> walsh_cuts(const GeneratorSet& set);

// O(m n) scan of the parity sums. Throws Error for non-spanning sets.
BisectionReport bisection_direct(const GeneratorSet& set);

// O(n log n): B = (n/4)(m - max_{k>=1} F_k) with F the transformed hop
// indicator. Bit-identical to bisection_direct.
BisectionReport bisection_fwht(const GeneratorSet& set);

inline constexpr int kBruteForceMaxDimension = 4;

// Min cut over all C(n-1, n/2-1) equipartitions with the first node fixed.
// Uses no Walsh machinery. n <= 16.
std::uint64_t brute_force_bisection(const GeneratorSet& set);

struct OptimizeResult {
  GeneratorSet set;
  BisectionReport report;
  int diameter = 0;
};

inline constexpr std::uint64_t kDefaultOptimizeBudget = 5'000'000;

// Exhaustive max-min search over all m-subsets of nonzero labels, n <= 64.
// Ties go to smaller diameter, then the lexicographically smaller hop list.
// Throws LimitError when C(n-1, m) exceeds `budget`.
OptimizeResult optimize_direct(int dimension, int m,
                               std::uint64_t budget = kDefaultOptimizeBudget);

}  // namespace lhnet
