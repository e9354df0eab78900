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
#include <optional>
#include <span>
#include <vector>

#include "lhnet/generator_set.hpp"

namespace lhnet {

/// High-density parameters: m must lie on the ladder n/2, n/2 + n/4, ...,
/// n - 1 for n = 2^d.
struct HdParams {
  int dimension;
  int m;

  // Throws Error if m is not on the ladder.
  void validate() const;
  static std::vector<int> ladder(int dimension);
};

// h_s = n - s for s = 1..m. Bisection floor((m+1)/2), diameter 2,
// average hops 2 - m/n. Optionally put into systematic form.
GeneratorSet lh_hd(const HdParams& params, bool diagonalized = false);

// Drops the last r in {1, 2} hops, lowering the bisection by r.
GeneratorSet lh_hd_reduced(const GeneratorSet& hd, int r);

// Smallest L with 2^L - L - 1 >= d.
int b3_augmentation_length(int dimension);

inline constexpr int kB3MinDimension = 3;
inline constexpr int kB3MaxDimension = 57;

// d-cube plus L hops built from d distinct L-bit column patterns of weight
// >= 2 (columns[mu] describes bit mu; bit j of a pattern belongs to added
// hop j). Throws Error if the added hops come out zero, duplicated or equal
// to a cube hop.
GeneratorSet low_density_b3_with_columns(int dimension, std::span<const Label> columns);

// Default: the lexicographically first valid choice of patterns taken in
// increasing order. With a seed, a random valid choice instead.
GeneratorSet low_density_b3(int dimension, std::optional<std::uint64_t> seed = {});

// Appends the XOR of all hops, raising an odd bisection b to b + 1. When the
// XOR is 0 (or already a hop), first substitutes one hop, preserving b, so
// the XOR becomes a new nonzero label. Rejects even-b input.
GeneratorSet augment_odd_b(const GeneratorSet& set);

// Hypercube plus the all-ones hop (folded d-cube).
GeneratorSet folded_cube(int dimension);
// Every nonzero label: the complete graph on n nodes.
GeneratorSet full_mesh(int dimension);

// Greedy code extension: starting from `start`, repeatedly appends the
// label that maximizes the new bisection, then minimizes how many Walsh
// indices attain it (smallest label on ties). Returns the sets for
// m = |start| + 1 .. m_max.
std::vector<GeneratorSet> greedy_extension(const GeneratorSet& start, int m_max);

enum class SecondaryObjective { kDiameter, kAverageHops };

struct SecondaryOptions {
  SecondaryObjective objective = SecondaryObjective::kDiameter;
  bool hold_bisection = true;
  int depth = 1;
  std::uint64_t budget = 200'000;
};

// Greedy iterated local search replacing up to `depth` hops per step. Each
// step takes the best strictly improving replacement (first in lexicographic
// candidate order on ties). Diameter ties are broken by fewer nodes at the
// farthest distance; average-hop ties by diameter. Stops at a fixed point or
// when the evaluation budget runs out.
GeneratorSet optimize_secondary(const GeneratorSet& set, const SecondaryOptions& options = {});

}  // namespace lhnet
