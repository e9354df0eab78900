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
#include <random>
#include <span>
#include <vector>

#include "lhnet/walsh.hpp"

namespace lhnet {

// Rank over GF(2) of a list of bit vectors packed into integers.
int gf2_rank(std::span<const Label> vectors);

/// Invertible d x d matrix M over GF(2) acting on row vectors: h -> h M.
///
/// Row i holds the image of the unit vector 2^i, so applying the map XORs
/// together the rows selected by the set bits of h. Every relabeling of an
/// LH network that preserves its cut and path distributions is of this form.
class EquivalenceMap {
 public:
  // Throws Error if the rows are not linearly independent.
  EquivalenceMap(int dimension, std::vector<Label> rows);

  static EquivalenceMap identity(int dimension);
  // Bit permutation sending bit i to bit perm[i].
  static EquivalenceMap permutation(std::span<const int> perm);
  static EquivalenceMap random(int dimension, std::mt19937_64& rng);

  int dimension() const noexcept { return static_cast<int>(rows_.size()); }
  std::span<const Label> rows() const noexcept { return rows_; }

  Label apply(Label h) const noexcept;

  // (this then other): h -> (h M_this) M_other.
  EquivalenceMap then(const EquivalenceMap& other) const;

  friend bool operator==(const EquivalenceMap&, const EquivalenceMap&) = default;

 private:
  std::vector<Label> rows_;
};

}  // namespace lhnet
