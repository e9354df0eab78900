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

#include "lhnet/gf2.hpp"

#include <array>
#include <string>

#include "lhnet/error.hpp"

namespace lhnet {

int gf2_rank(std::span<const Label> vectors) {
  // Basis indexed by leading bit.
  std::array<Label, 32> basis{};
  int rank = 0;
  for (Label v : vectors) {
    for (int bit = 31; bit >= 0 && v != 0; --bit) {
      if (((v >> bit) & 1u) == 0) continue;
      if (basis[bit] == 0) {
        basis[bit] = v;
        ++rank;
        v = 0;
      } else {
        v ^= basis[bit];
      }
    }
  }
  return rank;
}

EquivalenceMap::EquivalenceMap(int dimension, std::vector<Label> rows)
    : rows_(std::move(rows)) {
  if (dimension < 1 || dimension > kMaxDimension ||
      static_cast<int>(rows_.size()) != dimension) {
    throw Error("equivalence map needs exactly d rows, d in [1, 24]");
  }
  const Label limit = Label{1} << dimension;
  for (Label r : rows_) {
    if (r >= limit) throw Error("equivalence map row wider than d bits");
  }
  if (gf2_rank(rows_) != dimension) {
    throw Error("equivalence map is singular over GF(2)");
  }
}

EquivalenceMap EquivalenceMap::identity(int dimension) {
  std::vector<Label> rows;
  for (int i = 0; i < dimension; ++i) rows.push_back(Label{1} << i);
  return EquivalenceMap(dimension, std::move(rows));
}

EquivalenceMap EquivalenceMap::permutation(std::span<const int> perm) {
  std::vector<Label> rows;
  for (int target : perm) {
    if (target < 0 || target >= static_cast<int>(perm.size())) {
      throw Error("bit permutation target out of range");
    }
    rows.push_back(Label{1} << target);
  }
  return EquivalenceMap(static_cast<int>(perm.size()), std::move(rows));
}

EquivalenceMap EquivalenceMap::random(int dimension, std::mt19937_64& rng) {
  std::uniform_int_distribution<Label> pick(1, (Label{1} << dimension) - 1);
  // Roughly 29% of random binary matrices are invertible; retry until one is.
  for (;;) {
    std::vector<Label> rows(static_cast<std::size_t>(dimension));
    for (Label& r : rows) r = pick(rng);
    if (gf2_rank(rows) == dimension) return EquivalenceMap(dimension, std::move(rows));
  }
}

Label EquivalenceMap::apply(Label h) const noexcept {
  Label out = 0;
  for (std::size_t i = 0; h != 0; ++i, h >>= 1) {
    if (h & 1u) out ^= rows_[i];
  }
  return out;
}

EquivalenceMap EquivalenceMap::then(const EquivalenceMap& other) const {
  if (other.dimension() != dimension()) {
    throw Error("cannot compose equivalence maps of different dimension");
  }
  std::vector<Label> rows;
  rows.reserve(rows_.size());
  for (Label r : rows_) rows.push_back(other.apply(r));
  return EquivalenceMap(dimension(), std::move(rows));
}

}  // namespace lhnet
