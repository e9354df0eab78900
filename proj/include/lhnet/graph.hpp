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
#include <vector>

#include "lhnet/generator_set.hpp"
#include "lhnet/walsh.hpp"

namespace lhnet {

inline constexpr std::size_t kDefaultAdjacencyCap = std::size_t{1} << 14;

// True iff the hops span Z_2^d, i.e. the Cayley graph is connected.
bool span_check(const GeneratorSet& set);

// [v ^ h_1, ..., v ^ h_m] in hop order.
std::vector<Label> neighbors(const GeneratorSet& set, Label v);

/// Dense n x n bit matrix with A(i, j) = 1 iff i ^ j is a hop.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool at(std::size_t i, std::size_t j) const noexcept {
    return (words_[i * stride_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) noexcept {
    words_[i * stride_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  std::size_t row_sum(std::size_t i) const noexcept;
  // A x for an integer column vector x.
  std::vector<std::int64_t> multiply(const std::vector<std::int64_t>& x) const;

 private:
  std::size_t n_;
  std::size_t stride_;
  std::vector<std::uint64_t> words_;
};

// Throws LimitError when n exceeds `cap`.
AdjacencyMatrix adjacency(const GeneratorSet& set,
                          std::size_t cap = kDefaultAdjacencyCap);

// lambda_k = sum_s U_k(h_s) for every k, via one transform of the hop
// indicator. lambda_0 = m.
Spectrum eigenvalues(const GeneratorSet& set);

/// Hop counts from node 0. By vertex transitivity the table is the same
/// for every node up to relabeling.
struct DistanceProfile {
  std::vector<std::uint8_t> dist;
  int diameter = 0;
  // Sum of dist over all n nodes, root included. avg = total_hops / n.
  std::uint64_t total_hops = 0;

  std::size_t node_count() const noexcept { return dist.size(); }
  double average() const noexcept {
    return static_cast<double>(total_hops) / static_cast<double>(dist.size());
  }
  // histogram()[r] = number of nodes at distance r.
  std::vector<std::uint64_t> histogram() const;
  // Nodes at the maximal distance (#F).
  std::uint64_t farthest_count() const;
};

// Throws Error if the graph is disconnected.
DistanceProfile distance_profile(const GeneratorSet& set);

}  // namespace lhnet
