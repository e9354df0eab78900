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

#include "lhnet/graph.hpp"

#include <bit>
#include <string>

#include "lhnet/error.hpp"
#include "lhnet/gf2.hpp"

namespace lhnet {

bool span_check(const GeneratorSet& set) {
  return gf2_rank(set.hops()) == set.dimension();
}

std::vector<Label> neighbors(const GeneratorSet& set, Label v) {
  std::vector<Label> out;
  out.reserve(set.size());
  for (Label h : set.hops()) out.push_back(v ^ h);
  return out;
}

AdjacencyMatrix::AdjacencyMatrix(std::size_t n)
    : n_(n), stride_((n + 63) / 64), words_(n * stride_, 0) {}

std::size_t AdjacencyMatrix::row_sum(std::size_t i) const noexcept {
  std::size_t total = 0;
  for (std::size_t w = 0; w < stride_; ++w) {
    total += static_cast<std::size_t>(std::popcount(words_[i * stride_ + w]));
  }
  return total;
}

std::vector<std::int64_t> AdjacencyMatrix::multiply(
    const std::vector<std::int64_t>& x) const {
  if (x.size() != n_) throw Error("vector length does not match matrix size");
  std::vector<std::int64_t> y(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (at(i, j)) acc += x[j];
    }
    y[i] = acc;
  }
  return y;
}

AdjacencyMatrix adjacency(const GeneratorSet& set, std::size_t cap) {
  const std::size_t n = set.node_count();
  if (n > cap) {
    throw LimitError("adjacency: n=" + std::to_string(n) +
                     " exceeds materialization cap " + std::to_string(cap));
  }
  AdjacencyMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (Label h : set.hops()) a.set(i, i ^ h);
  }
  return a;
}

Spectrum eigenvalues(const GeneratorSet& set) {
  Spectrum f(set.node_count(), 0);
  for (Label h : set.hops()) f[h] = 1;
  fwht_inplace(f);
  return f;
}

std::vector<std::uint64_t> DistanceProfile::histogram() const {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(diameter) + 1, 0);
  for (std::uint8_t r : dist) ++counts[r];
  return counts;
}

std::uint64_t DistanceProfile::farthest_count() const {
  std::uint64_t count = 0;
  for (std::uint8_t r : dist) count += (r == diameter);
  return count;
}

DistanceProfile distance_profile(const GeneratorSet& set) {
  if (!span_check(set)) {
    throw Error("distance_profile: hops do not span Z_2^d (graph is disconnected)");
  }
  constexpr std::uint8_t kUnseen = 0xFF;
  const std::size_t n = set.node_count();
  DistanceProfile profile;
  profile.dist.assign(n, kUnseen);
  profile.dist[0] = 0;

  std::vector<Label> frontier{0};
  std::vector<Label> next;
  std::uint8_t level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (Label v : frontier) {
      for (Label h : set.hops()) {
        const Label w = v ^ h;
        if (profile.dist[w] == kUnseen) {
          profile.dist[w] = level;
          next.push_back(w);
        }
      }
    }
    if (!next.empty()) {
      profile.diameter = level;
      profile.total_hops += static_cast<std::uint64_t>(level) * next.size();
    }
    frontier.swap(next);
  }
  return profile;
}

}  // namespace lhnet
