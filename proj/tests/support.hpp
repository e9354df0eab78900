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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "lhnet/generator_set.hpp"
#include "lhnet/graph.hpp"
#include "lhnet/walsh.hpp"

namespace lhnet::testing {

// min(m, n-1) distinct nonzero hops in Z_2^d that span the space.
inline GeneratorSet random_spanning_set(int d, int m, std::mt19937_64& rng) {
  const Label n = Label{1} << d;
  m = std::min(m, static_cast<int>(n) - 1);
  std::uniform_int_distribution<Label> pick(1, n - 1);
  for (;;) {
    std::vector<Label> hops;
    while (static_cast<int>(hops.size()) < m) {
      const Label h = pick(rng);
      if (std::find(hops.begin(), hops.end(), h) == hops.end()) hops.push_back(h);
    }
    GeneratorSet set(d, hops);
    if (span_check(set)) return set;
  }
}

// Quadratic Walsh transform by definition.
inline std::vector<std::int64_t> naive_walsh(const std::vector<std::int64_t>& f) {
  std::vector<std::int64_t> out(f.size(), 0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    for (std::size_t x = 0; x < f.size(); ++x) {
      out[k] += (std::popcount(k & x) % 2 == 0 ? 1 : -1) * f[x];
    }
  }
  return out;
}

// Links cut by a +/-1 labelling, counted from the edge list.
inline std::uint64_t naive_cut(const GeneratorSet& set, const std::vector<int>& side) {
  std::uint64_t cut = 0;
  for (Label v = 0; v < set.node_count(); ++v) {
    for (Label h : set.hops()) {
      const Label w = v ^ h;
      if (v < w && side[v] != side[w]) ++cut;
    }
  }
  return cut;
}

// Plain BFS over v ^ h without any library helper.
inline std::vector<int> naive_distances(const GeneratorSet& set) {
  std::vector<int> dist(set.node_count(), -1);
  std::queue<Label> q;
  dist[0] = 0;
  q.push(0);
  while (!q.empty()) {
    const Label v = q.front();
    q.pop();
    for (Label h : set.hops()) {
      if (dist[v ^ h] < 0) {
        dist[v ^ h] = dist[v] + 1;
        q.push(v ^ h);
      }
    }
  }
  return dist;
}

inline std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("lhnet_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace lhnet::testing
