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

#include "lhnet/bisection.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <optional>
#include <string>

#include "lhnet/error.hpp"
#include "lhnet/graph.hpp"

namespace lhnet {

PartitionVector::PartitionVector(std::vector<std::int8_t> signs)
    : signs_(std::move(signs)) {
  const std::size_t n = signs_.size();
  if (n < 2 || n % 2 != 0) throw Error("partition length must be even and >= 2");
  std::size_t plus = 0;
  for (std::int8_t s : signs_) {
    if (s != 1 && s != -1) throw Error("partition entries must be +1 or -1");
    plus += (s == 1);
  }
  if (plus != n / 2) {
    throw Error("partition is unbalanced: " + std::to_string(plus) + " of " +
                std::to_string(n) + " entries are +1");
  }
  if (signs_[0] == -1) {
    for (std::int8_t& s : signs_) s = static_cast<std::int8_t>(-s);
  }
}

PartitionVector walsh_partition(Label k, std::size_t n) {
  if (!is_power_of_two(n) || n < 2) throw Error("walsh_partition: n must be 2^d, d >= 1");
  if (k == 0 || k >= n) {
    throw Error("walsh_partition: index must be in [1, n); U_0 is constant");
  }
  std::vector<std::int8_t> signs(n);
  for (std::size_t x = 0; x < n; ++x) {
    signs[x] = static_cast<std::int8_t>(walsh_algebraic(k, static_cast<Label>(x)));
  }
  return PartitionVector(std::move(signs));
}

std::uint64_t cut_value(const GeneratorSet& set, const PartitionVector& x) {
  if (x.size() != set.node_count()) {
    throw Error("partition length does not match the node count");
  }
  // Each undirected edge is seen from both endpoints.
  std::uint64_t crossings = 0;
  for (std::size_t v = 0; v < x.size(); ++v) {
    for (Label h : set.hops()) crossings += (x[v] != x[v ^ h]);
  }
  return crossings / 2;
}

std::uint64_t cut_value(const GeneratorSet& set, std::span<const std::int8_t> signs) {
  return cut_value(set, PartitionVector({signs.begin(), signs.end()}));
}

namespace {

void require_spanning(const GeneratorSet& set, const char* who) {
  if (!span_check(set)) {
    throw Error(std::string(who) +
                ": hops do not span Z_2^d; the graph is disconnected");
  }
}

BisectionReport report_from_cuts(const GeneratorSet& set,
                                 const std::vector<std::uint32_t>& cuts) {
  BisectionReport r;
  r.dimension = set.dimension();
  r.b = std::numeric_limits<std::uint32_t>::max();
  for (std::size_t k = 1; k < cuts.size(); ++k) {
    if (cuts[k] < r.b) {
      r.b = cuts[k];
      r.t = static_cast<Label>(k);
    }
    r.max_cut = std::max(r.max_cut, cuts[k]);
  }
  r.B = static_cast<std::uint64_t>(r.b) * (set.node_count() / 2);
  return r;
}

}  // namespace

std::vector<std::uint32_t> walsh_cuts(const GeneratorSet& set) {
  const std::size_t n = set.node_count();
  std::vector<std::uint32_t> cuts(n, 0);
  for (std::size_t k = 1; k < n; ++k) {
    std::uint32_t c = 0;
    for (Label h : set.hops()) c += static_cast<std::uint32_t>(parity(k & h));
    cuts[k] = c;
  }
  return cuts;
}

BisectionReport bisection_direct(const GeneratorSet& set) {
  require_spanning(set, "bisection_direct");
  return report_from_cuts(set, walsh_cuts(set));
}

BisectionReport bisection_fwht(const GeneratorSet& set) {
  require_spanning(set, "bisection_fwht");
  const Spectrum f = eigenvalues(set);
  const auto m = static_cast<std::int64_t>(set.size());
  // C_k = (m - F_k) / 2 is an integer: m and F_k share parity.
  std::vector<std::uint32_t> cuts(f.size(), 0);
  for (std::size_t k = 1; k < f.size(); ++k) {
    cuts[k] = static_cast<std::uint32_t>((m - f[k]) / 2);
  }
  return report_from_cuts(set, cuts);
}

std::uint64_t brute_force_bisection(const GeneratorSet& set) {
  if (set.dimension() > kBruteForceMaxDimension) {
    throw LimitError("brute_force_bisection supports n <= 16 only");
  }
  require_spanning(set, "brute_force_bisection");
  const std::size_t n = set.node_count();
  const std::size_t half = n / 2;
  // Node 0 is always on the + side; choose the other half-1 members from
  // nodes 1..n-1 by walking every subset of that size.
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; mask += 2) {
    if (static_cast<std::size_t>(std::popcount(mask)) != half) continue;
    std::uint64_t cut = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (((mask >> v) & 1u) == 0) continue;
      for (Label h : set.hops()) cut += ((mask >> (v ^ h)) & 1u) == 0;
    }
    best = std::min(best, cut);
  }
  return best;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (result > std::numeric_limits<std::uint64_t>::max() / (n - k + i)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace

OptimizeResult optimize_direct(int dimension, int m, std::uint64_t budget) {
  if (dimension < 1 || dimension > 6) {
    throw LimitError("optimize_direct supports n = 2^d <= 64 only");
  }
  const int universe = (1 << dimension) - 1;
  if (m < dimension || m > universe) {
    throw Error("optimize_direct: need d <= m <= n-1 for a connected set");
  }
  const std::uint64_t count = binomial(static_cast<std::uint64_t>(universe),
                                       static_cast<std::uint64_t>(m));
  if (count > budget) {
    throw LimitError("optimize_direct: C(" + std::to_string(universe) + ", " +
                     std::to_string(m) + ") = " + std::to_string(count) +
                     " exceeds budget " + std::to_string(budget));
  }

  // Lexicographic walk over m-subsets of {1..n-1}.
  std::vector<Label> hops(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) hops[static_cast<std::size_t>(i)] = static_cast<Label>(i + 1);

  std::optional<OptimizeResult> best;
  for (;;) {
    GeneratorSet candidate(dimension, hops);
    if (span_check(candidate)) {
      const BisectionReport report = bisection_direct(candidate);
      if (!best || report.b >= best->report.b) {
        const int diameter = distance_profile(candidate).diameter;
        // Lexicographic order of the walk makes the incumbent win exact ties.
        if (!best || report.b > best->report.b || diameter < best->diameter) {
          best = OptimizeResult{std::move(candidate), report, diameter};
        }
      }
    }
    int i = m - 1;
    while (i >= 0 && hops[static_cast<std::size_t>(i)] ==
                         static_cast<Label>(universe - (m - 1 - i))) {
      --i;
    }
    if (i < 0) break;
    ++hops[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) {
      hops[static_cast<std::size_t>(j)] = hops[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::move(*best);
}

}  // namespace lhnet
