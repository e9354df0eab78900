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

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <unordered_set>

#include "lhnet/bisection.hpp"
#include "lhnet/ecc.hpp"
#include "lhnet/error.hpp"
#include "lhnet/graph.hpp"

namespace lhnet {

std::vector<int> HdParams::ladder(int dimension) {
  std::vector<int> values;
  const int n = 1 << dimension;
  for (int j = 1; j <= dimension; ++j) values.push_back(n - (n >> j));
  return values;
}

void HdParams::validate() const {
  if (dimension < 1 || dimension > kMaxDimension) {
    throw Error("lh_hd: dimension outside [1, 24]");
  }
  const auto rungs = ladder(dimension);
  if (std::find(rungs.begin(), rungs.end(), m) == rungs.end()) {
    throw Error("lh_hd: m=" + std::to_string(m) +
                " is not one of n/2, n/2+n/4, ..., n-1 for d=" +
                std::to_string(dimension));
  }
}

GeneratorSet lh_hd(const HdParams& params, bool diagonalized) {
  params.validate();
  const Label n = Label{1} << params.dimension;
  std::vector<Label> hops;
  for (int s = 1; s <= params.m; ++s) hops.push_back(n - static_cast<Label>(s));
  GeneratorSet set(params.dimension, std::move(hops));
  return diagonalized ? diagonalize(set, /*sort_tail=*/true) : set;
}

GeneratorSet lh_hd_reduced(const GeneratorSet& hd, int r) {
  if (r != 1 && r != 2) throw Error("lh_hd_reduced: r must be 1 or 2");
  if (hd.size() <= static_cast<std::size_t>(r)) {
    throw Error("lh_hd_reduced: not enough hops to remove");
  }
  std::vector<Label> hops(hd.hops().begin(), hd.hops().end() - r);
  return GeneratorSet(hd.dimension(), std::move(hops));
}

int b3_augmentation_length(int dimension) {
  if (dimension < kB3MinDimension || dimension > kB3MaxDimension) {
    throw Error("low_density_b3: d=" + std::to_string(dimension) +
                " outside the supported range [3, 57]");
  }
  int length = 2;
  while ((std::int64_t{1} << length) - length - 1 < dimension) ++length;
  return length;
}

namespace {

// Added hop j collects bit j of every column pattern.
std::vector<Label> augmentation_hops(std::span<const Label> columns, int length) {
  std::vector<Label> hops(static_cast<std::size_t>(length), 0);
  for (std::size_t mu = 0; mu < columns.size(); ++mu) {
    for (int j = 0; j < length; ++j) {
      if ((columns[mu] >> j) & 1u) hops[static_cast<std::size_t>(j)] |= Label{1} << mu;
    }
  }
  return hops;
}

bool valid_augmentation(std::span<const Label> columns, int length) {
  const auto hops = augmentation_hops(columns, length);
  std::unordered_set<Label> seen;
  for (Label h : hops) {
    if (std::popcount(h) < 2 || !seen.insert(h).second) return false;
  }
  return true;
}

std::vector<Label> b3_patterns(int length) {
  std::vector<Label> patterns;
  for (Label p = 0; p < (Label{1} << length); ++p) {
    if (std::popcount(p) >= 2) patterns.push_back(p);
  }
  return patterns;
}

bool first_valid_choice(const std::vector<Label>& patterns, std::size_t start,
                        std::size_t wanted, int length, std::vector<Label>& chosen) {
  if (chosen.size() == wanted) return valid_augmentation(chosen, length);
  for (std::size_t i = start; i + (wanted - chosen.size()) <= patterns.size(); ++i) {
    chosen.push_back(patterns[i]);
    if (first_valid_choice(patterns, i + 1, wanted, length, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

GeneratorSet low_density_b3_with_columns(int dimension, std::span<const Label> columns) {
  const int length = b3_augmentation_length(dimension);
  if (columns.size() != static_cast<std::size_t>(dimension)) {
    throw Error("low_density_b3: need exactly d column patterns");
  }
  std::unordered_set<Label> distinct;
  for (Label c : columns) {
    if (c >= (Label{1} << length) || std::popcount(c) < 2) {
      throw Error("low_density_b3: column pattern " + hex(c) +
                  " is not an L-bit pattern with at least two ones");
    }
    if (!distinct.insert(c).second) throw Error("low_density_b3: repeated column pattern");
  }
  if (!valid_augmentation(columns, length)) {
    throw Error("low_density_b3: column choice yields a zero, repeated or unit added hop");
  }
  const GeneratorSet cube = hypercube(dimension);
  std::vector<Label> hops(cube.hops().begin(), cube.hops().end());
  for (Label h : augmentation_hops(columns, length)) hops.push_back(h);
  return GeneratorSet(dimension, std::move(hops));
}

GeneratorSet low_density_b3(int dimension, std::optional<std::uint64_t> seed) {
  const int length = b3_augmentation_length(dimension);
  if (dimension > kMaxDimension) {
    throw Error("low_density_b3: d=" + std::to_string(dimension) +
                " exceeds the generator-set limit of 24");
  }
  std::vector<Label> patterns = b3_patterns(length);
  const auto wanted = static_cast<std::size_t>(dimension);
  if (seed) {
    std::mt19937_64 rng(*seed);
    for (int attempt = 0; attempt < 10'000; ++attempt) {
      std::shuffle(patterns.begin(), patterns.end(), rng);
      std::vector<Label> chosen(patterns.begin(), patterns.begin() + dimension);
      if (valid_augmentation(chosen, length)) {
        return low_density_b3_with_columns(dimension, chosen);
      }
    }
    std::sort(patterns.begin(), patterns.end());
  }
  std::vector<Label> chosen;
  if (!first_valid_choice(patterns, 0, wanted, length, chosen)) {
    throw Error("low_density_b3: no valid column choice for d=" + std::to_string(dimension));
  }
  return low_density_b3_with_columns(dimension, chosen);
}

GeneratorSet augment_odd_b(const GeneratorSet& set) {
  const std::uint32_t b = bisection_fwht(set).b;
  if (b % 2 == 0) {
    throw Error("augment_odd_b: bisection b=" + std::to_string(b) + " is even");
  }
  const auto xor_all = [](std::span<const Label> hops) {
    Label x = 0;
    for (Label h : hops) x ^= h;
    return x;
  };

  std::vector<Label> hops(set.hops().begin(), set.hops().end());
  Label extra = xor_all(hops);
  if (extra == 0 || set.contains(extra)) {
    // Single substitution: hops in ascending value order, replacement labels
    // ascending; keep the first that preserves b and frees the XOR.
    std::vector<std::size_t> order(hops.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t c) { return hops[a] < hops[c]; });
    const Label n = static_cast<Label>(set.node_count());
    bool found = false;
    for (std::size_t pos : order) {
      for (Label v = 1; v < n && !found; ++v) {
        if (set.contains(v)) continue;
        const Label candidate_xor = extra ^ hops[pos] ^ v;
        std::vector<Label> trial = hops;
        trial[pos] = v;
        if (candidate_xor == 0 ||
            std::find(trial.begin(), trial.end(), candidate_xor) != trial.end()) {
          continue;
        }
        const GeneratorSet candidate(set.dimension(), trial);
        if (span_check(candidate) && bisection_fwht(candidate).b == b) {
          hops = std::move(trial);
          extra = candidate_xor;
          found = true;
        }
      }
      if (found) break;
    }
    if (!found) {
      throw Error("augment_odd_b: no single hop substitution keeps b=" +
                  std::to_string(b) + " with a nonzero new hop");
    }
  }
  hops.push_back(extra);
  GeneratorSet augmented(set.dimension(), std::move(hops));
  if (bisection_fwht(augmented).b != b + 1) {
    throw Error("augment_odd_b: augmentation did not raise the bisection");
  }
  return augmented;
}

GeneratorSet folded_cube(int dimension) {
  const GeneratorSet cube = hypercube(dimension);
  std::vector<Label> hops(cube.hops().begin(), cube.hops().end());
  if (dimension >= 2) hops.push_back((Label{1} << dimension) - 1);
  return GeneratorSet(dimension, std::move(hops));
}

GeneratorSet full_mesh(int dimension) {
  if (dimension < 1 || dimension > 16) throw Error("full_mesh: d must be in [1, 16]");
  std::vector<Label> hops;
  for (Label h = 1; h < (Label{1} << dimension); ++h) hops.push_back(h);
  return GeneratorSet(dimension, std::move(hops));
}

std::vector<GeneratorSet> greedy_extension(const GeneratorSet& start, int m_max) {
  if (!span_check(start)) throw Error("greedy_extension: start set is disconnected");
  const Label n = static_cast<Label>(start.node_count());
  if (m_max >= static_cast<int>(n)) m_max = static_cast<int>(n) - 1;

  std::vector<std::uint32_t> cuts = walsh_cuts(start);
  std::vector<Label> hops(start.hops().begin(), start.hops().end());
  std::vector<bool> used(n, false);
  for (Label h : hops) used[h] = true;

  std::vector<GeneratorSet> chain;
  while (static_cast<int>(hops.size()) < m_max) {
    std::uint32_t lowest = UINT32_MAX;
    for (Label k = 1; k < n; ++k) lowest = std::min(lowest, cuts[k]);
    std::vector<Label> at_min;
    std::vector<Label> above_min;
    for (Label k = 1; k < n; ++k) {
      if (cuts[k] == lowest) at_min.push_back(k);
      if (cuts[k] == lowest + 1) above_min.push_back(k);
    }

    Label best = 0;
    std::uint32_t best_min = 0;
    std::size_t best_count = SIZE_MAX;
    for (Label v = 1; v < n; ++v) {
      if (used[v]) continue;
      // Only indices at the minimum or one above can set the new minimum.
      std::size_t stuck = 0;
      for (Label k : at_min) stuck += parity(k & v) == 0;
      std::uint32_t new_min = lowest;
      std::size_t count = stuck;
      if (stuck == 0) {
        new_min = lowest + 1;
        count = at_min.size();
        for (Label k : above_min) count += parity(k & v) == 0;
      }
      if (new_min > best_min || (new_min == best_min && count < best_count)) {
        best = v;
        best_min = new_min;
        best_count = count;
      }
    }
    used[best] = true;
    hops.push_back(best);
    for (Label k = 1; k < n; ++k) cuts[k] += static_cast<std::uint32_t>(parity(k & best));
    chain.emplace_back(start.dimension(), hops);
  }
  return chain;
}

namespace {

// Lexicographic score, lower is better.
using Score = std::tuple<std::uint64_t, std::uint64_t>;

Score score(const DistanceProfile& p, SecondaryObjective objective) {
  if (objective == SecondaryObjective::kDiameter) {
    return {static_cast<std::uint64_t>(p.diameter), p.farthest_count()};
  }
  return {p.total_hops, static_cast<std::uint64_t>(p.diameter)};
}

}  // namespace

GeneratorSet optimize_secondary(const GeneratorSet& set, const SecondaryOptions& options) {
  if (options.depth != 1 && options.depth != 2) {
    throw Error("optimize_secondary: depth must be 1 or 2");
  }
  if (!span_check(set)) throw Error("optimize_secondary: graph is disconnected");
  const Label n = static_cast<Label>(set.node_count());
  const std::uint32_t floor_b = bisection_fwht(set).b;

  GeneratorSet current = set;
  Score current_score = score(distance_profile(current), options.objective);
  std::uint64_t evaluations = 0;

  for (;;) {
    std::optional<GeneratorSet> best;
    Score best_score = current_score;
    std::vector<Label> unused;
    for (Label v = 1; v < n; ++v) {
      if (!current.contains(v)) unused.push_back(v);
    }
    const std::size_t m = current.size();

    auto evaluate = [&](std::vector<Label> hops) {
      ++evaluations;
      GeneratorSet candidate(current.dimension(), std::move(hops));
      if (!span_check(candidate)) return;
      if (options.hold_bisection && bisection_fwht(candidate).b < floor_b) return;
      const Score s = score(distance_profile(candidate), options.objective);
      if (s < best_score) {
        best_score = s;
        best = std::move(candidate);
      }
    };

    std::vector<Label> hops(current.hops().begin(), current.hops().end());
    for (std::size_t i = 0; i < m && evaluations < options.budget; ++i) {
      for (Label v : unused) {
        if (evaluations >= options.budget) break;
        std::vector<Label> trial = hops;
        trial[i] = v;
        evaluate(std::move(trial));
      }
    }
    if (options.depth == 2) {
      for (std::size_t i = 0; i < m && evaluations < options.budget; ++i) {
        for (std::size_t j = i + 1; j < m && evaluations < options.budget; ++j) {
          for (std::size_t a = 0; a < unused.size() && evaluations < options.budget; ++a) {
            for (std::size_t c = a + 1; c < unused.size(); ++c) {
              if (evaluations >= options.budget) break;
              std::vector<Label> trial = hops;
              trial[i] = unused[a];
              trial[j] = unused[c];
              evaluate(std::move(trial));
            }
          }
        }
      }
    }
    if (!best) break;
    current = std::move(*best);
    current_score = best_score;
    if (evaluations >= options.budget) break;
  }
  return current;
}

}  // namespace lhnet
