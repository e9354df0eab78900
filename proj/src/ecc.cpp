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

#include "lhnet/ecc.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <unordered_set>

#include "lhnet/bisection.hpp"
#include "lhnet/error.hpp"
#include "lhnet/graph.hpp"

namespace lhnet {

CodeMatrix::CodeMatrix(std::vector<boost::dynamic_bitset<>> rows)
    : rows_(std::move(rows)) {
  if (rows_.empty()) throw Error("code matrix has no rows");
  if (k() > kMaxCodeDimension) {
    throw LimitError("code dimension k=" + std::to_string(k()) + " exceeds 24");
  }
  const std::size_t n = rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != n) throw Error("code matrix rows differ in length");
  }
  if (n < rows_.size()) {
    throw Error("code length n=" + std::to_string(n) + " is below k=" +
                std::to_string(k()));
  }
  std::vector<Label> columns;
  for (std::size_t j = 0; j < n; ++j) columns.push_back(column(j));
  if (gf2_rank(columns) != k()) throw Error("code matrix rows are linearly dependent");
}

CodeMatrix CodeMatrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<boost::dynamic_bitset<>> bits;
  for (const std::string& text : rows) {
    boost::dynamic_bitset<> row(text.size());
    for (std::size_t j = 0; j < text.size(); ++j) {
      if (text[j] == '1') {
        row.set(j);
      } else if (text[j] != '0') {
        throw ParseError("code matrix row contains '" + std::string(1, text[j]) + "'");
      }
    }
    bits.push_back(std::move(row));
  }
  return CodeMatrix(std::move(bits));
}

Label CodeMatrix::column(std::size_t j) const {
  Label value = 0;
  for (const auto& row : rows_) value = (value << 1) | (row[j] ? 1u : 0u);
  return value;
}

std::vector<std::string> CodeMatrix::to_strings() const {
  std::vector<std::string> out;
  for (const auto& row : rows_) {
    std::string text(row.size(), '0');
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j]) text[j] = '1';
    }
    out.push_back(std::move(text));
  }
  return out;
}

CodeMatrix parse_code_matrix(std::istream& in) {
  std::vector<std::string> rows;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string row;
    for (char c : raw) {
      if (c == '#') break;
      if (c == ' ' || c == '\t' || c == '\r') continue;
      row.push_back(c);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("code matrix file has no rows");
  return CodeMatrix::from_strings(rows);
}

CodeMatrix read_code_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open code matrix '" + path + "'");
  return parse_code_matrix(in);
}

void write_code_matrix(std::ostream& out, const CodeMatrix& g) {
  for (const std::string& row : g.to_strings()) out << row << '\n';
}

GeneratorSet code_to_lh(const CodeMatrix& g) {
  const std::size_t n = g.length();
  std::vector<Label> hops;
  hops.reserve(n);
  std::unordered_set<Label> seen;
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t column = n - 1 - s;
    const Label h = g.column(column);
    if (h == 0) {
      throw Error("column " + std::to_string(column + 1) +
                  " of [G] is zero and would produce hop 0");
    }
    if (!seen.insert(h).second) {
      throw Error("duplicate column " + hex(h) + " in [G] would produce a repeated hop");
    }
    hops.push_back(h);
  }
  return GeneratorSet(g.k(), std::move(hops));
}

CodeMatrix lh_to_code(const GeneratorSet& set) {
  if (!span_check(set)) throw Error("lh_to_code: hops do not span Z_2^d (rank deficient)");
  const int d = set.dimension();
  const std::size_t m = set.size();
  std::vector<boost::dynamic_bitset<>> rows(static_cast<std::size_t>(d),
                                            boost::dynamic_bitset<>(m));
  for (std::size_t s = 0; s < m; ++s) {
    const std::size_t column = m - 1 - s;
    for (int i = 0; i < d; ++i) {
      if ((set[s] >> (d - 1 - i)) & 1u) rows[static_cast<std::size_t>(i)].set(column);
    }
  }
  return CodeMatrix(std::move(rows));
}

std::uint32_t min_weight(const CodeMatrix& g) {
  // Gray code: step i flips message bit ctz(i), i.e. XORs in one row.
  boost::dynamic_bitset<> codeword(g.length());
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const std::uint64_t total = std::uint64_t{1} << g.k();
  for (std::uint64_t i = 1; i < total; ++i) {
    codeword ^= g.rows()[static_cast<std::size_t>(std::countr_zero(i))];
    best = std::min(best, codeword.count());
  }
  return static_cast<std::uint32_t>(best);
}

bool verify_duality(const CodeMatrix& g) {
  return min_weight(g) == bisection_fwht(code_to_lh(g)).b;
}

GeneratorSet apply_equivalence(const GeneratorSet& set, const EquivalenceMap& map) {
  if (map.dimension() != set.dimension()) {
    throw Error("equivalence map dimension does not match the generator set");
  }
  std::vector<Label> hops;
  hops.reserve(set.size());
  for (Label h : set.hops()) hops.push_back(map.apply(h));
  return GeneratorSet(set.dimension(), std::move(hops));
}

Diagonalization diagonalize_with_map(const GeneratorSet& set, bool sort_tail) {
  if (!span_check(set)) throw Error("diagonalize: hops do not span Z_2^d (rank deficient)");
  const int d = set.dimension();
  std::vector<Label> hops(set.hops().begin(), set.hops().end());
  EquivalenceMap total = EquivalenceMap::identity(d);

  for (int c = 0; c < d; ++c) {
    const Label bit = Label{1} << c;
    // Earlier pivots are unit vectors of other columns, so only positions
    // from c onward can carry a 1 in column c.
    std::size_t pivot = hops.size();
    for (std::size_t r = static_cast<std::size_t>(c); r < hops.size(); ++r) {
      if ((hops[r] & bit) == 0) continue;
      if (pivot == hops.size() || std::popcount(hops[r]) < std::popcount(hops[pivot])) {
        pivot = r;
      }
    }
    if (pivot == hops.size()) throw Error("diagonalize: rank deficient");

    // XOR column c into every other column where the pivot row has a 1.
    std::vector<Label> rows;
    for (int i = 0; i < d; ++i) rows.push_back(Label{1} << i);
    rows[static_cast<std::size_t>(c)] = hops[pivot];
    const EquivalenceMap step(d, std::move(rows));
    for (Label& h : hops) h = step.apply(h);
    total = total.then(step);
    std::swap(hops[pivot], hops[static_cast<std::size_t>(c)]);
  }
  if (sort_tail) std::sort(hops.begin() + d, hops.end());
  return {GeneratorSet(d, std::move(hops)), std::move(total)};
}

GeneratorSet diagonalize(const GeneratorSet& set, bool sort_tail) {
  return diagonalize_with_map(set, sort_tail).set;
}

namespace {

std::size_t expansion_cost(const GeneratorSet& next, const EquivalenceMap& map,
                           const std::unordered_set<Label>& previous) {
  std::size_t cost = 0;
  for (Label h : next.hops()) cost += previous.count(map.apply(h)) == 0;
  return cost;
}

// Row i += row j (transvection), or rows i and j swapped.
EquivalenceMap elementary(const EquivalenceMap& map, std::size_t i, std::size_t j,
                          bool swap) {
  std::vector<Label> rows(map.rows().begin(), map.rows().end());
  if (swap) {
    std::swap(rows[i], rows[j]);
  } else {
    rows[i] ^= rows[j];
  }
  return EquivalenceMap(map.dimension(), std::move(rows));
}

}  // namespace

ExpansionPlan min_change_expansion(const GeneratorSet& previous,
                                   const GeneratorSet& next, std::uint64_t budget,
                                   std::uint64_t seed) {
  if (previous.dimension() > next.dimension()) {
    throw Error("min_change_expansion: the new network must not be smaller");
  }
  const int d = next.dimension();
  const std::unordered_set<Label> old_hops(previous.hops().begin(), previous.hops().end());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_row(0, static_cast<std::size_t>(d) - 1);

  EquivalenceMap current = EquivalenceMap::identity(d);
  std::size_t current_cost = expansion_cost(next, current, old_hops);
  EquivalenceMap best = current;
  std::size_t best_cost = current_cost;

  std::uint64_t trials = 0;
  while (best_cost > 0 && trials < budget && d > 1) {
    std::optional<EquivalenceMap> improved;
    std::size_t improved_cost = current_cost;
    for (std::size_t i = 0; i < static_cast<std::size_t>(d) && trials < budget; ++i) {
      for (std::size_t j = 0; j < static_cast<std::size_t>(d) && trials < budget; ++j) {
        if (i == j) continue;
        for (bool swap : {false, true}) {
          if (swap && j < i) continue;
          EquivalenceMap candidate = elementary(current, i, j, swap);
          ++trials;
          const std::size_t cost = expansion_cost(next, candidate, old_hops);
          if (cost < improved_cost) {
            improved_cost = cost;
            improved = std::move(candidate);
          }
        }
      }
    }
    if (improved) {
      current = std::move(*improved);
      current_cost = improved_cost;
    } else {
      // Plateau: random transvection, keep walking from there.
      std::size_t i = pick_row(rng);
      std::size_t j = pick_row(rng);
      while (j == i) j = pick_row(rng);
      current = elementary(current, i, j, false);
      current_cost = expansion_cost(next, current, old_hops);
      ++trials;
    }
    if (current_cost < best_cost) {
      best = current;
      best_cost = current_cost;
    }
  }

  // Shared hops first, in the previous network's port order.
  std::vector<Label> mapped;
  for (Label h : next.hops()) mapped.push_back(best.apply(h));
  std::vector<Label> ordered;
  for (Label h : previous.hops()) {
    if (std::find(mapped.begin(), mapped.end(), h) != mapped.end()) ordered.push_back(h);
  }
  for (Label h : mapped) {
    if (old_hops.count(h) == 0) ordered.push_back(h);
  }
  return {best, GeneratorSet(d, std::move(ordered)), best_cost};
}

}  // namespace lhnet
