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
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "lhnet/generator_set.hpp"
#include "lhnet/gf2.hpp"

namespace lhnet {

inline constexpr int kMaxCodeDimension = 24;

/// k x n generator matrix [G] of a binary linear code. Rows are linearly
/// independent; bit j of a row is column j counted from the left.
class CodeMatrix {
 public:
  explicit CodeMatrix(std::vector<boost::dynamic_bitset<>> rows);
  // Rows as '0'/'1' strings, leftmost character = column 0.
  static CodeMatrix from_strings(const std::vector<std::string>& rows);

  int k() const noexcept { return static_cast<int>(rows_.size()); }
  std::size_t length() const noexcept { return rows_.front().size(); }
  const std::vector<boost::dynamic_bitset<>>& rows() const noexcept { return rows_; }
  bool at(int row, std::size_t column) const { return rows_[static_cast<std::size_t>(row)][column]; }

  // Column j as a k-bit integer with row 0 as the most significant bit.
  Label column(std::size_t j) const;
  std::vector<std::string> to_strings() const;

  friend bool operator==(const CodeMatrix&, const CodeMatrix&) = default;

 private:
  std::vector<boost::dynamic_bitset<>> rows_;
};

// Text format: one row per line as 0/1 characters; '#' comments and blank
// lines are ignored.
CodeMatrix parse_code_matrix(std::istream& in);
CodeMatrix read_code_matrix(const std::string& path);
void write_code_matrix(std::ostream& out, const CodeMatrix& g);

// Rotates [G] by 90 degrees counter-clockwise: hop s (1-based) is column
// n - s + 1 read with the top row as the most significant bit. This
// reproduces the generator order of the textbook [4,3] and [7,4] examples.
// Throws Error on zero or duplicate columns.
GeneratorSet code_to_lh(const CodeMatrix& g);

// Exact inverse of code_to_lh. Throws Error if the hops do not span Z_2^d.
CodeMatrix lh_to_code(const GeneratorSet& set);

// Minimum Hamming weight over the 2^k - 1 nonzero codewords x [G],
// enumerated in Gray-code order. Equals the minimum distance.
std::uint32_t min_weight(const CodeMatrix& g);

// min_weight(G) == relative bisection of code_to_lh(G).
bool verify_duality(const CodeMatrix& g);

// h'_s = h_s M for every hop. Preserves bisection, the cut multiset and the
// distance distribution.
GeneratorSet apply_equivalence(const GeneratorSet& set, const EquivalenceMap& map);

struct Diagonalization {
  GeneratorSet set;
  EquivalenceMap map;
};

// Systematic form: an equivalent set whose first d hops are 1, 2, 4, ...
// Each column's pivot is the lowest-weight unused hop with a 1 there.
// With sort_tail, hops after the first d are sorted ascending.
Diagonalization diagonalize_with_map(const GeneratorSet& set, bool sort_tail = false);
GeneratorSet diagonalize(const GeneratorSet& set, bool sort_tail = false);

struct ExpansionPlan {
  EquivalenceMap map;
  // Transformed new set; hops shared with the old set keep the old port
  // order and come first.
  GeneratorSet set;
  // Hops of `set` absent from the old set. Each costs n/2 recabled links.
  std::size_t cost = 0;
};

// Greedy search over equivalence maps of `next` (elementary row operations,
// seeded random kicks on plateaus) minimizing hops not already in `previous`.
// Heuristic: returns the best plan found within `budget` evaluations.
ExpansionPlan min_change_expansion(const GeneratorSet& previous,
                                   const GeneratorSet& next,
                                   std::uint64_t budget = 20'000,
                                   std::uint64_t seed = 1);

}  // namespace lhnet
