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
#include <span>
#include <string>
#include <vector>

#include "lhnet/walsh.hpp"

namespace lhnet {

/// Cayley generator list S_m = {h_1..h_m} over Z_2^d.
///
/// Hops are distinct, nonzero and below n = 2^d. Every element of Z_2^d is
/// its own inverse, so the list is automatically inverse-closed. Order is
/// significant: hop s is wired to port s of every switch.
class GeneratorSet {
 public:
  GeneratorSet(int dimension, std::vector<Label> hops);

  int dimension() const noexcept { return dimension_; }
  std::size_t node_count() const noexcept { return std::size_t{1} << dimension_; }
  std::size_t size() const noexcept { return hops_.size(); }
  std::span<const Label> hops() const noexcept { return hops_; }
  Label operator[](std::size_t s) const { return hops_[s]; }

  bool contains(Label h) const noexcept;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  int dimension_;
  std::vector<Label> hops_;
};

GeneratorSet hypercube(int dimension);

// Hop-list text format:
//   d=<int> q=2
//   <hex hop>          one per line, no 0x prefix
// Lines starting with '#' and blank lines are ignored.
GeneratorSet parse_hop_list(std::istream& in);
GeneratorSet read_hop_list(const std::string& path);
void write_hop_list(std::ostream& out, const GeneratorSet& set);
std::string format_hop_list(const GeneratorSet& set);

// Uppercase hex without padding ("1A"), or zero-padded to `width` digits.
std::string hex(std::uint64_t value, int width = 0);
std::uint64_t parse_hex(const std::string& text);

}  // namespace lhnet
