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

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace lhnet {

// Largest supported label width; n = 2^d stays at or below 16M.
inline constexpr int kMaxDimension = 24;

using Label = std::uint32_t;
using Spectrum = std::vector<std::int64_t>;

constexpr int parity(std::uint64_t x) noexcept {
  return std::popcount(x) & 1;
}

// Binary Walsh function W_k(x) in {0, 1} over the natural Hadamard order.
constexpr int walsh_binary(Label k, Label x) noexcept { return parity(k & x); }

// Algebraic Walsh function U_k(x) = 1 - 2 W_k(x), in {+1, -1}.
constexpr int walsh_algebraic(Label k, Label x) noexcept {
  return 1 - 2 * walsh_binary(k, x);
}

constexpr bool is_power_of_two(std::size_t n) noexcept {
  return std::has_single_bit(n);
}

// Unnormalized fast Walsh-Hadamard transform, F_k = sum_x U_k(x) f(x).
// Applying it twice multiplies the input by n. Throws Error unless the
// length is a power of two no larger than 2^24.
void fwht_inplace(std::span<std::int64_t> values);
Spectrum fwht(Spectrum values);

}  // namespace lhnet
