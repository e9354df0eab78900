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

#include "lhnet/walsh.hpp"

#include <string>

#include "lhnet/error.hpp"

namespace lhnet {

void fwht_inplace(std::span<std::int64_t> values) {
  const std::size_t n = values.size();
  if (!is_power_of_two(n) || n > (std::size_t{1} << kMaxDimension)) {
    throw Error("fwht: length " + std::to_string(n) +
                " is not a power of two in [1, 2^24]");
  }
  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t block = 0; block < n; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const std::int64_t a = values[i];
        const std::int64_t b = values[i + half];
        values[i] = a + b;
        values[i + half] = a - b;
      }
    }
  }
}

Spectrum fwht(Spectrum values) {
  fwht_inplace(values);
  return values;
}

}  // namespace lhnet
