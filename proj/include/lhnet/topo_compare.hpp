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
#include <optional>
#include <string>
#include <vector>

#include "lhnet/designer.hpp"
#include "lhnet/solutions_db.hpp"

namespace lhnet {

/// One network in a Ports/Switch and Cables/Port comparison. All ratios are
/// exact; cables_per_port() == (switches * links_per_switch / 2) / ports.
struct ComparisonRow {
  std::string topology;
  int size_index = 0;          // d, dimensions, levels or h, per family
  std::uint64_t switches = 0;  // n
  int radix = 0;               // R
  std::uint64_t ports = 0;     // P
  std::uint64_t cables = 0;    // topological links
  Rational phi{1};
  // For LH rows: record parameters.
  int dimension = 0;
  int m = 0;
  std::uint32_t b = 0;
  // LH yield over this row's yield; set on alternative rows.
  std::optional<Rational> lh_ratio;
  std::string formula;

  Rational ports_per_switch() const;
  Rational cables_per_port() const;
  // Average topological links per switch, 2 cables / n.
  Rational links_per_switch() const;
};

enum class Family { kHypercube, kFoldedCube, kFlattenedButterfly, kFatTree, kDragonfly };

Family parse_family(const std::string& name);
std::string family_name(Family family);

// Per record: P = n (R - m), ports/switch = R - m, cables/port = m / (2(R - m)),
// phi = (R - m) / b. Throws Error when R <= m.
std::vector<ComparisonRow> lh_series(const std::vector<const SolutionRecord*>& records,
                                     int radix);

// Non-oversubscribed configuration of one family at radix R for each size
// index in [first, last]. Size indices the radix cannot support are skipped.
// Throws Error for an index that is invalid for the family.
std::vector<ComparisonRow> alternative_series(Family family, int radix, int first, int last);
ComparisonRow alternative_row(Family family, int radix, int size_index);

// For each alternative row, the LH design matching its P at the same radix
// (phi = 1, at least P ports), with lh_ratio filled in on the alternative.
std::vector<ComparisonRow> compare_with_lh(const SolutionDb& db,
                                           std::vector<ComparisonRow> alternatives);

/// Best LH yield among the records of one dimension at radix R, against a
/// hypercube of the same size. The LH yield is max over records of
/// min(b, R - m), the free ports usable at phi <= 1. A hypercube with w
/// parallel links per dimension needs E <= w and dw + E <= R, so its yield
/// is at most R/(d+1); the ratio is taken against that bound and therefore
/// never overstates the LH advantage. The integer yield floor(R/(d+1)) is
/// kept alongside.
struct DimensionYield {
  int dimension = 0;
  std::int64_t lh_ports_per_switch = 0;
  std::int64_t hypercube_ports_per_switch = 0;
  Rational hypercube_bound{0};
  Rational ratio{0};
};

std::vector<DimensionYield> hypercube_yield_ratios(const SolutionDb& db, int radix,
                                                   int first_dimension, int last_dimension);

void write_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);

}  // namespace lhnet
