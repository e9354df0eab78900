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
#include <vector>

#include <boost/rational.hpp>

#include "lhnet/solutions_db.hpp"

namespace lhnet {

using Rational = boost::rational<std::int64_t>;

// Oversubscription phi = (P/2) / B = E / b. Throws Error when b = 0.
Rational oversubscription(std::int64_t external_ports, std::int64_t b);

struct Requirement {
  std::uint64_t ports = 0;   // P
  int radix = 0;             // R
  Rational phi{1};
  bool at_least_ports = false;
  Rational weight_ports{7, 10};
  Rational weight_phi{3, 10};

  // P >= 1, R >= 2, phi > 0, weights non-negative and summing to 1.
  void validate() const;
};

struct DesignMatch {
  const SolutionRecord* record = nullptr;
  std::int64_t external_per_switch = 0;  // E = R - m
  std::uint64_t ports = 0;               // n E
  Rational phi;                          // E / b
  double port_error = 0;                 // |P(d,m) - P| / P
  double phi_error = 0;                  // |phi(d,m) - phi| / phi
  double score = 0;
};

// Scans every record with E = R - m > 0 and returns the lowest weighted
// relative error (ties: smaller n, then smaller m). Throws Error on an empty
// database or when no record is admissible.
DesignMatch find_solution(const SolutionDb& db, const Requirement& req);

/// Port map for every switch: port s (1-based) of switch v goes to v ^ h_s,
/// ports m+1..R are free. Rows are computed on demand.
class WiringTable {
 public:
  // Throws Error when R <= m.
  WiringTable(GeneratorSet set, int radix);

  std::size_t rows() const noexcept { return set_.node_count(); }
  int radix() const noexcept { return radix_; }
  const GeneratorSet& set() const noexcept { return set_; }

  // R entries; nullopt marks a free port.
  std::vector<std::optional<Label>> row(Label v) const;
  std::optional<Label> peer(Label v, int port) const;

  // Tab-separated: a "Sw/Pt:" header with #1..#R, then one line per switch
  // in [first, last]: "<hex>:" followed by peers zero-padded to ceil(d/4)
  // hex digits, free ports as "**".
  void write_tsv(std::ostream& out, Label first, Label last) const;
  void write_tsv(std::ostream& out) const;
  std::string format_row(Label v) const;

 private:
  GeneratorSet set_;
  int radix_;
};

WiringTable wiring_table(const SolutionRecord& record, int radix);

}  // namespace lhnet
