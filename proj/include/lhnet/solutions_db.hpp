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
#include <map>
#include <string>
#include <vector>

#include "lhnet/generator_set.hpp"

namespace lhnet {

inline constexpr int kDbMinDimension = 3;
inline constexpr int kDbMaxDimension = 24;
inline constexpr int kDbMaxHops = 256;

/// One (d, m) solution. Metrics are always recomputed from the hops; the
/// average hop count is kept exactly as total_hops / n.
struct SolutionRecord {
  GeneratorSet set;
  std::uint32_t b = 0;
  int diameter = 0;
  std::uint64_t total_hops = 0;
  std::string provenance;

  int dimension() const noexcept { return set.dimension(); }
  int m() const noexcept { return static_cast<int>(set.size()); }
  std::uint64_t node_count() const noexcept { return set.node_count(); }
  double average_hops() const noexcept {
    return static_cast<double>(total_hops) / static_cast<double>(node_count());
  }

  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

// Computes b, diameter and average hops. Throws Error for disconnected sets.
SolutionRecord make_record(GeneratorSet set, std::string provenance);

// Records of one dimension, keyed by m.
struct RecordSet {
  int dimension = 0;
  std::map<int, SolutionRecord> records;
};

class SolutionDb {
 public:
  // Throws Error when (d, m) falls outside d in [3, 24], m in [d, 256].
  void insert(SolutionRecord record);
  // Fills an empty slot, or replaces a record with strictly higher b, or
  // equal b and a strictly better (diameter, total hops). Returns true if
  // stored.
  bool insert_if_better(SolutionRecord record);

  const SolutionRecord* query(int dimension, int m) const;
  const std::map<int, RecordSet>& record_sets() const noexcept { return sets_; }
  // Every record in (d, m) order.
  std::vector<const SolutionRecord*> all() const;
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  // Recomputes every record; returns one message per inconsistency.
  std::vector<std::string> verify() const;

  // Text format, one block per record:
  //   record d=<d> m=<m> b=<b> diam=<D> avg=<total>/<n>
  //   provenance <free text>
  //   <hex hop>   (m lines)
  void save(std::ostream& out) const;
  void save(const std::string& path) const;
  // Parses and integrity-checks every record (throws Error on mismatch).
  static SolutionDb load(std::istream& in);
  static SolutionDb load(const std::string& path);

 private:
  std::map<int, RecordSet> sets_;
};

// Translates a code-matrix file and stores the resulting record.
const SolutionRecord& ingest_code_file(SolutionDb& db, const std::string& path);

// The three worked design examples (d=5 m=9, d=8 m=18, d=16 m=38).
std::vector<GeneratorSet> design_example_sets();
std::size_t seed_design_examples(SolutionDb& db);

// Worked design examples plus construction families: hypercubes and folded cubes
// (d <= 16), high-density sets and their reductions (d <= 8), b=3 sets and
// their b=4 augmentations (d <= 12), and greedy code extensions (d <= 10).
SolutionDb default_database();

}  // namespace lhnet
