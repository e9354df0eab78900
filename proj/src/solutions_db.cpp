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

#include "lhnet/solutions_db.hpp"

#include <fstream>
#include <optional>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "lhnet/bisection.hpp"
#include "lhnet/constructions.hpp"
#include "lhnet/ecc.hpp"
#include "lhnet/error.hpp"
#include "lhnet/graph.hpp"

namespace lhnet {

SolutionRecord make_record(GeneratorSet set, std::string provenance) {
  const BisectionReport report = bisection_fwht(set);
  const DistanceProfile profile = distance_profile(set);
  return SolutionRecord{std::move(set), report.b, profile.diameter, profile.total_hops,
                        std::move(provenance)};
}

namespace {

void check_bounds(const SolutionRecord& r) {
  if (r.dimension() < kDbMinDimension || r.dimension() > kDbMaxDimension) {
    throw Error("record dimension d=" + std::to_string(r.dimension()) +
                " outside the database range [3, 24]");
  }
  if (r.m() < r.dimension() || r.m() > kDbMaxHops) {
    throw Error("record m=" + std::to_string(r.m()) + " outside [d, 256] for d=" +
                std::to_string(r.dimension()));
  }
}

}  // namespace

void SolutionDb::insert(SolutionRecord record) {
  check_bounds(record);
  RecordSet& set = sets_[record.dimension()];
  set.dimension = record.dimension();
  const int m = record.m();
  set.records.insert_or_assign(m, std::move(record));
}

bool SolutionDb::insert_if_better(SolutionRecord record) {
  check_bounds(record);
  if (const SolutionRecord* existing = query(record.dimension(), record.m())) {
    const auto rank = [](const SolutionRecord& r) {
      return std::make_tuple(-static_cast<std::int64_t>(r.b), r.diameter, r.total_hops);
    };
    if (!(rank(record) < rank(*existing))) return false;
  }
  insert(std::move(record));
  return true;
}

const SolutionRecord* SolutionDb::query(int dimension, int m) const {
  const auto set = sets_.find(dimension);
  if (set == sets_.end()) return nullptr;
  const auto rec = set->second.records.find(m);
  return rec == set->second.records.end() ? nullptr : &rec->second;
}

std::vector<const SolutionRecord*> SolutionDb::all() const {
  std::vector<const SolutionRecord*> out;
  for (const auto& [d, set] : sets_) {
    for (const auto& [m, rec] : set.records) out.push_back(&rec);
  }
  return out;
}

std::size_t SolutionDb::size() const noexcept {
  std::size_t total = 0;
  for (const auto& [d, set] : sets_) total += set.records.size();
  return total;
}

std::vector<std::string> SolutionDb::verify() const {
  std::vector<std::string> problems;
  for (const SolutionRecord* rec : all()) {
    const std::string key = "record d=" + std::to_string(rec->dimension()) +
                            " m=" + std::to_string(rec->m());
    try {
      const SolutionRecord fresh = make_record(rec->set, rec->provenance);
      if (fresh.b != rec->b) {
        problems.push_back(key + ": stored b=" + std::to_string(rec->b) +
                           ", recomputed " + std::to_string(fresh.b));
      }
      if (fresh.diameter != rec->diameter) {
        problems.push_back(key + ": stored diam=" + std::to_string(rec->diameter) +
                           ", recomputed " + std::to_string(fresh.diameter));
      }
      if (fresh.total_hops != rec->total_hops) {
        problems.push_back(key + ": stored avg numerator " +
                           std::to_string(rec->total_hops) + ", recomputed " +
                           std::to_string(fresh.total_hops));
      }
    } catch (const Error& e) {
      problems.push_back(key + ": " + e.what());
    }
  }
  return problems;
}

void SolutionDb::save(std::ostream& out) const {
  out << "# lhnet solutions database\n";
  for (const SolutionRecord* rec : all()) {
    out << "\nrecord d=" << rec->dimension() << " m=" << rec->m() << " b=" << rec->b
        << " diam=" << rec->diameter << " avg=" << rec->total_hops << '/'
        << rec->node_count() << '\n';
    out << "provenance " << rec->provenance << '\n';
    for (Label h : rec->set.hops()) out << hex(h) << '\n';
  }
}

void SolutionDb::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write database '" + path + "'");
  save(out);
}

namespace {

struct PendingRecord {
  int d = -1;
  int m = -1;
  std::uint32_t b = 0;
  int diameter = 0;
  std::uint64_t total = 0;
  std::uint64_t denominator = 0;
  std::string provenance;
  std::vector<Label> hops;
  std::size_t line = 0;
};

PendingRecord parse_record_header(const std::string& line, std::size_t line_no) {
  PendingRecord p;
  p.line = line_no;
  std::istringstream fields(line.substr(6));
  std::string token;
  try {
    while (fields >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) throw ParseError("field without '='");
      const std::string key = token.substr(0, eq);
      const std::string value = token.substr(eq + 1);
      if (key == "d") {
        p.d = std::stoi(value);
      } else if (key == "m") {
        p.m = std::stoi(value);
      } else if (key == "b") {
        p.b = static_cast<std::uint32_t>(std::stoul(value));
      } else if (key == "diam") {
        p.diameter = std::stoi(value);
      } else if (key == "avg") {
        const auto slash = value.find('/');
        if (slash == std::string::npos) throw ParseError("avg must be num/den");
        p.total = std::stoull(value.substr(0, slash));
        p.denominator = std::stoull(value.substr(slash + 1));
      } else {
        throw ParseError("unknown field '" + key + "'");
      }
    }
  } catch (const std::logic_error&) {
    throw ParseError("line " + std::to_string(line_no) + ": malformed record header");
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
  }
  if (p.d < 0 || p.m < 0 || p.denominator == 0) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": record header needs d, m, b, diam and avg");
  }
  return p;
}

SolutionRecord finish(const PendingRecord& p) {
  const std::string where = "record at line " + std::to_string(p.line);
  if (static_cast<int>(p.hops.size()) != p.m) {
    throw ParseError(where + ": header says m=" + std::to_string(p.m) + " but " +
                     std::to_string(p.hops.size()) + " hops follow");
  }
  SolutionRecord rec{GeneratorSet(p.d, p.hops), p.b, p.diameter, p.total, p.provenance};
  if (p.denominator != rec.node_count()) {
    throw Error(where + ": avg denominator must equal n=" + std::to_string(rec.node_count()));
  }
  const SolutionRecord fresh = make_record(rec.set, rec.provenance);
  if (fresh.b != rec.b || fresh.diameter != rec.diameter ||
      fresh.total_hops != rec.total_hops) {
    throw Error(where + ": stored metrics (b=" + std::to_string(rec.b) +
                " diam=" + std::to_string(rec.diameter) + " avg=" +
                std::to_string(rec.total_hops) + "/" + std::to_string(rec.node_count()) +
                ") disagree with the hops (b=" + std::to_string(fresh.b) +
                " diam=" + std::to_string(fresh.diameter) + " avg=" +
                std::to_string(fresh.total_hops) + "/" +
                std::to_string(fresh.node_count()) + ")");
  }
  return rec;
}

}  // namespace

SolutionDb SolutionDb::load(std::istream& in) {
  SolutionDb db;
  std::optional<PendingRecord> pending;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    const std::string line = raw.substr(first);
    if (line.starts_with("record ")) {
      if (pending) db.insert(finish(*pending));
      pending = parse_record_header(line, line_no);
    } else if (!pending) {
      throw ParseError("line " + std::to_string(line_no) + ": data before any record header");
    } else if (line.starts_with("provenance")) {
      pending->provenance = line.size() > 11 ? line.substr(11) : std::string{};
    } else {
      try {
        pending->hops.push_back(static_cast<Label>(parse_hex(line)));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
  }
  if (pending) db.insert(finish(*pending));
  return db;
}

SolutionDb SolutionDb::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open database '" + path + "'");
  return load(in);
}

const SolutionRecord& ingest_code_file(SolutionDb& db, const std::string& path) {
  const CodeMatrix g = read_code_matrix(path);
  SolutionRecord rec = make_record(code_to_lh(g), "code translation of " + path);
  const int d = rec.dimension();
  const int m = rec.m();
  db.insert(std::move(rec));
  return *db.query(d, m);
}

std::vector<GeneratorSet> design_example_sets() {
  std::vector<Label> example3;
  for (int i = 0; i < 16; ++i) example3.push_back(Label{1} << i);
  for (Label h : {0x06F2u, 0x1BD0u, 0x1F3Du, 0x3D72u, 0x6B64u, 0x775Cu, 0x893Au,
                  0x8B81u, 0x9914u, 0xA4C2u, 0xA750u, 0xB70Eu, 0xBFF1u, 0xC57Du,
                  0xD0A6u, 0xD1CAu, 0xE6B5u, 0xEAB9u, 0xF2E8u, 0xF313u, 0xF9BFu,
                  0xFC31u}) {
    example3.push_back(h);
  }
  return {
      GeneratorSet(5, {0x01, 0x02, 0x04, 0x08, 0x10, 0x0E, 0x0F, 0x14, 0x19}),
      GeneratorSet(8, {0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1A, 0x2D,
                       0x47, 0x78, 0x7E, 0x8E, 0x9D, 0xB2, 0xD1, 0xFB}),
      GeneratorSet(16, std::move(example3)),
  };
}

std::size_t seed_design_examples(SolutionDb& db) {
  const auto sets = design_example_sets();
  const char* names[] = {"design example 1 (P=96 R=12)", "design example 2 (P=1536 R=24)",
                         "design example 3 (P=655360 R=48)"};
  for (std::size_t i = 0; i < sets.size(); ++i) db.insert(make_record(sets[i], names[i]));
  return sets.size();
}

namespace {

// Above d = 10 the greedy chain is cut at radix-64 scale to keep seeding fast.
constexpr int kGreedyMaxHopsLarge = 64;

}  // namespace

SolutionDb default_database() {
  SolutionDb db;
  const auto add = [&db](const GeneratorSet& set, const std::string& provenance) {
    if (set.size() > static_cast<std::size_t>(kDbMaxHops) ||
        static_cast<int>(set.size()) < set.dimension()) {
      return;
    }
    db.insert_if_better(make_record(set, provenance));
  };

  for (int d = kDbMinDimension; d <= 16; ++d) {
    add(hypercube(d), "construction: hypercube");
    add(folded_cube(d), "construction: folded cube");
  }
  for (int d = kDbMinDimension; d <= 8; ++d) {
    for (int m : HdParams::ladder(d)) {
      const GeneratorSet hd = lh_hd({d, m}, /*diagonalized=*/true);
      add(hd, "construction: high-density");
      if (m - 2 >= d) {
        add(lh_hd_reduced(hd, 1), "construction: high-density minus 1");
        add(lh_hd_reduced(hd, 2), "construction: high-density minus 2");
      }
    }
  }
  for (int d = kDbMinDimension; d <= 12; ++d) {
    const GeneratorSet b3 = low_density_b3(d);
    add(b3, "construction: b=3 cube augmentation");
    add(augment_odd_b(b3), "construction: b=3 cube augmentation + parity hop");
  }
  for (int d = kDbMinDimension; d <= 16; ++d) {
    const int m_max = d <= 10 ? kDbMaxHops : kGreedyMaxHopsLarge;
    for (const GeneratorSet& set : greedy_extension(hypercube(d), m_max)) {
      add(set, "construction: greedy code extension");
    }
  }
  // The worked examples take precedence over any construction.
  seed_design_examples(db);
  return db;
}

}  // namespace lhnet
