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

#include "lhnet/topo_compare.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "lhnet/error.hpp"

namespace lhnet {

Rational ComparisonRow::ports_per_switch() const {
  return Rational(static_cast<std::int64_t>(ports), static_cast<std::int64_t>(switches));
}

Rational ComparisonRow::cables_per_port() const {
  return Rational(static_cast<std::int64_t>(cables), static_cast<std::int64_t>(ports));
}

Rational ComparisonRow::links_per_switch() const {
  return Rational(2 * static_cast<std::int64_t>(cables), static_cast<std::int64_t>(switches));
}

Family parse_family(const std::string& name) {
  if (name == "hypercube") return Family::kHypercube;
  if (name == "folded_cube") return Family::kFoldedCube;
  if (name == "flattened_butterfly") return Family::kFlattenedButterfly;
  if (name == "fat_tree") return Family::kFatTree;
  if (name == "dragonfly") return Family::kDragonfly;
  throw Error("unknown topology family '" + name + "'");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::kHypercube: return "hypercube";
    case Family::kFoldedCube: return "folded_cube";
    case Family::kFlattenedButterfly: return "flattened_butterfly";
    case Family::kFatTree: return "fat_tree";
    case Family::kDragonfly: return "dragonfly";
  }
  return "unknown";
}

std::vector<ComparisonRow> lh_series(const std::vector<const SolutionRecord*>& records,
                                     int radix) {
  std::vector<ComparisonRow> rows;
  for (const SolutionRecord* rec : records) {
    const int e = radix - rec->m();
    if (e <= 0) {
      throw Error("lh_series: radix R=" + std::to_string(radix) +
                  " leaves no free port for m=" + std::to_string(rec->m()));
    }
    ComparisonRow row;
    row.topology = "LH";
    row.size_index = rec->dimension();
    row.switches = rec->node_count();
    row.radix = radix;
    row.ports = rec->node_count() * static_cast<std::uint64_t>(e);
    row.cables = rec->node_count() * static_cast<std::uint64_t>(rec->m()) / 2;
    row.phi = oversubscription(e, rec->b);
    row.dimension = rec->dimension();
    row.m = rec->m();
    row.b = rec->b;
    row.formula = "n=2^d; E=R-m; P=nE; cables=nm/2; phi=E/b";
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::uint64_t ipow(std::uint64_t base, int exponent) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (out > (std::uint64_t{1} << 62) / std::max<std::uint64_t>(base, 1)) {
      throw LimitError("comparison: configuration too large");
    }
    out *= base;
  }
  return out;
}

}  // namespace

ComparisonRow alternative_row(Family family, int radix, int size_index) {
  ComparisonRow row;
  row.topology = family_name(family);
  row.size_index = size_index;
  row.radix = radix;
  const auto R = static_cast<std::uint64_t>(radix);
  switch (family) {
    case Family::kHypercube: {
      const int d = size_index;
      if (d < 1 || d > 40) throw Error("hypercube: d must be in [1, 40]");
      const std::uint64_t w = R / static_cast<std::uint64_t>(d + 1);
      if (w == 0) throw LimitError("hypercube: radix too small for d");
      row.switches = std::uint64_t{1} << d;
      row.ports = row.switches * w;
      row.cables = row.switches * static_cast<std::uint64_t>(d) * w / 2;
      row.formula = "n=2^d; w=floor(R/(d+1)) links per dimension; E=w; P=nw; cables=n*d*w/2";
      break;
    }
    case Family::kFoldedCube: {
      const int d = size_index;
      if (d < 2 || d > 40) throw Error("folded_cube: d must be in [2, 40]");
      const std::uint64_t w = R / static_cast<std::uint64_t>(d + 3);
      if (w == 0) throw LimitError("folded_cube: radix too small for d");
      row.switches = std::uint64_t{1} << d;
      row.ports = row.switches * 2 * w;
      row.cables = row.switches * static_cast<std::uint64_t>(d + 1) * w / 2;
      row.formula = "n=2^d; b=2; w=floor(R/(d+3)); E=2w; P=2nw; cables=n*(d+1)*w/2";
      break;
    }
    case Family::kFlattenedButterfly: {
      const int dims = size_index;
      if (dims < 1 || dims > 16) throw Error("flattened_butterfly: dimensions in [1, 16]");
      std::uint64_t k = 0;
      for (std::uint64_t c = 2; c / 2 + static_cast<std::uint64_t>(dims) * (c - 1) <= R; c += 2) {
        k = c;
      }
      if (k == 0) throw LimitError("flattened_butterfly: radix too small");
      row.switches = ipow(k, dims);
      row.ports = row.switches * (k / 2);
      row.cables = row.switches * static_cast<std::uint64_t>(dims) * (k - 1) / 2;
      row.formula = "k-ary D-flat; k=max even with k/2+D(k-1)<=R; n=k^D; E=k/2; P=nk/2; "
                    "cables=n*D*(k-1)/2";
      break;
    }
    case Family::kFatTree: {
      const int levels = size_index;
      if (levels < 2 || levels > 8) throw Error("fat_tree: levels in [2, 8]");
      if (radix < 2 || radix % 2 != 0) throw Error("fat_tree: radix must be even");
      const std::uint64_t half = R / 2;
      row.switches = static_cast<std::uint64_t>(2 * levels - 1) * ipow(half, levels - 1);
      row.ports = 2 * ipow(half, levels);
      row.cables = static_cast<std::uint64_t>(levels - 1) * row.ports;
      row.formula = "folded Clos, L levels; n=(2L-1)(R/2)^(L-1); P=2(R/2)^L; cables=(L-1)P";
      break;
    }
    case Family::kDragonfly: {
      const int h = size_index;
      if (h < 1 || h > 64) throw Error("dragonfly: h in [1, 64]");
      if (static_cast<std::uint64_t>(4 * h - 1) > R) throw LimitError("dragonfly: radix below 4h-1");
      const std::uint64_t p = static_cast<std::uint64_t>(h);
      const std::uint64_t a = 2 * p;
      const std::uint64_t groups = a * p + 1;
      row.switches = a * groups;
      row.ports = p * row.switches;
      row.cables = groups * a * (a - 1) / 2 + groups * (groups - 1) / 2;
      row.formula = "balanced dragonfly p=h a=2h g=ah+1; n=ag; P=pn; "
                    "cables=g*a(a-1)/2+g(g-1)/2";
      break;
    }
  }
  return row;
}

std::vector<ComparisonRow> alternative_series(Family family, int radix, int first, int last) {
  if (first > last) throw Error("comparison: empty size range");
  std::vector<ComparisonRow> rows;
  for (int s = first; s <= last; ++s) {
    try {
      rows.push_back(alternative_row(family, radix, s));
    } catch (const LimitError&) {
      // This radix cannot build the size; skip it.
    }
  }
  return rows;
}

std::vector<ComparisonRow> compare_with_lh(const SolutionDb& db,
                                           std::vector<ComparisonRow> alternatives) {
  std::vector<ComparisonRow> out;
  for (ComparisonRow& alt : alternatives) {
    Requirement req;
    req.ports = alt.ports;
    req.radix = alt.radix;
    req.at_least_ports = true;
    std::optional<ComparisonRow> lh;
    try {
      const DesignMatch match = find_solution(db, req);
      lh = lh_series({match.record}, alt.radix).front();
      lh->size_index = alt.size_index;
      alt.lh_ratio = lh->ports_per_switch() / alt.ports_per_switch();
    } catch (const Error&) {
      // No LH record covers this P at this radix; leave the ratio empty.
    }
    out.push_back(std::move(alt));
    if (lh) out.push_back(std::move(*lh));
  }
  return out;
}

std::vector<DimensionYield> hypercube_yield_ratios(const SolutionDb& db, int radix,
                                                   int first_dimension, int last_dimension) {
  std::vector<DimensionYield> out;
  for (int d = first_dimension; d <= last_dimension; ++d) {
    DimensionYield y;
    y.dimension = d;
    y.hypercube_ports_per_switch = radix / (d + 1);
    const auto set = db.record_sets().find(d);
    if (set != db.record_sets().end()) {
      for (const auto& [m, rec] : set->second.records) {
        if (m >= radix) continue;
        y.lh_ports_per_switch =
            std::max<std::int64_t>(y.lh_ports_per_switch,
                                   std::min<std::int64_t>(rec.b, radix - m));
      }
    }
    y.hypercube_bound = Rational(radix, d + 1);
    y.ratio = Rational(y.lh_ports_per_switch) / y.hypercube_bound;
    out.push_back(y);
  }
  return out;
}

namespace {

std::string exact(const Rational& r) {
  std::ostringstream s;
  s << r.numerator() << '/' << r.denominator();
  return s.str();
}

std::string decimal(const Rational& r) {
  std::ostringstream s;
  s.precision(6);
  s << std::fixed
    << static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  return s.str();
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
  out << "topology,size_index,switches,radix,ports,cables,d,m,b,phi,"
         "ports_per_switch,ports_per_switch_exact,cables_per_port,cables_per_port_exact,"
         "lh_ratio,lh_ratio_exact,formula\n";
  for (const ComparisonRow& r : rows) {
    out << r.topology << ',' << r.size_index << ',' << r.switches << ',' << r.radix << ','
        << r.ports << ',' << r.cables << ',';
    if (r.topology == "LH") {
      out << r.dimension << ',' << r.m << ',' << r.b << ',';
    } else {
      out << ",,,";
    }
    out << exact(r.phi) << ',' << decimal(r.ports_per_switch()) << ','
        << exact(r.ports_per_switch()) << ',' << decimal(r.cables_per_port()) << ','
        << exact(r.cables_per_port()) << ',';
    if (r.lh_ratio) {
      out << decimal(*r.lh_ratio) << ',' << exact(*r.lh_ratio);
    } else {
      out << ',';
    }
    out << ",\"" << r.formula << "\"\n";
  }
}

}  // namespace lhnet
