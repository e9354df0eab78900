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

#include "lhnet/designer.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string>

#include "lhnet/error.hpp"

namespace lhnet {

Rational oversubscription(std::int64_t external_ports, std::int64_t b) {
  if (b <= 0) throw Error("oversubscription: bisection b must be positive");
  return Rational(external_ports, b);
}

void Requirement::validate() const {
  if (ports < 1) throw Error("requirement: P must be at least 1");
  if (radix < 2) throw Error("requirement: R must be at least 2");
  // Mixed rational/int comparisons recurse forever under C++20 rewritten
  // operators with this Boost, so compare against Rational values only.
  const Rational zero{0};
  if (phi <= zero) throw Error("requirement: phi must be positive");
  if (weight_ports < zero || weight_phi < zero || weight_ports + weight_phi != Rational{1}) {
    throw Error("requirement: weights must be non-negative and sum to 1");
  }
}

namespace {

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace

DesignMatch find_solution(const SolutionDb& db, const Requirement& req) {
  req.validate();
  if (db.empty()) throw Error("find_solution: the solutions database is empty");

  const double target_ports = static_cast<double>(req.ports);
  const double target_phi = to_double(req.phi);
  const double wp = to_double(req.weight_ports);
  const double wphi = to_double(req.weight_phi);

  std::optional<DesignMatch> best;
  // all() walks (d, m) in increasing order, so keeping the first of equal
  // scores prefers smaller n, then smaller m.
  for (const SolutionRecord* rec : db.all()) {
    const std::int64_t e = req.radix - rec->m();
    if (e <= 0 || rec->b == 0) continue;
    const std::uint64_t ports = rec->node_count() * static_cast<std::uint64_t>(e);
    if (req.at_least_ports && ports < req.ports) continue;
    DesignMatch match;
    match.record = rec;
    match.external_per_switch = e;
    match.ports = ports;
    match.phi = oversubscription(e, rec->b);
    match.port_error = std::fabs(static_cast<double>(ports) - target_ports) / target_ports;
    match.phi_error = std::fabs(to_double(match.phi) - target_phi) / target_phi;
    match.score = wp * match.port_error + wphi * match.phi_error;
    if (!best || match.score < best->score - 1e-12 * std::max(1.0, best->score)) {
      best = match;
    }
  }
  if (!best) {
    throw Error(req.at_least_ports
                    ? "find_solution: no record provides at least the requested ports"
                    : "find_solution: no record leaves free ports at this radix");
  }
  return *best;
}

WiringTable::WiringTable(GeneratorSet set, int radix) : set_(std::move(set)), radix_(radix) {
  if (radix_ <= static_cast<int>(set_.size())) {
    throw Error("wiring table: radix R=" + std::to_string(radix_) +
                " leaves no free port for m=" + std::to_string(set_.size()));
  }
}

std::optional<Label> WiringTable::peer(Label v, int port) const {
  if (port < 1 || port > radix_) throw Error("wiring table: port out of range");
  if (port > static_cast<int>(set_.size())) return std::nullopt;
  return v ^ set_[static_cast<std::size_t>(port - 1)];
}

std::vector<std::optional<Label>> WiringTable::row(Label v) const {
  if (v >= rows()) throw Error("wiring table: switch label out of range");
  std::vector<std::optional<Label>> out;
  out.reserve(static_cast<std::size_t>(radix_));
  for (int port = 1; port <= radix_; ++port) out.push_back(peer(v, port));
  return out;
}

std::string WiringTable::format_row(Label v) const {
  const int width = (set_.dimension() + 3) / 4;
  std::string line = hex(v) + ":";
  for (const auto& p : row(v)) {
    line += '\t';
    line += p ? hex(*p, width) : std::string("**");
  }
  return line;
}

void WiringTable::write_tsv(std::ostream& out, Label first, Label last) const {
  if (first > last || last >= rows()) throw Error("wiring table: bad row range");
  out << "Sw/Pt:";
  for (int port = 1; port <= radix_; ++port) out << "\t#" << port;
  out << '\n';
  for (Label v = first;; ++v) {
    out << format_row(v) << '\n';
    if (v == last) break;
  }
}

void WiringTable::write_tsv(std::ostream& out) const {
  write_tsv(out, 0, static_cast<Label>(rows() - 1));
}

WiringTable wiring_table(const SolutionRecord& record, int radix) {
  return WiringTable(record.set, radix);
}

}  // namespace lhnet
