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

#include "lhnet/generator_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "lhnet/error.hpp"

namespace lhnet {

GeneratorSet::GeneratorSet(int dimension, std::vector<Label> hops)
    : dimension_(dimension), hops_(std::move(hops)) {
  if (dimension_ < 1 || dimension_ > kMaxDimension) {
    throw Error("dimension d=" + std::to_string(dimension_) +
                " outside [1, 24]");
  }
  if (hops_.empty()) throw Error("generator set has no hops");
  const std::uint64_t n = node_count();
  std::unordered_set<Label> seen;
  for (Label h : hops_) {
    if (h == 0) throw Error("hop 0 is the identity and cannot be a generator");
    if (h >= n) {
      throw Error("hop " + hex(h) + " does not fit in d=" +
                  std::to_string(dimension_) + " bits");
    }
    if (!seen.insert(h).second) throw Error("duplicate hop " + hex(h));
  }
}

bool GeneratorSet::contains(Label h) const noexcept {
  return std::find(hops_.begin(), hops_.end(), h) != hops_.end();
}

GeneratorSet hypercube(int dimension) {
  std::vector<Label> hops;
  for (int i = 0; i < dimension; ++i) hops.push_back(Label{1} << i);
  return GeneratorSet(dimension, std::move(hops));
}

std::string hex(std::uint64_t value, int width) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, 16);
  std::string digits(buf, end);
  std::transform(digits.begin(), digits.end(), digits.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (static_cast<int>(digits.size()) < width) {
    digits.insert(0, static_cast<std::size_t>(width) - digits.size(), '0');
  }
  return digits;
}

std::uint64_t parse_hex(const std::string& text) {
  std::string_view s = text;
  if (s.starts_with("0x") || s.starts_with("0X")) s.remove_prefix(2);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, 16);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("not a hex number: '" + text + "'");
  }
  return value;
}

namespace {

std::string trim(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

int parse_header(const std::string& line) {
  std::istringstream fields(line);
  std::string token;
  int d = -1;
  int q = 2;
  while (fields >> token) {
    if (token.starts_with("d=")) {
      d = std::stoi(token.substr(2));
    } else if (token.starts_with("q=")) {
      q = std::stoi(token.substr(2));
    } else {
      throw ParseError("unexpected header field '" + token + "'");
    }
  }
  if (d < 0) throw ParseError("header line must start with d=<int>");
  if (q != 2) throw ParseError("only q=2 hop lists are supported");
  return d;
}

}  // namespace

GeneratorSet parse_hop_list(std::istream& in) {
  std::string raw;
  int d = -1;
  std::vector<Label> hops;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    try {
      if (d < 0) {
        d = parse_header(line);
      } else {
        hops.push_back(static_cast<Label>(parse_hex(line)));
      }
    } catch (const std::logic_error&) {
      throw ParseError("line " + std::to_string(line_no) + ": malformed '" +
                       line + "'");
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (d < 0) throw ParseError("hop list is missing the 'd=<int> q=2' header");
  return GeneratorSet(d, std::move(hops));
}

GeneratorSet read_hop_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open hop list '" + path + "'");
  return parse_hop_list(in);
}

void write_hop_list(std::ostream& out, const GeneratorSet& set) {
  out << "d=" << set.dimension() << " q=2\n";
  for (Label h : set.hops()) out << hex(h) << '\n';
}

std::string format_hop_list(const GeneratorSet& set) {
  std::ostringstream out;
  write_hop_list(out, set);
  return out.str();
}

}  // namespace lhnet
