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

#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lhnet/bisection.hpp"
#include "lhnet/constructions.hpp"
#include "lhnet/designer.hpp"
#include "lhnet/ecc.hpp"
#include "lhnet/error.hpp"
#include "lhnet/generator_set.hpp"
#include "lhnet/graph.hpp"
#include "lhnet/solutions_db.hpp"
#include "lhnet/topo_compare.hpp"

namespace py = pybind11;
using namespace lhnet;

namespace {

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
}

Rational to_rational(const py::handle& value) {
  const py::object f = py::module_::import("fractions").attr("Fraction")(value);
  return Rational(f.attr("numerator").cast<std::int64_t>(),
                  f.attr("denominator").cast<std::int64_t>());
}

std::vector<Label> hop_vector(const GeneratorSet& set) {
  return {set.hops().begin(), set.hops().end()};
}

}  // namespace

PYBIND11_MODULE(_lhnet, m) {
  m.doc() = "Long Hop networks: Cayley graphs over Z_2^d built from binary linear codes";

  py::register_exception<Error>(m, "LhError", PyExc_ValueError);

  py::class_<GeneratorSet>(m, "GeneratorSet")
      .def(py::init<int, std::vector<Label>>(), py::arg("dimension"), py::arg("hops"))
      .def_property_readonly("dimension", &GeneratorSet::dimension)
      .def_property_readonly("node_count", &GeneratorSet::node_count)
      .def_property_readonly("hops", &hop_vector)
      .def("__len__", &GeneratorSet::size)
      .def("__contains__", &GeneratorSet::contains)
      .def("__eq__", [](const GeneratorSet& a, const GeneratorSet& b) { return a == b; })
      .def("__repr__", [](const GeneratorSet& s) {
        std::string text = "GeneratorSet(d=" + std::to_string(s.dimension()) + ", hops=[";
        for (std::size_t i = 0; i < s.size(); ++i) text += (i ? " " : "") + hex(s[i]);
        return text + "])";
      })
      .def("to_text", &format_hop_list);

  m.def("hypercube", &hypercube, py::arg("dimension"));
  m.def("folded_cube", &folded_cube, py::arg("dimension"));
  m.def("full_mesh", &full_mesh, py::arg("dimension"));
  m.def("parse_hop_list", [](const std::string& text) {
    std::istringstream in(text);
    return parse_hop_list(in);
  });

  py::class_<BisectionReport>(m, "BisectionReport")
      .def_readonly("b", &BisectionReport::b)
      .def_readonly("B", &BisectionReport::B)
      .def_readonly("t", &BisectionReport::t)
      .def_readonly("max_cut", &BisectionReport::max_cut)
      .def("partition", [](const BisectionReport& r) {
        const PartitionVector x = r.partition();
        return std::vector<int>(x.signs().begin(), x.signs().end());
      })
      .def("__repr__", [](const BisectionReport& r) {
        return "b=" + std::to_string(r.b) + " B=" + std::to_string(r.B) + " t=" + hex(r.t);
      });

  m.def("bisection", &bisection_fwht, py::arg("set"));
  m.def("bisection_direct", &bisection_direct, py::arg("set"));
  m.def("brute_force_bisection", &brute_force_bisection, py::arg("set"));
  m.def("walsh_cuts", &walsh_cuts, py::arg("set"));
  m.def("cut_value", [](const GeneratorSet& set, const std::vector<int>& signs) {
    std::vector<std::int8_t> s(signs.begin(), signs.end());
    return cut_value(set, std::span<const std::int8_t>(s));
  });
  m.def("eigenvalues", &eigenvalues, py::arg("set"));
  m.def("fwht", &fwht, py::arg("values"));
  m.def("neighbors", &neighbors, py::arg("set"), py::arg("node"));

  m.def("metrics", [](const GeneratorSet& set) {
    const DistanceProfile p = distance_profile(set);
    py::dict out;
    out["diameter"] = p.diameter;
    out["total_hops"] = p.total_hops;
    out["avg_hops"] = py::module_::import("fractions").attr("Fraction")(p.total_hops, p.node_count());
    out["histogram"] = p.histogram();
    return out;
  });

  m.def("code_to_hops", [](const std::vector<std::string>& rows) {
    return code_to_lh(CodeMatrix::from_strings(rows));
  });
  m.def("hops_to_code", [](const GeneratorSet& set) { return lh_to_code(set).to_strings(); });
  m.def("min_weight", [](const std::vector<std::string>& rows) {
    return min_weight(CodeMatrix::from_strings(rows));
  });
  m.def("verify_duality", [](const std::vector<std::string>& rows) {
    return verify_duality(CodeMatrix::from_strings(rows));
  });
  m.def("diagonalize", &diagonalize, py::arg("set"), py::arg("sort_tail") = false);

  m.def("lh_hd", [](int d, int m_hops, bool diagonalized) {
    return lh_hd({d, m_hops}, diagonalized);
  }, py::arg("dimension"), py::arg("m"), py::arg("diagonalized") = false);
  m.def("low_density_b3", &low_density_b3, py::arg("dimension"), py::arg("seed") = py::none());
  m.def("augment_odd_b", &augment_odd_b, py::arg("set"));
  m.def("optimize_direct", [](int d, int m_hops) {
    const OptimizeResult r = optimize_direct(d, m_hops);
    return py::make_tuple(r.set, r.report, r.diameter);
  });

  py::class_<SolutionRecord>(m, "SolutionRecord")
      .def_readonly("set", &SolutionRecord::set)
      .def_readonly("b", &SolutionRecord::b)
      .def_readonly("diameter", &SolutionRecord::diameter)
      .def_readonly("total_hops", &SolutionRecord::total_hops)
      .def_readonly("provenance", &SolutionRecord::provenance)
      .def_property_readonly("dimension", &SolutionRecord::dimension)
      .def_property_readonly("m", &SolutionRecord::m)
      .def_property_readonly("avg_hops", [](const SolutionRecord& r) {
        return py::module_::import("fractions").attr("Fraction")(r.total_hops, r.node_count());
      });

  py::class_<SolutionDb>(m, "SolutionDb")
      .def(py::init<>())
      .def_static("load", py::overload_cast<const std::string&>(&SolutionDb::load))
      .def("save", py::overload_cast<const std::string&>(&SolutionDb::save, py::const_))
      .def("query", &SolutionDb::query, py::return_value_policy::reference_internal)
      .def("insert", &SolutionDb::insert_if_better)
      .def("verify", &SolutionDb::verify)
      .def("__len__", &SolutionDb::size);
  m.def("default_database", &default_database);
  m.def("make_record", &make_record, py::arg("set"), py::arg("provenance") = "");

  m.def("design", [](const SolutionDb& db, std::uint64_t ports, int radix,
                     const py::object& phi, bool at_least) {
    Requirement req;
    req.ports = ports;
    req.radix = radix;
    req.phi = to_rational(phi);
    req.at_least_ports = at_least;
    const DesignMatch match = find_solution(db, req);
    py::dict out;
    out["record"] = py::cast(*match.record);
    out["external_per_switch"] = match.external_per_switch;
    out["ports"] = match.ports;
    out["phi"] = fraction(match.phi);
    out["score"] = match.score;
    return out;
  }, py::arg("db"), py::arg("ports"), py::arg("radix"), py::arg("phi") = 1,
     py::arg("at_least") = false);

  m.def("wiring_tsv", [](const SolutionRecord& rec, int radix, Label first, Label last) {
    std::ostringstream out;
    wiring_table(rec, radix).write_tsv(out, first, last);
    return out.str();
  }, py::arg("record"), py::arg("radix"), py::arg("first"), py::arg("last"));

  m.def("compare_csv", [](const SolutionDb& db, const std::string& family, int radix, int first,
                          int last) {
    std::ostringstream out;
    write_csv(out, compare_with_lh(db, alternative_series(parse_family(family), radix, first, last)));
    return out.str();
  });
}
