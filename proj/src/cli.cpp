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

#include "lhnet/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lhnet/bisection.hpp"
#include "lhnet/constructions.hpp"
#include "lhnet/designer.hpp"
#include "lhnet/ecc.hpp"
#include "lhnet/error.hpp"
#include "lhnet/generator_set.hpp"
#include "lhnet/graph.hpp"
#include "lhnet/solutions_db.hpp"
#include "lhnet/topo_compare.hpp"

namespace lhnet::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string decimal(double value, int precision) {
  std::ostringstream s;
  s << std::setprecision(precision) << value;
  return s.str();
}

std::string rational_text(const Rational& r) {
  std::ostringstream s;
  s << r.numerator() << '/' << r.denominator() << " ("
    << decimal(static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()), 10)
    << ')';
  return s.str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text));
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::int64_t scale = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) scale *= 10;
    return Rational(std::stoll(digits), scale);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
}

std::pair<std::string, std::string> split_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {text, text};
  return {text.substr(0, dots), text.substr(dots + 2)};
}

// Writes to the -o file when given, else to `out`.
void emit(std::ostream& out, const std::string& path,
          const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot write '" + path + "'");
  body(file);
}

SolutionDb open_database(const std::string& flag) {
  std::string path = flag;
  if (path.empty()) {
    if (const char* env = std::getenv("LH_DB")) path = env;
  }
  if (path.empty()) return default_database();
  return SolutionDb::load(path);
}

std::string database_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("LH_DB")) return env;
  throw UsageError("no database path: pass --db or set LH_DB");
}

void print_report(std::ostream& out, const BisectionReport& r) {
  out << "b=" << r.b << " B=" << r.B << " t=" << hex(r.t) << '\n';
}

void print_record(std::ostream& out, const SolutionRecord& rec) {
  out << "d=" << rec.dimension() << " m=" << rec.m() << " b=" << rec.b
      << " diam=" << rec.diameter << " avg=" << rec.total_hops << '/' << rec.node_count()
      << " (" << decimal(rec.average_hops(), 10) << ")\n";
}

bool looks_like_hop_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return line.compare(first, 2, "d=") == 0;
  }
  throw ParseError("'" + path + "' is empty");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Long Hop network toolkit: Cayley graphs over Z_2^d from linear codes"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string hops_path;
  std::string output;
  std::string db_flag;

  auto* bisect = app.add_subcommand("bisect", "Exact bisection of a hop list");
  std::string method = "fwht";
  bisect->add_option("hops", hops_path, "Hop-list file")->required();
  bisect->add_option("--method", method, "direct or fwht")
      ->check(CLI::IsMember({"direct", "fwht"}));

  auto* oracle = app.add_subcommand("oracle", "Brute-force bisection check (n <= 16)");
  oracle->add_option("hops", hops_path, "Hop-list file")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Adjacency eigenvalues lambda_k");
  spectrum->add_option("hops", hops_path, "Hop-list file")->required();

  auto* metrics = app.add_subcommand("metrics", "Diameter and average hops");
  metrics->add_option("hops", hops_path, "Hop-list file")->required();

  auto* neigh = app.add_subcommand("neighbors", "Neighbors of one node");
  std::string node_text = "0";
  neigh->add_option("hops", hops_path, "Hop-list file")->required();
  neigh->add_option("--node", node_text, "Node label (hex)");

  auto* translate = app.add_subcommand("translate", "Convert code matrix <-> hop list");
  std::string translate_input;
  translate->add_option("input", translate_input, "Code-matrix or hop-list file")->required();
  translate->add_option("-o,--output", output, "Output file");

  auto* code = app.add_subcommand("code", "Minimum weight and duality check of a code matrix");
  std::string code_path;
  code->add_option("matrix", code_path, "Code-matrix file")->required();

  auto* diag = app.add_subcommand("diagonalize", "Systematic (diagonalized) equivalent set");
  bool sort_tail = false;
  diag->add_option("hops", hops_path, "Hop-list file")->required();
  diag->add_flag("--sort", sort_tail, "Sort hops after the first d");
  diag->add_option("-o,--output", output, "Output file");

  auto* expand = app.add_subcommand("expand", "Minimum-change relabeling of a larger network");
  std::string old_path;
  std::string new_path;
  std::uint64_t budget = 20'000;
  std::uint64_t seed = 1;
  expand->add_option("old", old_path, "Current hop list")->required();
  expand->add_option("new", new_path, "Target hop list")->required();
  expand->add_option("--budget", budget, "Evaluation budget");
  expand->add_option("--seed", seed, "Random seed");
  expand->add_option("-o,--output", output, "Output file");

  auto* build = app.add_subcommand("build", "Closed-form constructions");
  build->require_subcommand(1);
  int dim = 0;
  int m = 0;
  int reduce = 0;
  bool diagonalized = false;
  std::optional<std::uint64_t> b3_seed;
  auto* build_hd = build->add_subcommand("hd", "High-density set h_s = n - s");
  build_hd->add_option("--d", dim, "Dimension")->required();
  build_hd->add_option("--m", m, "Hop count on the n/2, n/2+n/4, ... ladder")->required();
  build_hd->add_option("--reduce", reduce, "Drop the last 1 or 2 hops");
  build_hd->add_flag("--diagonalize", diagonalized, "Systematic form, sorted tail");
  build_hd->add_option("-o,--output", output, "Output file");
  auto* build_b3 = build->add_subcommand("b3", "Cube augmentation with b = 3");
  build_b3->add_option("--d", dim, "Dimension")->required();
  build_b3->add_option("--seed", b3_seed, "Random column choice");
  build_b3->add_option("-o,--output", output, "Output file");
  auto* build_aug = build->add_subcommand("augment", "Raise an odd bisection by one");
  build_aug->add_option("hops", hops_path, "Hop-list file")->required();
  build_aug->add_option("-o,--output", output, "Output file");
  auto* build_mesh = build->add_subcommand("mesh", "Full mesh on 2^d nodes");
  build_mesh->add_option("--d", dim, "Dimension")->required();
  build_mesh->add_option("-o,--output", output, "Output file");
  auto* build_cube = build->add_subcommand("cube", "Hypercube (optionally folded)");
  bool folded = false;
  build_cube->add_option("--d", dim, "Dimension")->required();
  build_cube->add_flag("--folded", folded, "Add the all-ones hop");
  build_cube->add_option("-o,--output", output, "Output file");

  auto* optimize = app.add_subcommand("optimize", "Exhaustive max-min bisection search (n <= 64)");
  std::uint64_t opt_budget = kDefaultOptimizeBudget;
  optimize->add_option("--d", dim, "Dimension")->required();
  optimize->add_option("--m", m, "Hop count")->required();
  optimize->add_option("--budget", opt_budget, "Maximum subsets to examine");

  auto* secondary = app.add_subcommand("secondary", "Greedy diameter / average-hop improvement");
  std::string objective = "diameter";
  int depth = 1;
  bool allow_b_drop = false;
  std::uint64_t sec_budget = 200'000;
  secondary->add_option("hops", hops_path, "Hop-list file")->required();
  secondary->add_option("--objective", objective, "diameter or avg")
      ->check(CLI::IsMember({"diameter", "avg"}));
  secondary->add_option("--depth", depth, "Hops replaced per step (1 or 2)")
      ->check(CLI::Range(1, 2));
  secondary->add_flag("--allow-b-drop", allow_b_drop, "Accept candidates with lower b");
  secondary->add_option("--budget", sec_budget, "Candidate evaluation budget");
  secondary->add_option("-o,--output", output, "Output file");

  auto* design = app.add_subcommand("design", "Find the best record for (P, R, phi)");
  std::uint64_t ports = 0;
  int radix = 0;
  std::string phi_text = "1";
  bool at_least = false;
  std::string weights_text;
  design->add_option("--ports", ports, "Target external ports P")->required();
  design->add_option("--radix", radix, "Switch radix R")->required();
  design->add_option("--phi", phi_text, "Target oversubscription");
  design->add_flag("--at-least", at_least, "Require at least P ports");
  design->add_option("--weights", weights_text, "wP,wPhi (default 0.7,0.3)");
  design->add_option("--db", db_flag, "Database file (default: $LH_DB or built-in)");

  auto* wire = app.add_subcommand("wire", "Per-switch wiring table (TSV)");
  std::string record_text;
  std::string rows_text;
  int wire_radix = 0;
  wire->add_option("--record", record_text, "d,m of the record")->required();
  wire->add_option("--radix", wire_radix, "Switch radix (default m + b)");
  wire->add_option("--rows", rows_text, "Row range a..b (hex)");
  wire->add_option("-o,--output", output, "Output file");
  wire->add_option("--db", db_flag, "Database file");

  auto* db = app.add_subcommand("db", "Solutions database");
  db->require_subcommand(1);
  std::string ingest_path;
  auto* db_ingest = db->add_subcommand("ingest", "Translate a code matrix into a record");
  db_ingest->add_option("matrix", ingest_path, "Code-matrix file")->required();
  db_ingest->add_option("--db", db_flag, "Database file to update");
  auto* db_list = db->add_subcommand("list", "List records");
  int list_d = 0;
  db_list->add_option("--d", list_d, "Only this dimension");
  db_list->add_option("--db", db_flag, "Database file");
  auto* db_verify = db->add_subcommand("verify", "Recompute and check every record");
  db_verify->add_option("--db", db_flag, "Database file");
  auto* db_seed = db->add_subcommand("seed", "Write the default seed database");
  db_seed->add_option("-o,--output", output, "Output file (default: --db / $LH_DB)");
  db_seed->add_option("--db", db_flag, "Database file");
  auto* db_query = db->add_subcommand("query", "Show one record");
  db_query->add_option("--record", record_text, "d,m")->required();
  db_query->add_option("--db", db_flag, "Database file");

  auto* compare = app.add_subcommand("compare", "Ports/switch and cables/port vs LH (CSV)");
  std::string family_text;
  std::string sizes_text;
  int compare_radix = 0;
  compare->add_option("--family", family_text,
                      "hypercube|folded_cube|flattened_butterfly|fat_tree|dragonfly")
      ->required();
  compare->add_option("--radix", compare_radix, "Switch radix R")->required();
  compare->add_option("--sizes", sizes_text, "Size index range a..b")->required();
  compare->add_option("-o,--output", output, "Output CSV");
  compare->add_option("--db", db_flag, "Database file");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  try {
    const auto parse_pair = [](const std::string& text) {
      const auto comma = text.find(',');
      if (comma == std::string::npos) throw UsageError("expected d,m but got '" + text + "'");
      try {
        return std::make_pair(std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1)));
      } catch (const std::exception&) {
        throw UsageError("expected d,m but got '" + text + "'");
      }
    };
    const auto write_set = [&](const GeneratorSet& set) {
      emit(out, output, [&](std::ostream& o) { write_hop_list(o, set); });
    };

    if (*bisect) {
      const GeneratorSet set = read_hop_list(hops_path);
      print_report(out, method == "direct" ? bisection_direct(set) : bisection_fwht(set));
    } else if (*oracle) {
      const GeneratorSet set = read_hop_list(hops_path);
      const std::uint64_t brute = brute_force_bisection(set);
      const BisectionReport direct = bisection_direct(set);
      const BisectionReport fast = bisection_fwht(set);
      const bool agree = brute == direct.B && direct == fast;
      out << "brute=" << brute << " direct=" << direct.B << " fwht=" << fast.B
          << " agree=" << (agree ? "yes" : "no") << '\n';
      if (!agree) return kExitDomainError;
    } else if (*spectrum) {
      const GeneratorSet set = read_hop_list(hops_path);
      const Spectrum lambda = eigenvalues(set);
      for (std::size_t k = 0; k < lambda.size(); ++k) out << hex(k) << ' ' << lambda[k] << '\n';
    } else if (*metrics) {
      const DistanceProfile p = distance_profile(read_hop_list(hops_path));
      out << "diam=" << p.diameter << " avg=" << p.total_hops << '/' << p.node_count() << " ("
          << decimal(p.average(), 10) << ")\n";
    } else if (*neigh) {
      const GeneratorSet set = read_hop_list(hops_path);
      const auto v = static_cast<Label>(parse_hex(node_text));
      if (v >= set.node_count()) throw Error("node label outside [0, n)");
      const int width = (set.dimension() + 3) / 4;
      bool first = true;
      for (Label w : neighbors(set, v)) {
        out << (first ? "" : " ") << hex(w, width);
        first = false;
      }
      out << '\n';
    } else if (*translate) {
      if (looks_like_hop_list(translate_input)) {
        const CodeMatrix g = lh_to_code(read_hop_list(translate_input));
        emit(out, output, [&](std::ostream& o) { write_code_matrix(o, g); });
      } else {
        write_set(code_to_lh(read_code_matrix(translate_input)));
      }
    } else if (*code) {
      const CodeMatrix g = read_code_matrix(code_path);
      const std::uint32_t w = min_weight(g);
      const BisectionReport r = bisection_fwht(code_to_lh(g));
      out << "k=" << g.k() << " n=" << g.length() << " w_min=" << w << " b=" << r.b
          << " duality=" << (w == r.b ? "yes" : "no") << '\n';
      if (w != r.b) return kExitDomainError;
    } else if (*diag) {
      write_set(diagonalize(read_hop_list(hops_path), sort_tail));
    } else if (*expand) {
      const ExpansionPlan plan =
          min_change_expansion(read_hop_list(old_path), read_hop_list(new_path), budget, seed);
      err << "cost=" << plan.cost << " map=";
      for (Label r : plan.map.rows()) err << hex(r) << ' ';
      err << '\n';
      write_set(plan.set);
    } else if (*build) {
      if (*build_hd) {
        GeneratorSet set = lh_hd({dim, m}, diagonalized);
        if (reduce != 0) set = lh_hd_reduced(set, reduce);
        write_set(set);
      } else if (*build_b3) {
        write_set(low_density_b3(dim, b3_seed));
      } else if (*build_aug) {
        write_set(augment_odd_b(read_hop_list(hops_path)));
      } else if (*build_mesh) {
        write_set(full_mesh(dim));
      } else if (*build_cube) {
        write_set(folded ? folded_cube(dim) : hypercube(dim));
      }
    } else if (*optimize) {
      const OptimizeResult r = optimize_direct(dim, m, opt_budget);
      print_report(out, r.report);
      out << "diam=" << r.diameter << '\n';
      write_hop_list(out, r.set);
    } else if (*secondary) {
      SecondaryOptions opts;
      opts.objective = objective == "avg" ? SecondaryObjective::kAverageHops
                                          : SecondaryObjective::kDiameter;
      opts.depth = depth;
      opts.hold_bisection = !allow_b_drop;
      opts.budget = sec_budget;
      write_set(optimize_secondary(read_hop_list(hops_path), opts));
    } else if (*design) {
      Requirement req;
      req.ports = ports;
      req.radix = radix;
      req.phi = parse_rational(phi_text);
      req.at_least_ports = at_least;
      if (!weights_text.empty()) {
        const auto comma = weights_text.find(',');
        if (comma == std::string::npos) throw UsageError("--weights expects wP,wPhi");
        req.weight_ports = parse_rational(weights_text.substr(0, comma));
        req.weight_phi = parse_rational(weights_text.substr(comma + 1));
      }
      const SolutionDb database = open_database(db_flag);
      const DesignMatch match = find_solution(database, req);
      const SolutionRecord& rec = *match.record;
      out << "d=" << rec.dimension() << " m=" << rec.m() << " b=" << rec.b
          << " n=" << rec.node_count() << " E=" << match.external_per_switch
          << " P=" << match.ports << " phi=" << rational_text(match.phi)
          << " dP=" << decimal(match.port_error, 6) << " dphi=" << decimal(match.phi_error, 6)
          << '\n';
      print_record(out, rec);
      write_hop_list(out, rec.set);
    } else if (*wire) {
      const auto [d, mm] = parse_pair(record_text);
      const SolutionDb database = open_database(db_flag);
      const SolutionRecord* rec = database.query(d, mm);
      if (rec == nullptr) throw Error("no record for d=" + std::to_string(d) + " m=" + std::to_string(mm));
      const WiringTable table = wiring_table(*rec, wire_radix > 0 ? wire_radix
                                                                  : rec->m() + static_cast<int>(rec->b));
      Label first = 0;
      auto last = static_cast<Label>(table.rows() - 1);
      if (!rows_text.empty()) {
        const auto [a, b] = split_range(rows_text);
        first = static_cast<Label>(parse_hex(a));
        last = static_cast<Label>(parse_hex(b));
      }
      emit(out, output, [&](std::ostream& o) { table.write_tsv(o, first, last); });
    } else if (*db) {
      if (*db_ingest) {
        const std::string path = database_path(db_flag);
        SolutionDb database = std::ifstream(path).good() ? SolutionDb::load(path) : SolutionDb{};
        const SolutionRecord& rec = ingest_code_file(database, ingest_path);
        print_record(out, rec);
        database.save(path);
      } else if (*db_list) {
        const SolutionDb database = open_database(db_flag);
        for (const SolutionRecord* rec : database.all()) {
          if (list_d != 0 && rec->dimension() != list_d) continue;
          print_record(out, *rec);
        }
      } else if (*db_verify) {
        const SolutionDb database = open_database(db_flag);
        const auto problems = database.verify();
        for (const std::string& p : problems) err << p << '\n';
        out << database.size() << " records, " << problems.size() << " inconsistent\n";
        if (!problems.empty()) return kExitDomainError;
      } else if (*db_seed) {
        const std::string path = output.empty() ? database_path(db_flag) : output;
        const SolutionDb database = default_database();
        database.save(path);
        out << database.size() << " records written to " << path << '\n';
      } else if (*db_query) {
        const auto [d, mm] = parse_pair(record_text);
        const SolutionDb database = open_database(db_flag);
        const SolutionRecord* rec = database.query(d, mm);
        if (rec == nullptr) {
          out << "absent\n";
        } else {
          print_record(out, *rec);
          write_hop_list(out, rec->set);
        }
      }
    } else if (*compare) {
      const Family family = parse_family(family_text);
      const auto [a, b] = split_range(sizes_text);
      int first = 0;
      int last = 0;
      try {
        first = std::stoi(a);
        last = std::stoi(b);
      } catch (const std::exception&) {
        throw UsageError("--sizes expects a..b");
      }
      const SolutionDb database = open_database(db_flag);
      const auto rows =
          compare_with_lh(database, alternative_series(family, compare_radix, first, last));
      emit(out, output, [&](std::ostream& o) { write_csv(o, rows); });
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace lhnet::cli
