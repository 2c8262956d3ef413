// Copyright 2026 The gac Authors
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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gac/gac.hpp"

namespace {

// Exit codes: 0 ok/pass, 1 verification failure, 2 usage/parse,
// 3 semantic, 4 resource limit.
int exit_code_for(gac::errc code) {
  switch (code) {
    case gac::errc::parse_error:
    case gac::errc::unknown_family:
      return 2;
    case gac::errc::ground_too_large:
    case gac::errc::m_too_large:
    case gac::errc::too_large_for_hamiltonicity:
    case gac::errc::order_too_large:
      return 4;
    default:
      return 3;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) gac::fail(gac::errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_spec(const std::string& s) {
  for (const char* name : {"path:", "cycle:", "complete:", "star:"}) {
    if (s.rfind(name, 0) == 0) return true;
  }
  return false;
}

gac::BuildingSet load_building_set(const std::string& graph_arg, const std::string& bset_arg) {
  if (!graph_arg.empty() && !bset_arg.empty()) {
    gac::fail(gac::errc::parse_error, "give either --graph or --building-set, not both");
  }
  if (!graph_arg.empty()) {
    gac::SimpleGraph g = looks_like_spec(graph_arg) ? gac::parse_graph_spec(graph_arg)
                                                    : gac::graph_from_json_text(read_file(graph_arg));
    return gac::graphical_building_set(g);
  }
  if (!bset_arg.empty()) return gac::parse_building_set_text(read_file(bset_arg));
  gac::fail(gac::errc::parse_error, "an input is required: --graph SPEC|FILE or --building-set FILE");
}

template <class V>
std::string entries_pretty(const V& v) {
  std::string out;
  for (const gac::Int& x : v.entries) {
    if (!out.empty()) out += " ";
    out += x.str();
  }
  return out;
}

template <class V>
std::string entries_csv(const V& v) {
  std::string out;
  for (const gac::Int& x : v.entries) {
    out += ",";
    out += x.str();
  }
  return out;
}

int run_vectors(const std::string& graph_arg, const std::string& bset_arg, const std::string& format,
                bool proper_faces_only) {
  gac::BuildingSet b = load_building_set(graph_arg, bset_arg);
  if (!b.connected()) {
    gac::fail(gac::errc::not_connected, "the building set must contain its ground set");
  }
  gac::FVector f = gac::f_vector(b);
  gac::HVector h = gac::h_from_f(f);
  gac::GVector g = gac::g_from_h(h);
  gac::GammaVector gamma = gac::gamma_from_h(h);
  bool flag = gac::is_flag(b);
  gac::FVector f_out = f;
  if (proper_faces_only) f_out.entries.pop_back();

  int m = b.ground_size();
  int n = h.degree();
  std::size_t facets = b.size() - 1;
  if (format == "json") {
    nlohmann::json j{{"m", m},
                     {"n", n},
                     {"building_set_size", b.size()},
                     {"facets", facets},
                     {"flag", flag},
                     {"f", gac::detail::entries_to_json(f_out)},
                     {"h", gac::detail::entries_to_json(h)},
                     {"g", gac::detail::entries_to_json(g)},
                     {"gamma", gac::detail::entries_to_json(gamma)}};
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "f" << entries_csv(f_out) << "\n"
              << "h" << entries_csv(h) << "\n"
              << "g" << entries_csv(g) << "\n"
              << "gamma" << entries_csv(gamma) << "\n";
  } else {
    std::cout << "m=" << m << " n=" << n << " |B|=" << b.size() << " facets=" << facets
              << " flag=" << (flag ? "yes" : "no") << "\n"
              << "f      " << entries_pretty(f_out) << "\n"
              << "h      " << entries_pretty(h) << "\n"
              << "g      " << entries_pretty(g) << "\n"
              << "gamma  " << entries_pretty(gamma) << "\n";
  }
  return 0;
}

gac::FamilyName parse_family(const std::string& name) {
  if (name == "as") return gac::FamilyName::as;
  if (name == "cy") return gac::FamilyName::cy;
  if (name == "pe") return gac::FamilyName::pe;
  if (name == "st") return gac::FamilyName::st;
  gac::fail(gac::errc::unknown_family, "unknown family '" + name + "' (expected as, cy, pe or st)");
}

int run_family(const std::string& name, int max_n, const std::string& kind, const std::string& format) {
  gac::FamilyName fam = parse_family(name);
  if (max_n < 0 || max_n > 12) {
    gac::fail(gac::errc::order_too_large, "--max-n must be between 0 and 12 on the recurrence route");
  }
  std::vector<std::vector<gac::Int>> rows;
  for (int n = 0; n <= max_n; ++n) {
    if (kind == "h") {
      rows.push_back(gac::h_family(fam, n).entries);
    } else if (kind == "gamma") {
      rows.push_back(gac::gamma_family(fam, n).entries);
    } else if (kind == "g") {
      rows.push_back(gac::g_from_gamma(gac::gamma_family(fam, n)).entries);
    } else if (kind == "f") {
      rows.push_back(gac::f_from_h(gac::h_family(fam, n)).entries);
    } else {
      gac::fail(gac::errc::parse_error, "--vector must be one of f, h, g, gamma");
    }
  }
  if (format == "json") {
    nlohmann::json jrows = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json r = nlohmann::json::array();
      for (const gac::Int& v : row) r.push_back(gac::detail::int_to_json(v));
      jrows.push_back(r);
    }
    nlohmann::json j{{"name", name}, {"vector", kind}, {"max_n", max_n}, {"rows", jrows}};
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.size());
    std::cout << "n";
    for (std::size_t i = 0; i < width; ++i) std::cout << ",v" << i;
    std::cout << "\n";
    for (std::size_t n = 0; n < rows.size(); ++n) {
      std::cout << n;
      for (std::size_t i = 0; i < width; ++i) {
        std::cout << ",";
        if (i < rows[n].size()) std::cout << rows[n][i].str();
      }
      std::cout << "\n";
    }
  } else {
    for (std::size_t n = 0; n < rows.size(); ++n) {
      std::cout << "n=" << n << "  ";
      for (std::size_t i = 0; i < rows[n].size(); ++i) {
        if (i) std::cout << " ";
        std::cout << rows[n][i].str();
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int run_verify(const std::string& suite, int m, std::uint64_t samples, int jobs, const std::string& format) {
  gac::BoundReport report;
  if (suite == "connected") {
    report = gac::verify_connected_bounds(m, jobs);
  } else if (suite == "hamiltonian") {
    report = gac::verify_hamiltonian_bounds(m, jobs);
  } else if (suite == "tree") {
    report = gac::verify_tree_bounds(m, jobs);
  } else if (suite == "monotonicity") {
    report = gac::verify_monotonicity(m, samples, jobs);
  } else if (suite == "product") {
    report = gac::verify_product_rule();
  } else if (suite == "gal-flag") {
    report = gac::verify_gal_flag(m, jobs);
  } else {
    gac::fail(gac::errc::parse_error, "unknown suite '" + suite + "'");
  }
  if (format == "pretty") {
    std::cout << (report.pass() ? "PASS" : "FAIL") << " suite=" << report.suite << " m=" << report.m
              << " checked=" << report.checked << " failures=" << report.failures.size()
              << " elapsed_ms=" << report.elapsed_ms << "\n";
  } else {
    std::cout << gac::report_to_json(report).dump() << "\n";
  }
  return report.pass() ? 0 : 1;
}

int run_identity(const std::string& id, int order, const std::string& format) {
  gac::IdentityId which;
  if (id == "as_functional") {
    which = gac::IdentityId::as_functional;
  } else if (id == "cy_relation") {
    which = gac::IdentityId::cy_relation;
  } else if (id == "pe_ode") {
    which = gac::IdentityId::pe_ode;
  } else if (id == "st_ode") {
    which = gac::IdentityId::st_ode;
  } else if (id == "as_closed_form") {
    which = gac::IdentityId::as_closed_form;
  } else if (id == "pe_closed_form") {
    which = gac::IdentityId::pe_closed_form;
  } else {
    gac::fail(gac::errc::parse_error, "unknown identity '" + id + "'");
  }
  gac::IdentityReport report = gac::check_identity(which, order);
  if (format == "pretty") {
    if (report.verified) {
      std::cout << report.id << " verified to order " << report.order << "\n";
    } else {
      std::cout << report.id << " FAILED first at order " << report.first_failing_order << "\n";
    }
  } else {
    std::cout << gac::identity_report_to_json(report).dump() << "\n";
  }
  return report.verified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"f-, h-, g- and gamma-vectors of nestohedra and graph-associahedra"};
  app.require_subcommand(1);

  std::string graph_arg, bset_arg, format = "pretty";
  bool proper_faces_only = false;
  CLI::App* vectors = app.add_subcommand("vectors", "face vectors of one nestohedron");
  vectors->add_option("--graph", graph_arg, "named spec (path:5, cycle:6, complete:4, star:7) or graph JSON file");
  vectors->add_option("--building-set", bset_arg, "building-set text file");
  vectors->add_option("--format", format, "pretty, json or csv");
  vectors->add_flag("--proper-faces-only", proper_faces_only, "omit the top face from the f-vector");

  std::string fam_name, fam_kind = "h", fam_format = "pretty";
  int max_n = 6;
  CLI::App* family = app.add_subcommand("family", "tables for the as/cy/pe/st series");
  family->add_option("--name", fam_name, "as, cy, pe or st")->required();
  family->add_option("--max-n", max_n, "largest dimension (at most 12)");
  family->add_option("--vector", fam_kind, "f, h, g or gamma");
  family->add_option("--format", fam_format, "pretty, json or csv");

  std::string suite, verify_format = "json";
  int verify_m = 4, jobs = 1;
  std::uint64_t samples = 0;
  CLI::App* verify = app.add_subcommand("verify", "exhaustive bound-theorem suites");
  verify->add_option("--suite", suite, "connected, hamiltonian, tree, monotonicity, product or gal-flag")->required();
  verify->add_option("--m", verify_m, "number of nodes");
  verify->add_option("--samples", samples, "monotonicity: check about this many covers (0 = all)");
  verify->add_option("--jobs", jobs, "worker threads")->envname("GAC_JOBS");
  verify->add_option("--format", verify_format, "json or pretty");

  std::string ident_id, ident_format = "json";
  int order = 12;
  CLI::App* identity = app.add_subcommand("identity", "generating-function identity checks");
  identity->add_option("--id", ident_id,
                       "as_functional, cy_relation, pe_ode, st_ode, as_closed_form or pe_closed_form")
      ->required();
  identity->add_option("--order", order, "verify coefficientwise to this order (at most 30)");
  identity->add_option("--format", ident_format, "json or pretty");

  try {
    app.parse(argc, argv);
    if (vectors->parsed()) return run_vectors(graph_arg, bset_arg, format, proper_faces_only);
    if (family->parsed()) return run_family(fam_name, max_n, fam_kind, fam_format);
    if (verify->parsed()) return run_verify(suite, verify_m, samples, jobs, verify_format);
    if (identity->parsed()) return run_identity(ident_id, order, ident_format);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const gac::Error& e) {
    std::cerr << "gac: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "gac: internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
