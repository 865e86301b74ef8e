// Command-line surface for the workbench: check runner, map application,
// star products, graded-subspace queries, and the acceptance suite.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage/input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "duflo/checks.hpp"
#include "duflo/json_io.hpp"

namespace {

duflo::StructureConstants resolve_algebra(const std::string& arg) {
  if (std::filesystem::exists(arg)) return duflo::load_algebra_file(arg);
  return duflo::catalog_lookup(arg);
}

duflo::StructureConstants resolve_validated(const std::string& arg) {
  duflo::StructureConstants sc = resolve_algebra(arg);
  const duflo::ValidationReport v = duflo::validate(sc);
  if (!v.ok()) {
    std::string msg = "algebra '" + arg + "' fails the Lie axioms";
    if (v.violation)
      msg += " (jacobi violated at i=" + std::to_string(v.violation->i) +
             " j=" + std::to_string(v.violation->j) + " l=" + std::to_string(v.violation->l) +
             " -> m=" + std::to_string(v.violation->m) + ")";
    throw std::invalid_argument(msg);
  }
  return sc;
}

duflo::Json read_json_input(const std::string& path) {
  duflo::Json j;
  if (path == "-") {
    std::cin >> j;
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    in >> j;
  }
  return j;
}

void write_output(const duflo::Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << j.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic workbench for PBW symmetrization, the Duflo map, and transported "
               "star products on Lie algebras given by structure constants"};
  app.require_subcommand(1);

  std::string algebra = "sl2";
  std::string out_path;
  std::string in_path = "-";
  unsigned max_degree = 6;
  std::uint64_t seed = 1;

  // check
  auto* cmd_check = app.add_subcommand("check", "run one verification check");
  std::string check_id;
  cmd_check->add_option("--check-id", check_id, "one of the known check ids")->required();
  cmd_check->add_option("--algebra", algebra, "catalog name or algebra JSON file");
  cmd_check->add_option("--max-degree", max_degree, "degree bound (default 6)");
  cmd_check->add_option("--seed", seed, "seed for sampled cases");
  cmd_check->add_option("--out", out_path, "write report JSON here instead of stdout");

  // suite
  auto* cmd_suite = app.add_subcommand("suite", "run the full acceptance battery");
  unsigned grid_degree = 4;
  cmd_suite->add_option("--max-degree", grid_degree,
                        "alpha/beta degree bound for the defect grid (default 4)");
  cmd_suite->add_option("--seed", seed, "seed for sampled cases");
  cmd_suite->add_option("--out", out_path, "write suite JSON here instead of stdout");

  // apply
  auto* cmd_apply = app.add_subcommand("apply", "apply a map to a JSON element");
  std::string map_name;
  cmd_apply->add_option("--map", map_name, "pbw|pbw-inv|strange|duflo|duflo-inv")->required();
  cmd_apply->add_option("--algebra", algebra, "catalog name or algebra JSON file");
  cmd_apply->add_option("--in", in_path, "input JSON file, '-' for stdin (default)");
  cmd_apply->add_option("--out", out_path, "output file (default stdout)");

  // star
  auto* cmd_star = app.add_subcommand("star", "star product of two polynomials");
  std::string flavor_name, lhs_path, rhs_path;
  cmd_star->add_option("--flavor", flavor_name, "gutt|duflo")->required();
  cmd_star->add_option("--lhs", lhs_path, "left factor polynomial JSON file")->required();
  cmd_star->add_option("--rhs", rhs_path, "right factor polynomial JSON file")->required();
  cmd_star->add_option("--algebra", algebra, "catalog name or algebra JSON file");
  cmd_star->add_option("--out", out_path, "output file (default stdout)");

  // invariants / coinvariants
  auto* cmd_inv = app.add_subcommand("invariants", "basis of the degree-k invariants");
  unsigned degree = 2;
  cmd_inv->add_option("--degree", degree, "degree k")->required();
  cmd_inv->add_option("--algebra", algebra, "catalog name or algebra JSON file");
  cmd_inv->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_coinv = app.add_subcommand("coinvariants", "degree-k coinvariant data");
  cmd_coinv->add_option("--degree", degree, "degree k")->required();
  cmd_coinv->add_option("--algebra", algebra, "catalog name or algebra JSON file");
  cmd_coinv->add_option("--out", out_path, "output file (default stdout)");

  // trace
  auto* cmd_trace = app.add_subcommand("trace", "trace element Tr_k in S^k(g*)");
  unsigned trace_k = 2;
  cmd_trace->add_option("--k", trace_k, "power k >= 1")->required();
  cmd_trace->add_option("--algebra", algebra, "catalog name or algebra JSON file");
  cmd_trace->add_option("--out", out_path, "output file (default stdout)");

  // coeffs
  auto* cmd_coeffs = app.add_subcommand("coeffs", "series coefficients a_2k");
  unsigned max_k = 8;
  cmd_coeffs->add_option("--max-k", max_k, "compute a_2k for 2k <= max-k")->required();
  cmd_coeffs->add_option("--out", out_path, "output file (default stdout)");

  // catalog
  auto* cmd_catalog = app.add_subcommand("catalog", "list the algebra catalog");
  bool list_flag = false;
  cmd_catalog->add_flag("--list", list_flag, "print the catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_check->parsed()) {
      const duflo::StructureConstants sc = resolve_algebra(algebra);
      const duflo::CheckSpec spec{check_id, algebra, max_degree, seed};
      const duflo::CheckReport rep = duflo::run_check(spec, sc);
      std::cerr << "check " << check_id << " on " << algebra << ": " << duflo::to_cstr(rep.status)
                << " (" << rep.wall_ms << " ms)\n";
      write_output(rep.to_json(), out_path);
      return rep.status == duflo::CheckStatus::pass ? 0 : 1;
    }

    if (cmd_suite->parsed()) {
      duflo::SuiteOptions opt;
      opt.grid_degree = grid_degree;
      opt.seed = seed;
      const duflo::SuiteResult res = duflo::run_acceptance_suite(opt, &std::cerr);
      write_output(res.to_json(), out_path);
      return res.pass ? 0 : 1;
    }

    if (cmd_apply->parsed()) {
      const duflo::StructureConstants sc = resolve_validated(algebra);
      duflo::DufloEngine eng(sc);
      const duflo::Json in = read_json_input(in_path);
      if (map_name == "pbw")
        write_output(duflo::env_to_json(eng.env().pbw_symmetrize(duflo::sym_from_json(in, sc.dim()))),
                     out_path);
      else if (map_name == "pbw-inv")
        write_output(duflo::poly_to_json(eng.env().pbw_inverse(duflo::env_from_json(in, sc.dim()))),
                     out_path);
      else if (map_name == "strange")
        write_output(duflo::poly_to_json(eng.strange_map(duflo::sym_from_json(in, sc.dim()))),
                     out_path);
      else if (map_name == "duflo")
        write_output(duflo::env_to_json(eng.duflo_map(duflo::sym_from_json(in, sc.dim()))), out_path);
      else if (map_name == "duflo-inv")
        write_output(duflo::poly_to_json(eng.duflo_inverse(duflo::env_from_json(in, sc.dim()))),
                     out_path);
      else
        throw std::invalid_argument("unknown map: '" + map_name + "'");
      return 0;
    }

    if (cmd_star->parsed()) {
      duflo::StarFlavor flavor;
      if (flavor_name == "gutt")
        flavor = duflo::StarFlavor::gutt;
      else if (flavor_name == "duflo")
        flavor = duflo::StarFlavor::duflo;
      else
        throw std::invalid_argument("unknown star flavor: '" + flavor_name + "'");
      const duflo::StructureConstants sc = resolve_validated(algebra);
      duflo::DufloEngine eng(sc);
      const duflo::SymPolynomial a = duflo::sym_from_json(read_json_input(lhs_path), sc.dim());
      const duflo::SymPolynomial b = duflo::sym_from_json(read_json_input(rhs_path), sc.dim());
      write_output(duflo::poly_to_json(eng.star_product(a, b, flavor)), out_path);
      return 0;
    }

    if (cmd_inv->parsed()) {
      const duflo::StructureConstants sc = resolve_validated(algebra);
      const duflo::GradedSubspace inv = duflo::invariants_basis(sc, degree);
      duflo::Json j;
      j["algebra"] = algebra;
      j["degree"] = degree;
      j["dim"] = inv.dim();
      duflo::Json basis = duflo::Json::array();
      duflo::Json rendered = duflo::Json::array();
      for (const auto& g : inv.generators) {
        basis.push_back(duflo::poly_to_json(g));
        rendered.push_back(g.to_string(sc.basis_names()));
      }
      j["basis"] = basis;
      j["basis_rendered"] = rendered;
      write_output(j, out_path);
      return 0;
    }

    if (cmd_coinv->parsed()) {
      const duflo::StructureConstants sc = resolve_validated(algebra);
      const duflo::GradedSubspace gs = duflo::bracket_span(sc, degree, duflo::SpanFlavor::g_bracket);
      duflo::Json j;
      j["algebra"] = algebra;
      j["degree"] = degree;
      j["dim_component"] = gs.coords.size();
      j["dim_g_span"] = gs.dim();
      j["dim_coinvariants"] = gs.coords.size() - gs.dim();
      duflo::Json complement = duflo::Json::array();
      std::vector<bool> is_pivot(gs.coords.size(), false);
      for (std::size_t p : gs.basis.pivot_cols()) is_pivot[p] = true;
      for (std::size_t i = 0; i < gs.coords.size(); ++i)
        if (!is_pivot[i])
          complement.push_back(duflo::SymPolynomial::monomial_string(gs.coords[i], sc.basis_names()));
      j["complement_monomials"] = complement;
      write_output(j, out_path);
      return 0;
    }

    if (cmd_trace->parsed()) {
      const duflo::StructureConstants sc = resolve_validated(algebra);
      const duflo::DualPolynomial tr = duflo::trace_element(sc, trace_k);
      duflo::Json j = duflo::poly_to_json(tr);
      j["rendered"] = tr.to_string(duflo::dual_basis_names(sc));
      write_output(j, out_path);
      return 0;
    }

    if (cmd_coeffs->parsed()) {
      const auto alpha = duflo::duflo_alpha_coefficients(max_k);
      duflo::Json arr = duflo::Json::array();
      for (const auto& [k, v] : alpha) arr.push_back(duflo::Json::array({k, duflo::to_string(v)}));
      duflo::Json j;
      j["alpha"] = arr;
      write_output(j, out_path);
      return 0;
    }

    if (cmd_catalog->parsed()) {
      std::cout << "catalog constructors:\n";
      for (const auto& p : duflo::catalog_patterns()) std::cout << "  " << p << "\n";
      std::cout << "suite instances:\n";
      for (const auto& n : duflo::suite_algebra_names()) std::cout << "  " << n << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
