#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "toral/error.hpp"
#include "toral/oracle_sweep.hpp"
#include "toral/report.hpp"

namespace {

using namespace toral;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInternal = 2;
constexpr int kExitOracleMismatch = 3;

bool is_catalog_key(const std::string& name) {
  auto keys = catalog_keys();
  return std::find(keys.begin(), keys.end(), name) != keys.end();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A source is either a catalog key (with optional --rank / --n parameter) or
// a path to a TorusInputDocument.
TorusInput resolve_source(const std::string& source, long rank_param, long n_param) {
  if (is_catalog_key(source)) {
    long param = -1;
    if (source == "split") param = rank_param;
    if (source == "norm_one_cyclic" || source == "weil_restriction") param = n_param;
    return TorusInput{preset(source, param), std::nullopt};
  }
  return parse_torus_input_text(read_file(source));
}

void apply_arith(TorusInput& input, const std::string& arith_flag) {
  if (arith_flag.empty()) return;
  if (arith_flag == "unramified" || arith_flag == "totally_ramified") {
    input.arithmetic = preset_arithmetic(input.lattice, arith_flag);
    return;
  }
  Json doc;
  try {
    doc = Json::parse(read_file(arith_flag));
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::parse, std::string("arithmetic file: ") + e.what());
  }
  std::vector<int> inertia;
  for (const auto& e : doc.at("inertia")) inertia.push_back(e.get<int>());
  input.arithmetic =
      make_arithmetic(input.lattice.group(), inertia, doc.at("frobenius").get<int>());
}

int exit_code_for(const Error& e) {
  return e.kind() == ErrorKind::internal ? kExitInternal : kExitValidation;
}

void print_sweep(const SweepSummary& summary, bool verbose) {
  for (const SweepCase& c : summary.cases) {
    if (c.status == SweepCase::Status::ok && !verbose) continue;
    const char* tag = c.status == SweepCase::Status::ok          ? "ok  "
                      : c.status == SweepCase::Status::mismatch ? "FAIL"
                                                                : "skip";
    std::cout << "[" << tag << "] " << c.label;
    if (c.status != SweepCase::Status::ok || verbose) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
  }
  std::cout << summary.performed << " comparisons, " << summary.mismatches
            << " mismatches, " << summary.skipped << " skipped (budget)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toral: exact invariants of algebraic tori presented as Galois lattices"};
  app.require_subcommand(1);

  std::string source, arith_flag;
  long rank_param = -1, n_param = -1, modulus = 0, denominators = 4;
  int degree = 1;
  bool as_json = false, as_text = false, dual = false, verbose = false;

  auto add_source = [&](CLI::App* cmd, bool with_arith) {
    cmd->add_option("source", source, "catalog key or path to a torus JSON document")
        ->required();
    cmd->add_option("--rank", rank_param, "rank parameter for the 'split' preset");
    cmd->add_option("--n", n_param, "degree parameter for the cyclic preset families");
    if (with_arith)
      cmd->add_option("--arith", arith_flag,
                      "unramified | totally_ramified | path to arithmetic JSON");
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full invariant report");
  add_source(analyze_cmd, true);
  analyze_cmd->add_option("--mod", modulus, "also analyze the mod-m reduction");
  analyze_cmd->add_flag("--json", as_json, "JSON output");
  analyze_cmd->add_flag("--text", as_text, "human-readable output (default)");

  CLI::App* coh_cmd = app.add_subcommand("cohomology", "one cohomology group");
  add_source(coh_cmd, false);
  coh_cmd->add_option("--degree", degree, "degree 0, 1 or 2")->required();
  coh_cmd->add_flag("--dual", dual, "use the dual module Hom(X, Z)");
  coh_cmd->add_option("--mod", modulus, "finite coefficients (Z/m)^rank");
  coh_cmd->add_flag("--json", as_json, "JSON output");

  CLI::App* sandwich_cmd =
      app.add_subcommand("sandwich", "cocharacter sandwich X^Gamma in X_*(X_T) in Pr(X)");
  add_source(sandwich_cmd, true);
  sandwich_cmd->add_flag("--json", as_json, "JSON output");

  CLI::App* weil_cmd = app.add_subcommand("weil", "unramified Weil-model cocycle suite");
  long weil_mod = 2;
  add_source(weil_cmd, false);
  weil_cmd->add_option("--mod", weil_mod, "torsion modulus for the H^1 count");
  weil_cmd->add_option("--den", denominators, "denominator bound for sample vectors");
  weil_cmd->add_flag("--json", as_json, "JSON output");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "bar resolution vs enumeration and cyclic formulas");
  SweepOptions sweep;
  oracle_cmd->add_option("--max-group", sweep.max_group_order, "largest group order");
  oracle_cmd->add_option("--max-mod", sweep.max_modulus, "largest modulus");
  oracle_cmd->add_option("--max-rank", sweep.max_rank, "largest module rank");
  oracle_cmd->add_option("--seed", sweep.seed, "seed echoed into the case list");
  int cyclic_order = 12;
  oracle_cmd->add_option("--cyclic-order", cyclic_order,
                         "largest cyclic group for the lattice sweep");
  oracle_cmd->add_flag("--verbose", verbose, "print passing cases too");
  oracle_cmd
      ->add_flag("--inject-fault", sweep.inject_fault,
                 "harness self-test: corrupt one coboundary sign, expect a failure")
      ->group("");  // hidden

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "list the preset catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    if (catalog_cmd->parsed()) {
      for (const std::string& key : catalog_keys()) {
        GaloisLattice x = preset(key);
        std::cout << key << "  (|Gamma| = " << x.group().order()
                  << ", rank = " << x.rank() << ")  arithmetic:";
        bool any = false;
        for (const std::string& variant : arithmetic_variant_keys())
          if (preset_arithmetic_admissible(x, variant)) {
            std::cout << " " << variant;
            any = true;
          }
        if (!any) std::cout << " none";
        std::cout << "\n";
      }
      return kExitOk;
    }

    if (analyze_cmd->parsed()) {
      TorusInput input = resolve_source(source, rank_param, n_param);
      apply_arith(input, arith_flag);
      AnalysisOptions options;
      if (modulus >= 2) options.modulus = Int(modulus);
      AnalysisResult result = analyze(input, options);
      if (as_json)
        std::cout << analysis_to_json(result).dump(2) << "\n";
      else
        std::cout << analysis_to_text(result);
      bool checks_ok = result.check_h1_is_component_group &&
                       result.check_h1_order_is_dual_coinvariant_torsion &&
                       result.check_cyclic_oracle.value_or(true);
      return checks_ok ? kExitOk : kExitInternal;
    }

    if (coh_cmd->parsed()) {
      TorusInput input = resolve_source(source, rank_param, n_param);
      GaloisLattice x = dual ? dual_module(input.lattice) : input.lattice;
      CoefficientModule m = modulus >= 2
                                ? CoefficientModule::finite_kind(x, Int(modulus))
                                : CoefficientModule::lattice_kind(x);
      CohomologyClassGroup h = cohomology_group(x.group(), m, degree);
      if (as_json) {
        Json doc{{"version", 1},
                 {"kind", "cohomology"},
                 {"degree", degree},
                 {"dual", dual},
                 {"group", group_to_json(h.group)}};
        if (modulus >= 2) doc["modulus"] = std::to_string(modulus);
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "H^" << degree << "(Gamma, " << (dual ? "X^" : "X")
                  << (modulus >= 2 ? " mod " + std::to_string(modulus) : "")
                  << ") = " << h.group << "\n";
      }
      return kExitOk;
    }

    if (sandwich_cmd->parsed()) {
      TorusInput input = resolve_source(source, rank_param, n_param);
      apply_arith(input, arith_flag);
      if (!input.arithmetic)
        fail(ErrorKind::invalid_arithmetic,
             "sandwich needs arithmetic data (--arith or the input document)");
      SandwichReport report = sandwich_report(input.lattice, *input.arithmetic);
      if (as_json) {
        Json doc{{"version", 1},
                 {"kind", "sandwich"},
                 {"conventions", conventions_json()},
                 {"sandwich", sandwich_to_json(report)}};
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << sandwich_to_text(report);
      }
      bool ok = report.inclusion_xgamma_in_xt && report.inclusion_xt_in_pr;
      return ok ? kExitOk : kExitInternal;
    }

    if (weil_cmd->parsed()) {
      TorusInput input = resolve_source(source, rank_param, n_param);
      LocalArithmeticData arith = input.arithmetic
                                      ? *input.arithmetic
                                      : preset_arithmetic(input.lattice, "unramified");
      WeilReport report = weil_report(input.lattice, arith, weil_mod, denominators);
      if (as_json)
        std::cout << weil_report_to_json(report).dump(2) << "\n";
      else
        std::cout << weil_report_to_text(report);
      bool ok = report.zeta_identities && report.z_identities &&
                report.coboundary_detects_zero && report.exp_compatible;
      return ok ? kExitOk : kExitOracleMismatch;
    }

    if (oracle_cmd->parsed()) {
      std::cout << "enumeration sweep (seed " << sweep.seed << "):\n";
      SweepSummary enum_sweep = run_enumeration_sweep(sweep);
      print_sweep(enum_sweep, verbose);
      std::cout << "\ncyclic-formula sweep (orders <= " << cyclic_order << "):\n";
      SweepSummary cyc_sweep = run_cyclic_sweep(cyclic_order);
      print_sweep(cyc_sweep, verbose);
      return enum_sweep.all_ok() && cyc_sweep.all_ok() ? kExitOk : kExitOracleMismatch;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
