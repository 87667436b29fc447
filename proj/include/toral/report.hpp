#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "toral/cohomology.hpp"
#include "toral/dual_torus.hpp"
#include "toral/galois_lattice.hpp"
#include "toral/weil_model.hpp"

namespace toral {

using Json = nlohmann::ordered_json;

// JSON building blocks. Unbounded quantities (matrix entries, invariant
// factors, lattice coordinates, indices) are decimal/fraction strings;
// bounded structural data (ranks, element indices) are plain JSON integers.
Json group_to_json(const FinGenAbGroup& g);
FinGenAbGroup group_from_json(const Json& j);
Json lattice_to_json(const RationalLattice& l);
RationalLattice lattice_from_json(const Json& j);

struct TorusInput {
  GaloisLattice lattice;
  std::optional<LocalArithmeticData> arithmetic;
};

// TorusInputDocument schema under a {"version": 1, ...} envelope; parse
// errors carry the offending field path.
TorusInput parse_torus_input(const Json& doc);
TorusInput parse_torus_input_text(const std::string& text);
Json render_torus_input(const TorusInput& input);

struct AnalysisOptions {
  std::optional<Int> modulus;  // additionally analyze the mod-m reduction
};

struct DegreeTriple {
  FinGenAbGroup h0, h1, h2;
};

struct AnalysisResult {
  explicit AnalysisResult(TorusInput in) : input(std::move(in)) {}

  TorusInput input;
  RationalLattice x_gamma;
  FinGenAbGroup coinv;
  RationalLattice pr_lattice;
  LatticeIndex index_inv_in_pr{true, 0};
  DegreeTriple h_x;
  DegreeTriple h_x_dual;
  std::optional<Int> modulus;
  std::optional<DegreeTriple> h_x_mod;
  FinGenAbGroup fixed_points_characters;
  FinGenAbGroup fixed_points_components;
  std::size_t fixed_points_rank = 0;
  std::size_t coinvariant_torus_rank = 0;
  std::optional<UnramifiedCharacterData> unramified;
  std::optional<SandwichReport> sandwich;
  std::optional<XsComparison> xs;
  // Built-in cross-checks; all must hold for a valid run.
  bool check_h1_is_component_group = false;
  bool check_h1_order_is_dual_coinvariant_torsion = false;
  std::optional<bool> check_cyclic_oracle;  // absent when the group is not cyclic
};

AnalysisResult analyze(const TorusInput& input, const AnalysisOptions& options = {});

Json analysis_to_json(const AnalysisResult& result);
std::string analysis_to_text(const AnalysisResult& result);

// Conventions block emitted in every report.
Json conventions_json();

// Weil-model verification report for cmd_weil.
struct WeilReport {
  std::size_t degree = 0;
  long modulus = 2;
  long denominator_bound = 4;
  bool zeta_identities = false;
  bool z_identities = false;
  bool coboundary_detects_zero = false;
  bool exp_compatible = false;
  FinGenAbGroup h1_count;
  std::size_t torsion_points_checked = 0;
  std::size_t lie_vectors_checked = 0;
};

WeilReport weil_report(const GaloisLattice& x, const LocalArithmeticData& arith,
                       long modulus, long denominator_bound, unsigned seed = 1);
Json weil_report_to_json(const WeilReport& report);
std::string weil_report_to_text(const WeilReport& report);

Json sandwich_to_json(const SandwichReport& report);
std::string sandwich_to_text(const SandwichReport& report);

}  // namespace toral
