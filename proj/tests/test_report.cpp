#include "doctest.h"
#include "toral/error.hpp"
#include "toral/oracle_sweep.hpp"
#include "toral/report.hpp"

using namespace toral;

namespace {

TorusInput sign_input(bool with_arith) {
  GaloisLattice x = preset("sign");
  TorusInput input{x, std::nullopt};
  if (with_arith) input.arithmetic = preset_arithmetic(x, "unramified");
  return input;
}

}  // namespace

TEST_CASE("torus input documents round-trip") {
  for (bool with_arith : {false, true}) {
    TorusInput input = sign_input(with_arith);
    Json doc = render_torus_input(input);
    TorusInput back = parse_torus_input(doc);
    CHECK(back.lattice == input.lattice);
    CHECK(back.arithmetic.has_value() == with_arith);
    if (with_arith) {
      CHECK(back.arithmetic->inertia == input.arithmetic->inertia);
      CHECK(back.arithmetic->frobenius == input.arithmetic->frobenius);
    }
    // Render/parse/render is byte-stable.
    CHECK(render_torus_input(back).dump(2) == doc.dump(2));
  }
}

TEST_CASE("parse errors carry field paths") {
  auto expect_parse_error = [](const char* text, const char* needle) {
    try {
      parse_torus_input_text(text);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_parse_error("{", "invalid JSON");
  expect_parse_error(R"({"version": 2})", "version");
  expect_parse_error(R"({"version": 1, "group": {"order": 1}})", "mult_table");
  expect_parse_error(
      R"({"version": 1, "group": {"order": 1, "mult_table": [0]}, "action": []})",
      "action");
  // Structurally fine but not a group action.
  try {
    parse_torus_input_text(
        R"({"version": 1,
            "group": {"order": 2, "identity_index": 0, "mult_table": [0,1,1,0]},
            "action": [[["1","0"],["0","1"]], [["0","-1"],["1","0"]]]})");
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::validation);
  }
}

TEST_CASE("analysis reports are byte-stable and cross-checked") {
  TorusInput input = sign_input(true);
  AnalysisResult result = analyze(input);
  CHECK(result.h_x.h1 == FinGenAbGroup(0, {Int(2)}));
  CHECK(result.fixed_points_components == FinGenAbGroup(0, {Int(2)}));
  CHECK(result.check_h1_is_component_group);
  CHECK(result.check_h1_order_is_dual_coinvariant_torsion);
  REQUIRE(result.check_cyclic_oracle.has_value());
  CHECK(*result.check_cyclic_oracle);
  REQUIRE(result.unramified.has_value());
  CHECK(result.unramified->torus.torus_rank() == 0);

  std::string once = analysis_to_json(result).dump(2);
  std::string twice = analysis_to_json(analyze(input)).dump(2);
  CHECK(once == twice);

  // Text output mirrors the notation of the reports.
  std::string text = analysis_to_text(result);
  CHECK(text.find("X^Γ") != std::string::npos);
  CHECK(text.find("Pr_Γ(X)") != std::string::npos);
  CHECK(text.find("H^1(Γ, X) = Z/2") != std::string::npos);
}

TEST_CASE("analysis json includes the convention block") {
  Json doc = analysis_to_json(analyze(sign_input(false)));
  CHECK(doc.contains("conventions"));
  CHECK(doc["conventions"]["frobenius_log_q_step"] == "-1");
  CHECK(doc["version"] == 1);
  CHECK(!doc.contains("unramified"));
}

TEST_CASE("weil report on the restriction-of-scalars preset") {
  GaloisLattice x = preset("weil_restriction", 2);
  WeilReport report = weil_report(x, preset_arithmetic(x, "unramified"), 2, 4);
  CHECK(report.zeta_identities);
  CHECK(report.z_identities);
  CHECK(report.coboundary_detects_zero);
  CHECK(report.exp_compatible);
  CHECK(report.h1_count == FinGenAbGroup(0, {Int(2)}));
  Json doc = weil_report_to_json(report);
  CHECK(doc["kind"] == "weil");
}

TEST_CASE("oracle sweeps") {
  SUBCASE("small clean sweep has no mismatches") {
    SweepOptions options;
    options.max_group_order = 3;
    options.max_modulus = 2;
    options.max_rank = 1;
    SweepSummary summary = run_enumeration_sweep(options);
    CHECK(summary.performed > 0);
    CHECK(summary.mismatches == 0);
  }
  SUBCASE("fault injection is detected") {
    SweepOptions options;
    options.max_group_order = 1;
    options.max_modulus = 2;
    options.max_rank = 1;
    options.inject_fault = true;
    SweepSummary summary = run_enumeration_sweep(options);
    CHECK(summary.mismatches > 0);
  }
  SUBCASE("cyclic sweep up to order 6") {
    SweepSummary summary = run_cyclic_sweep(6);
    CHECK(summary.performed > 0);
    CHECK(summary.mismatches == 0);
  }
}
