#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "toral/error.hpp"
#include "toral/oracle_sweep.hpp"
#include "toral/report.hpp"

namespace py = pybind11;
using namespace toral;

namespace {

// Matrices cross the boundary as lists of rows of decimal strings, the same
// encoding the JSON schema uses, so Python integers of any size survive.
IntMatrix matrix_from_py(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Int>> conv;
  for (const auto& row : rows) {
    std::vector<Int> r;
    for (const auto& e : row) r.push_back(int_from_string(e));
    conv.push_back(std::move(r));
  }
  return IntMatrix::from_rows(conv);
}

std::vector<std::vector<std::string>> matrix_to_py(const IntMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows(),
                                            std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j).get_str();
  return out;
}

std::vector<std::vector<std::string>> lattice_basis_to_py(const RationalLattice& l) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : l.basis()) {
    std::vector<std::string> r;
    for (const Rat& x : row) r.push_back(rat_to_string(x));
    out.push_back(std::move(r));
  }
  return out;
}

GaloisLattice lattice_from_parts(std::size_t order, const std::vector<int>& mult_table,
                                 int identity,
                                 const std::vector<std::vector<std::vector<std::string>>>& action) {
  FiniteGroup group(order, mult_table, identity);
  std::vector<IntMatrix> mats;
  for (const auto& m : action) mats.push_back(matrix_from_py(m));
  return GaloisLattice(std::move(group), std::move(mats));
}

LocalArithmeticData arith_for(const GaloisLattice& x, const std::string& variant) {
  return preset_arithmetic(x, variant);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact invariants of algebraic tori presented as Galois lattices";

  py::register_exception<Error>(m, "ToralError");

  py::class_<FinGenAbGroup>(m, "FinGenAbGroup")
      .def_property_readonly("free_rank", &FinGenAbGroup::free_rank)
      .def_property_readonly("torsion",
                             [](const FinGenAbGroup& g) {
                               std::vector<std::string> out;
                               for (const Int& d : g.torsion()) out.push_back(d.get_str());
                               return out;
                             })
      .def("is_trivial", &FinGenAbGroup::is_trivial)
      .def("__eq__", [](const FinGenAbGroup& a, const FinGenAbGroup& b) { return a == b; })
      .def("__str__", &FinGenAbGroup::to_string)
      .def("__repr__",
           [](const FinGenAbGroup& g) { return "FinGenAbGroup(" + g.to_string() + ")"; });

  py::class_<RationalLattice>(m, "RationalLattice")
      .def_property_readonly("ambient_dim", &RationalLattice::ambient_dim)
      .def_property_readonly("rank", &RationalLattice::rank)
      .def_property_readonly("basis", &lattice_basis_to_py)
      .def("__eq__",
           [](const RationalLattice& a, const RationalLattice& b) { return a == b; })
      .def("__repr__", &RationalLattice::to_string);

  py::class_<GaloisLattice>(m, "GaloisLattice")
      .def(py::init(&lattice_from_parts), py::arg("order"), py::arg("mult_table"),
           py::arg("identity_index"), py::arg("action"))
      .def_property_readonly("rank", &GaloisLattice::rank)
      .def_property_readonly("group_order",
                             [](const GaloisLattice& x) { return x.group().order(); })
      .def("action", [](const GaloisLattice& x, int g) { return matrix_to_py(x.action(g)); });

  py::class_<LocalArithmeticData>(m, "LocalArithmeticData")
      .def_readonly("inertia", &LocalArithmeticData::inertia)
      .def_readonly("frobenius", &LocalArithmeticData::frobenius);

  m.def("catalog", &catalog_keys);
  m.def("preset", &preset, py::arg("name"), py::arg("param") = -1);
  m.def("preset_arithmetic", &arith_for, py::arg("lattice"), py::arg("variant"));

  m.def("invariants", &invariants);
  m.def("coinvariants", &coinvariants);
  m.def("projection_lattice", &projection_lattice);
  m.def("dual_module", &dual_module);

  m.def(
      "cohomology",
      [](const GaloisLattice& x, int degree, long modulus) {
        CoefficientModule coeff = modulus >= 2
                                      ? CoefficientModule::finite_kind(x, Int(modulus))
                                      : CoefficientModule::lattice_kind(x);
        return cohomology_group(x.group(), coeff, degree).group;
      },
      py::arg("lattice"), py::arg("degree"), py::arg("modulus") = 0);
  m.def(
      "cyclic_oracle",
      [](const GaloisLattice& x, int degree, long modulus) {
        auto gen = x.group().cyclic_generator();
        if (!gen) fail(ErrorKind::not_cyclic, "group is not cyclic");
        CoefficientModule coeff = modulus >= 2
                                      ? CoefficientModule::finite_kind(x, Int(modulus))
                                      : CoefficientModule::lattice_kind(x);
        return cyclic_oracle(x.group(), *gen, coeff, degree);
      },
      py::arg("lattice"), py::arg("degree"), py::arg("modulus") = 0);
  m.def(
      "brute_force_cohomology",
      [](const GaloisLattice& x, int degree, long modulus) {
        return brute_force_cohomology(x.group(),
                                      CoefficientModule::finite_kind(x, Int(modulus)),
                                      degree);
      },
      py::arg("lattice"), py::arg("degree"), py::arg("modulus"));

  m.def("fixed_point_characters",
        [](const GaloisLattice& x) { return fixed_points(x).character_group; });
  m.def("fixed_point_component_group",
        [](const GaloisLattice& x) { return component_group(fixed_points(x)); });

  m.def(
      "sandwich",
      [](const GaloisLattice& x, const LocalArithmeticData& arith) {
        SandwichReport s = sandwich_report(x, arith);
        py::dict out;
        out["x_gamma"] = s.x_gamma;
        out["cochar_xt"] = s.cochar_xt;
        out["pr_lattice"] = s.pr_lattice;
        out["inclusions_hold"] = s.inclusion_xgamma_in_xt && s.inclusion_xt_in_pr;
        out["index_xt_over_xgamma"] = s.index_xt_over_xgamma.to_string();
        out["index_pr_over_xt"] = s.index_pr_over_xt.to_string();
        out["xt_rank"] = s.xt_rank;
        return out;
      },
      py::arg("lattice"), py::arg("arithmetic"));

  m.def(
      "weil_suite",
      [](const GaloisLattice& x, const LocalArithmeticData& arith, long modulus,
         long denominators) {
        WeilReport r = weil_report(x, arith, modulus, denominators);
        py::dict out;
        out["zeta_cocycle_identities"] = r.zeta_identities;
        out["z_cocycle_identities"] = r.z_identities;
        out["coboundary_detects_zero_only"] = r.coboundary_detects_zero;
        out["exp_compatibility"] = r.exp_compatible;
        out["h1_fr_coinvariants"] = r.h1_count;
        return out;
      },
      py::arg("lattice"), py::arg("arithmetic"), py::arg("modulus") = 2,
      py::arg("denominators") = 4);

  m.def(
      "analyze_json",
      [](const std::string& source, const std::string& arith_variant, long param,
         long modulus) {
        TorusInput input{preset(source, param), std::nullopt};
        if (!arith_variant.empty())
          input.arithmetic = preset_arithmetic(input.lattice, arith_variant);
        AnalysisOptions options;
        if (modulus >= 2) options.modulus = Int(modulus);
        return analysis_to_json(analyze(input, options)).dump(2);
      },
      py::arg("preset"), py::arg("arith") = "", py::arg("param") = -1,
      py::arg("modulus") = 0);
  m.def("analyze_document_json", [](const std::string& text) {
    return analysis_to_json(analyze(parse_torus_input_text(text))).dump(2);
  });

  m.def(
      "oracle_sweep",
      [](int max_group, long max_mod, int max_rank, unsigned seed) {
        SweepOptions options;
        options.max_group_order = max_group;
        options.max_modulus = max_mod;
        options.max_rank = max_rank;
        options.seed = seed;
        SweepSummary s = run_enumeration_sweep(options);
        py::dict out;
        out["performed"] = s.performed;
        out["mismatches"] = s.mismatches;
        out["skipped"] = s.skipped;
        return out;
      },
      py::arg("max_group") = 4, py::arg("max_mod") = 3, py::arg("max_rank") = 1,
      py::arg("seed") = 1);
}
