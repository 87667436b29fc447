#pragma once

#include <cstddef>
#include <vector>

#include "toral/abelian_group.hpp"
#include "toral/galois_lattice.hpp"
#include "toral/smith.hpp"

namespace toral {

// Coefficients for group cohomology: either the lattice Z^rank itself or a
// module (Z/m)^rank, a computable stand-in for the torsion points of the dual
// torus. Finite-kind matrices need only satisfy the action axioms mod m, so
// reductions that do not lift to integral actions are usable.
struct CoefficientModule {
  enum class Kind { lattice, finite };

  Kind kind = Kind::lattice;
  FiniteGroup group = FiniteGroup::trivial();
  std::vector<IntMatrix> action;
  Int modulus;  // >= 2 exactly when kind == finite

  static CoefficientModule lattice_kind(const GaloisLattice& x);
  static CoefficientModule finite_kind(const GaloisLattice& x, const Int& modulus);
  // Validates the action axioms mod m only.
  static CoefficientModule finite_kind_mod(FiniteGroup group,
                                           std::vector<IntMatrix> action,
                                           const Int& modulus);

  std::size_t rank() const { return action.empty() ? 0 : action[0].rows(); }
  bool is_finite() const { return kind == Kind::finite; }
  const IntMatrix& act(int g) const { return action[g]; }
};

// Inhomogeneous cochain: a function Gamma^degree -> M, stored as the flat
// list of values, block t of size rank() holding the value on the tuple with
// index t (little-endian tuple encoding).
struct Cochain {
  int degree;
  std::vector<Int> values;
};

std::size_t tuple_count(std::size_t order, int n);
std::size_t cochain_dim(const FiniteGroup& g, const CoefficientModule& m, int n);

// Coboundary matrices d^0, ..., d^n_max of the inhomogeneous (non-normalized)
// cochain complex; d^{k+1} d^k = 0.
std::vector<IntMatrix> cochain_complex(const FiniteGroup& g, const CoefficientModule& m,
                                       int n_max);
IntMatrix coboundary_matrix(const FiniteGroup& g, const CoefficientModule& m, int n);
// d^n applied to one cochain without materializing the matrix.
std::vector<Int> apply_coboundary(const FiniteGroup& g, const CoefficientModule& m, int n,
                                  const std::vector<Int>& values);

struct CohomologyClassGroup {
  int degree;
  FinGenAbGroup group;
  // One representative cocycle per invariant factor / free generator, present
  // only when requested.
  std::vector<Cochain> generators;
};

// H^n(G, M) = ker d^n / im d^{n-1} for n in {0, 1, 2}. Degree 0 returns the
// invariants of the module.
CohomologyClassGroup cohomology_group(const FiniteGroup& g, const CoefficientModule& m,
                                      int n, bool with_representatives = false);

// Tate-style closed formulas for a cyclic group with chosen generator:
// n = 0 -> M^G, odd n -> ker N / im(sigma - 1), even n >= 2 -> M^G / N(M).
FinGenAbGroup cyclic_oracle(const FiniteGroup& g, int generator,
                            const CoefficientModule& m, int n);

// Exhaustive cocycle enumeration for finite coefficients (independent
// oracle); refuses with BudgetExceeded when |M|^(|G|^n) exceeds the budget.
FinGenAbGroup brute_force_cohomology(const FiniteGroup& g, const CoefficientModule& m,
                                     int n);

// Candidate-cochain budget for enumeration oracles; env TORAL_ENUM_BUDGET
// overrides the default of 10^7.
Int enumeration_budget();

bool is_cocycle(const FiniteGroup& g, const CoefficientModule& m, const Cochain& c);
bool is_coboundary(const FiniteGroup& g, const CoefficientModule& m, const Cochain& c);
bool classes_equal(const FiniteGroup& g, const CoefficientModule& m, const Cochain& a,
                   const Cochain& b);
Cochain cochain_add(const CoefficientModule& m, const Cochain& a, const Cochain& b);
Cochain cochain_scale(const CoefficientModule& m, const Int& k, const Cochain& a);

// Standard maps, all at the cochain level in degrees <= 2. Subgroups are
// element-index lists; the subgroup side uses subgroup_group(sub) indexing.
CoefficientModule restrict_module(const FiniteGroup& g, const std::vector<int>& sub,
                                  const CoefficientModule& m);
Cochain restrict_cochain(const FiniteGroup& g, const std::vector<int>& sub,
                         const CoefficientModule& m, const Cochain& c);
Cochain corestrict_cochain(const FiniteGroup& g, const std::vector<int>& sub,
                           const CoefficientModule& m, const Cochain& c_over_sub);
Cochain inflate_cochain(const FiniteGroup& g, const std::vector<int>& normal_sub,
                        const CoefficientModule& m, const Cochain& c_over_quotient);
// Conjugation action of g_elt on cochains of a normal subgroup.
Cochain conjugate_cochain(const FiniteGroup& g, const std::vector<int>& normal_sub,
                          const CoefficientModule& m, const Cochain& c_over_sub,
                          int g_elt);

// Finite module given by an explicit element list (a G-stable subgroup of
// (Z/m)^rank), for enumeration-level work with invariant submodules.
struct EnumeratedModule {
  FiniteGroup group = FiniteGroup::trivial();
  long modulus = 0;
  std::size_t ambient_rank = 0;
  std::vector<std::vector<long>> action;  // per element, rank x rank, row-major
  std::vector<std::vector<long>> elements;
  // Self-test hook for the oracle harness: flips the sign of the last
  // coboundary term in the cocycle test, which must surface as a mismatch.
  bool wrong_sign_fault = false;

  std::size_t size() const { return elements.size(); }
};

EnumeratedModule enumerate_full_module(const FiniteGroup& g, const CoefficientModule& m);
// M^N as a module over G/N: elements fixed by the normal subgroup, acted on
// through coset representatives.
EnumeratedModule invariant_submodule_over_quotient(const FiniteGroup& g,
                                                   const CoefficientModule& m,
                                                   const std::vector<int>& normal_sub);

struct EnumeratedCohomology {
  FinGenAbGroup group;
  // One representative per cohomology class, flat values (length
  // |G|^n * ambient_rank), entries reduced into [0, m).
  std::vector<std::vector<long>> class_reps;
  std::size_t cocycle_count = 0;
  std::size_t coboundary_count = 0;
};

EnumeratedCohomology enumerate_cohomology(const EnumeratedModule& m, int n);

// Whether the flat value table is the coboundary of some cochain valued in
// the enumerated module; checked by enumerating C^{n-1}.
bool is_coboundary_enumerated(const EnumeratedModule& m, int n,
                              const std::vector<long>& values);

}  // namespace toral
