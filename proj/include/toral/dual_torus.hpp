#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "toral/abelian_group.hpp"
#include "toral/galois_lattice.hpp"
#include "toral/rational_lattice.hpp"

namespace toral {

// Complex diagonalizable group, determined by its character group. The
// identity component is the torus with the torsion-free quotient as its
// character lattice; the component group is the torsion.
struct DiagonalizableGroup {
  FinGenAbGroup character_group;

  bool operator==(const DiagonalizableGroup& rhs) const = default;
  std::size_t torus_rank() const { return character_group.free_rank(); }
};

DiagonalizableGroup dual_torus_of(const GaloisLattice& x);
// Fixed points of the dual torus: character group = coinvariants of Hom(X,Z).
DiagonalizableGroup fixed_points(const GaloisLattice& x);
// Coinvariant torus of the dual torus: character group = invariants of
// Hom(X,Z), a free group.
DiagonalizableGroup coinvariant_group(const GaloisLattice& x);
DiagonalizableGroup identity_component(const DiagonalizableGroup& d);
FinGenAbGroup component_group(const DiagonalizableGroup& d);

// The unramified character torus computed from inertia coinvariants of the
// cocharacter side followed by Frobenius invariants, plus its cocharacter
// lattice embedded in the rational span of the invariants of X by the pairing
// iota([y])(x) = <x, y>.
struct UnramifiedCharacterData {
  // Characters of the Frobenius fixed points of the inertia-coinvariant dual
  // torus; torsion kept so the component group stays inspectable.
  FinGenAbGroup fr_fixed_characters;
  DiagonalizableGroup torus;            // identity component: the torus X_T
  RationalLattice cocharacter_lattice;  // X_*(X_T), ambient = rank(X)
};

UnramifiedCharacterData unramified_character_torus(const GaloisLattice& x,
                                                   const LocalArithmeticData& arith);

struct SandwichReport {
  RationalLattice x_gamma;    // invariants of X
  RationalLattice cochar_xt;  // X_*(X_T)
  RationalLattice pr_lattice; // averaging projection of X
  bool inclusion_xgamma_in_xt = false;
  bool inclusion_xt_in_pr = false;
  LatticeIndex index_xt_over_xgamma{true, 0};
  LatticeIndex index_pr_over_xt{true, 0};
  std::size_t xt_rank = 0;
};

SandwichReport sandwich_report(const GaloisLattice& x, const LocalArithmeticData& arith);

// Comparison of X_T with the character torus X_S of the maximal split
// subtorus (character group = invariants of the dual module), both embedded
// by the same pairing.
struct XsComparison {
  DiagonalizableGroup xs;
  RationalLattice cochar_xs;
  std::size_t xt_rank = 0;
  std::size_t xs_rank = 0;
  bool ranks_equal = false;
  bool inertia_trivial = false;
  bool lattices_equal = false;
};

XsComparison xs_comparison(const GaloisLattice& x, const LocalArithmeticData& arith);

}  // namespace toral
