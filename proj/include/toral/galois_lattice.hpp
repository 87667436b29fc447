#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toral/abelian_group.hpp"
#include "toral/finite_group.hpp"
#include "toral/rational_lattice.hpp"

namespace toral {

struct ValidationIssue {
  std::string check;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;
};

// Z^rank with an action of a finite group by integer matrices. Construction
// enforces the action axioms, so a GaloisLattice in hand is always valid;
// validate() produces the full report for unchecked input.
class GaloisLattice {
 public:
  GaloisLattice(FiniteGroup group, std::vector<IntMatrix> action);

  static ValidationReport validate(const FiniteGroup& group, std::size_t rank,
                                   const std::vector<IntMatrix>& action);

  std::size_t rank() const { return rank_; }
  const FiniteGroup& group() const { return group_; }
  const IntMatrix& action(int g) const { return action_[g]; }
  const std::vector<IntMatrix>& actions() const { return action_; }

  bool operator==(const GaloisLattice& rhs) const = default;

 private:
  std::size_t rank_;
  FiniteGroup group_;
  std::vector<IntMatrix> action_;
};

// Saturated fixed lattice: intersection of ker(action(g) - id).
RationalLattice invariants(const GaloisLattice& x);

// Cokernel of the span of all (action(g) - id).
FinGenAbGroup coinvariants(const GaloisLattice& x);

// (1/|G|) * (sum of action matrices) applied to Z^rank, inside the rational
// span of the invariants; contains invariants(x) with finite index.
RationalLattice projection_lattice(const GaloisLattice& x);

// Hom(X, Z) with the contragredient action g -> action(g^{-1})^T.
GaloisLattice dual_module(const GaloisLattice& x);

// Induced module along a subgroup inclusion: m lives over the subgroup of
// `big` on elements sub_elements (element i of m.group() <-> sub_elements[i]).
GaloisLattice induce(const FiniteGroup& big, const std::vector<int>& sub_elements,
                     const GaloisLattice& m);

// Inertia subgroup and Frobenius element for the local picture: inertia is a
// normal subgroup and the quotient must be cyclic, generated by frobenius.
struct LocalArithmeticData {
  std::vector<int> inertia;
  int frobenius;
};

LocalArithmeticData make_arithmetic(const FiniteGroup& group, std::vector<int> inertia,
                                    int frobenius);

// Preset catalog. Parameterized presets take a single parameter (rank for
// "split", n for the cyclic families); -1 selects the catalog default.
GaloisLattice preset(const std::string& name, long param = -1);
LocalArithmeticData preset_arithmetic(const GaloisLattice& x, const std::string& variant);
bool preset_arithmetic_admissible(const GaloisLattice& x, const std::string& variant);
std::vector<std::string> catalog_keys();
std::vector<std::string> arithmetic_variant_keys();

}  // namespace toral
