#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toral/abelian_group.hpp"
#include "toral/galois_lattice.hpp"

namespace toral {

// Finitely presented model of the unramified Weil-group quotient: the group
// is Z, an element being m Frobenius steps with units quotiented away. The
// Galois group must be cyclic, generated by the designated Frobenius.
//
// Sign convention (recorded in every report): the one-step generator has
// log_q |omega| = -1, so log_q |m steps| = -m.
class UnramifiedWeilModel {
 public:
  UnramifiedWeilModel(GaloisLattice torus, int frobenius);
  // From local arithmetic data with trivial inertia.
  static UnramifiedWeilModel unramified(const GaloisLattice& torus,
                                        const LocalArithmeticData& arith);

  const GaloisLattice& torus() const { return torus_; }
  int frobenius() const { return frobenius_; }
  std::size_t degree() const { return torus_.group().order(); }
  std::size_t rank() const { return torus_.rank(); }

  // Action of m Frobenius steps on Q tensor X.
  const IntMatrix& frobenius_power(long steps) const;

 private:
  GaloisLattice torus_;
  int frobenius_;
  std::vector<IntMatrix> powers_;  // frobenius^k for k = 0..degree-1
};

struct WeilElement {
  long steps = 0;  // omega = Fr^steps (times a unit)
};

inline long log_q_abs(const WeilElement& w) { return -w.steps; }

using LieVector = std::vector<Rat>;     // rational slice of Lie(T-dual) = Q tensor X
using TorsionPoint = std::vector<Rat>;  // finite-order point, coordinates mod 1

bool is_invariant(const UnramifiedWeilModel& model, const LieVector& nu);
bool is_invariant_torsion(const UnramifiedWeilModel& model, const TorsionPoint& s);

// zeta_nu(omega) = log_q|omega| * nu; requires nu invariant.
LieVector zeta(const UnramifiedWeilModel& model, const LieVector& nu,
               const WeilElement& omega);

struct CocycleCheck {
  bool ok = true;
  long first_failure_m1 = 0;
  long first_failure_m2 = 0;
};

// Checks zeta_nu(w1 w2) = zeta_nu(w1) + Fr^{m1} zeta_nu(w2) on all pairs with
// |m_i| <= max_abs_step. Accepts non-invariant nu so corruption is detectable.
CocycleCheck verify_zeta_cocycle(const UnramifiedWeilModel& model, const LieVector& nu,
                                 long max_abs_step = 10);

// Whether zeta_nu is a coboundary Fr^m(mu) - mu; solved as a linear system at
// the one-step generator. For invariant nu this holds exactly when nu = 0.
bool is_coboundary_zeta(const UnramifiedWeilModel& model, const LieVector& nu);

// z_s(omega) = s^{log_q|omega|} in exact mod-1 coordinates; s invariant of
// finite order.
TorsionPoint z_cocycle(const UnramifiedWeilModel& model, const TorsionPoint& s,
                       const WeilElement& omega);

CocycleCheck verify_z_cocycle(const UnramifiedWeilModel& model, const TorsionPoint& s,
                              long max_abs_step = 10);

// e(zeta_nu(omega)) = z_{e(nu)}(omega) with e the coordinatewise reduction
// Q -> Q/Z standing in for the exponential.
bool exp_compatibility(const UnramifiedWeilModel& model, const LieVector& nu,
                       long max_abs_step = 10);

// Coinvariants of Frobenius on the m-torsion model (Z/m) tensor X, checked
// internally against direct enumeration of cocycle classes of the model group
// Z (a cocycle is free on its value at one step; classes mod (Fr-1)-image).
FinGenAbGroup model_h1_count(const UnramifiedWeilModel& model, const Int& modulus);

// All invariant torsion points of order at most max_order (deduplicated).
std::vector<TorsionPoint> invariant_torsion_points(const UnramifiedWeilModel& model,
                                                   long max_order);

}  // namespace toral
