#include "toral/dual_torus.hpp"

#include "toral/error.hpp"
#include "toral/smith.hpp"

namespace toral {

namespace {

// Relation matrix for the inertia coinvariants of the dual module: columns
// span sum of (action(i) - id) over inertia.
IntMatrix inertia_relations(const GaloisLattice& x_hat, const std::vector<int>& inertia) {
  IntMatrix id = IntMatrix::identity(x_hat.rank());
  IntMatrix out(x_hat.rank(), 0);
  for (int i : inertia) {
    if (i == x_hat.group().identity()) continue;
    out = IntMatrix::hstack(out, x_hat.action(i) - id);
  }
  return out;
}

// Pairing map iota: a cocharacter-side vector y pairs against the basis of
// X^Gamma, giving coordinates in Hom(X^Gamma, Z).
std::vector<std::vector<Rat>> pair_against_invariants(const RationalLattice& x_gamma,
                                                      const IntMatrix& vectors) {
  const std::size_t k = x_gamma.rank();
  std::vector<std::vector<Rat>> out(vectors.cols(), std::vector<Rat>(k));
  for (std::size_t c = 0; c < vectors.cols(); ++c)
    for (std::size_t i = 0; i < k; ++i) {
      Rat acc = 0;
      for (std::size_t a = 0; a < x_gamma.ambient_dim(); ++a)
        acc += x_gamma.basis()[i][a] * Rat(vectors.at(a, c));
      out[c][i] = acc;
    }
  return out;
}

// Takes the dual of a functional lattice inside Hom(X^Gamma, Z)-coordinates
// and maps it back into the ambient of X through the invariant basis.
RationalLattice functional_dual_in_ambient(const RationalLattice& x_gamma,
                                           const std::vector<std::vector<Rat>>& functionals) {
  const std::size_t k = x_gamma.rank();
  RationalLattice l_t = RationalLattice::from_generators(k, functionals);
  RationalLattice dual = dual_lattice(l_t, IntMatrix::identity(k));
  std::vector<std::vector<Rat>> gens(dual.rank(),
                                     std::vector<Rat>(x_gamma.ambient_dim()));
  for (std::size_t i = 0; i < dual.rank(); ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t a = 0; a < x_gamma.ambient_dim(); ++a)
        gens[i][a] += dual.basis()[i][j] * x_gamma.basis()[j][a];
  return RationalLattice::from_generators(x_gamma.ambient_dim(), gens);
}

}  // namespace

DiagonalizableGroup dual_torus_of(const GaloisLattice& x) {
  return DiagonalizableGroup{FinGenAbGroup::free_of_rank(x.rank())};
}

DiagonalizableGroup fixed_points(const GaloisLattice& x) {
  return DiagonalizableGroup{coinvariants(dual_module(x))};
}

DiagonalizableGroup coinvariant_group(const GaloisLattice& x) {
  return DiagonalizableGroup{
      FinGenAbGroup::free_of_rank(invariants(dual_module(x)).rank())};
}

DiagonalizableGroup identity_component(const DiagonalizableGroup& d) {
  return DiagonalizableGroup{d.character_group.free_part()};
}

FinGenAbGroup component_group(const DiagonalizableGroup& d) {
  return d.character_group.torsion_part();
}

UnramifiedCharacterData unramified_character_torus(const GaloisLattice& x,
                                                   const LocalArithmeticData& arith) {
  // Validates inertia/frobenius against the group of x.
  make_arithmetic(x.group(), arith.inertia, arith.frobenius);

  GaloisLattice x_hat = dual_module(x);
  const std::size_t n = x.rank();
  IntMatrix relations = inertia_relations(x_hat, arith.inertia);
  IntMatrix fr_minus_1 = x_hat.action(arith.frobenius) - IntMatrix::identity(n);

  // Frobenius invariants of Z^n / relations: x with (Fr - 1)x in the relation
  // span, as a lattice, modulo the relations.
  IntMatrix lifted = kernel_basis(IntMatrix::hstack(fr_minus_1, relations.negated()));
  std::vector<std::vector<Rat>> x_star_gens;
  for (std::size_t c = 0; c < lifted.cols(); ++c) {
    std::vector<Rat> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rat(lifted.at(i, c));
    x_star_gens.push_back(std::move(v));
  }
  RationalLattice x_star = RationalLattice::from_generators(n, x_star_gens);
  auto [basis_rows, den] = x_star.scaled_basis();
  if (den != 1) fail(ErrorKind::internal, "Frobenius-invariant lattice must be integral");
  IntMatrix p = basis_rows.transpose();  // columns = basis of X*
  auto y = solve_integral(p, relations);
  if (!y) fail(ErrorKind::internal, "inertia relations escape the invariant lattice");
  FinGenAbGroup m_group = cokernel(*y, p.cols());

  // iota embedding of the cocharacter lattice: pair generators of M against
  // the invariant basis, then dualize inside Hom(X^Gamma, Z).
  RationalLattice x_gamma = invariants(x);
  std::vector<std::vector<Rat>> functionals = pair_against_invariants(x_gamma, p);
  RationalLattice cochar = functional_dual_in_ambient(x_gamma, functionals);

  UnramifiedCharacterData out;
  out.fr_fixed_characters = m_group;
  out.torus = DiagonalizableGroup{m_group.free_part()};
  out.cocharacter_lattice = cochar;
  return out;
}

SandwichReport sandwich_report(const GaloisLattice& x, const LocalArithmeticData& arith) {
  SandwichReport report;
  report.x_gamma = invariants(x);
  report.pr_lattice = projection_lattice(x);
  UnramifiedCharacterData unram = unramified_character_torus(x, arith);
  report.cochar_xt = unram.cocharacter_lattice;
  report.xt_rank = report.cochar_xt.rank();
  try {
    report.index_xt_over_xgamma = lattice_index(report.x_gamma, report.cochar_xt);
    report.inclusion_xgamma_in_xt = true;
  } catch (const Error&) {
    report.inclusion_xgamma_in_xt = false;
  }
  try {
    report.index_pr_over_xt = lattice_index(report.cochar_xt, report.pr_lattice);
    report.inclusion_xt_in_pr = true;
  } catch (const Error&) {
    report.inclusion_xt_in_pr = false;
  }
  return report;
}

XsComparison xs_comparison(const GaloisLattice& x, const LocalArithmeticData& arith) {
  XsComparison out;
  out.xs = coinvariant_group(x);

  RationalLattice x_gamma = invariants(x);
  RationalLattice x_hat_gamma = invariants(dual_module(x));
  auto [rows, den] = x_hat_gamma.scaled_basis();
  if (den != 1) fail(ErrorKind::internal, "invariant lattice must be integral");
  std::vector<std::vector<Rat>> functionals =
      pair_against_invariants(x_gamma, rows.transpose());
  out.cochar_xs = functional_dual_in_ambient(x_gamma, functionals);

  UnramifiedCharacterData unram = unramified_character_torus(x, arith);
  out.xt_rank = unram.cocharacter_lattice.rank();
  out.xs_rank = out.cochar_xs.rank();
  out.ranks_equal = out.xt_rank == out.xs_rank;
  out.inertia_trivial = arith.inertia.size() == 1;
  out.lattices_equal = unram.cocharacter_lattice == out.cochar_xs;
  return out;
}

}  // namespace toral
