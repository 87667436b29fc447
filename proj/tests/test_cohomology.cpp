#include <random>

#include "doctest.h"
#include "test_helpers.hpp"
#include "toral/cohomology.hpp"
#include "toral/error.hpp"

using namespace toral;

namespace {

CoefficientModule lat(const GaloisLattice& x) {
  return CoefficientModule::lattice_kind(x);
}

CoefficientModule fin(const GaloisLattice& x, long m) {
  return CoefficientModule::finite_kind(x, Int(m));
}

GaloisLattice sign_lattice() { return preset("sign"); }
GaloisLattice swap_lattice() { return preset("weil_restriction", 2); }

// Z/4 acting on Z through the sign of the generator (reduction of the sign
// action along Z/4 -> Z/2).
GaloisLattice z4_sign_lattice() {
  IntMatrix minus(1, 1);
  minus.at(0, 0) = -1;
  return GaloisLattice(FiniteGroup::cyclic(4),
                       {IntMatrix::identity(1), minus, IntMatrix::identity(1), minus});
}

std::vector<GaloisLattice> catalog_defaults() {
  return {preset("split", 2), preset("sign"), preset("norm_one_cyclic", 3),
          preset("weil_restriction", 2), preset("a2_weyl"), preset("dihedral_plane")};
}

}  // namespace

TEST_CASE("cochain complex shapes and d.d = 0") {
  SUBCASE("trivial group: higher cohomology vanishes") {
    GaloisLattice x = preset("split", 2);
    for (int n = 1; n <= 2; ++n)
      CHECK(cohomology_group(x.group(), lat(x), n).group == FinGenAbGroup::trivial());
  }
  SUBCASE("C^1 over Z/2 has one value per group element") {
    GaloisLattice x = sign_lattice();
    CHECK(cochain_dim(x.group(), lat(x), 1) == 2);
    CHECK(cochain_dim(x.group(), lat(x), 2) == 4);
  }
  SUBCASE("composites vanish on catalog modules") {
    for (const GaloisLattice& x : catalog_defaults()) {
      auto ds = cochain_complex(x.group(), lat(x), 3);
      for (int k = 0; k + 1 <= 3; ++k) CHECK((ds[k + 1] * ds[k]).is_zero());
    }
  }
  SUBCASE("matrix-free application agrees with the matrix") {
    std::mt19937 rng(5);
    GaloisLattice x = preset("a2_weyl");
    auto m = lat(x);
    IntMatrix d1 = coboundary_matrix(x.group(), m, 1);
    std::uniform_int_distribution<long> dist(-5, 5);
    std::vector<Int> v(cochain_dim(x.group(), m, 1));
    for (Int& e : v) e = dist(rng);
    IntMatrix col(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) col.at(i, 0) = v[i];
    IntMatrix expect = d1 * col;
    std::vector<Int> got = apply_coboundary(x.group(), m, 1, v);
    REQUIRE(got.size() == expect.rows());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expect.at(i, 0));
  }
}

TEST_CASE("cohomology of pinned modules") {
  GaloisLattice sgn = sign_lattice();
  GaloisLattice reg = swap_lattice();
  // Cyclic oracle derivations: ker N = Z and im(sigma - 1) = 2Z for the sign
  // module; ker N = im(sigma - 1) = {(a, -a)} for the regular representation.
  CHECK(cohomology_group(sgn.group(), lat(sgn), 1).group == FinGenAbGroup(0, {Int(2)}));
  CHECK(cohomology_group(reg.group(), lat(reg), 1).group == FinGenAbGroup::trivial());
  CHECK(cohomology_group(sgn.group(), lat(sgn), 0).group == FinGenAbGroup::trivial());
  GaloisLattice split3 = preset("split", 3);
  CHECK(cohomology_group(split3.group(), lat(split3), 0).group ==
        FinGenAbGroup::free_of_rank(3));
  // M^Gamma / N(M) = Z/2Z for the trivial action of Z/2 on Z.
  GaloisLattice triv_z2(FiniteGroup::cyclic(2), {IntMatrix::identity(1), IntMatrix::identity(1)});
  CHECK(cohomology_group(triv_z2.group(), lat(triv_z2), 2).group ==
        FinGenAbGroup(0, {Int(2)}));
}

TEST_CASE("cyclic oracle") {
  GaloisLattice sgn = sign_lattice();
  CHECK(cyclic_oracle(sgn.group(), 1, lat(sgn), 2) == FinGenAbGroup::trivial());
  GaloisLattice reg3 = preset("weil_restriction", 3);
  CHECK(cyclic_oracle(reg3.group(), 1, lat(reg3), 1) == FinGenAbGroup::trivial());
  GaloisLattice triv_z2(FiniteGroup::cyclic(2), {IntMatrix::identity(1), IntMatrix::identity(1)});
  CHECK(cyclic_oracle(triv_z2.group(), 1, lat(triv_z2), 1) == FinGenAbGroup::trivial());

  GaloisLattice a2 = preset("a2_weyl");
  CHECK_THROWS_AS(cyclic_oracle(a2.group(), 1, lat(a2), 1), Error);
  // A non-generator of a cyclic group is rejected too.
  GaloisLattice reg4 = preset("weil_restriction", 4);
  CHECK_THROWS_AS(cyclic_oracle(reg4.group(), 2, lat(reg4), 1), Error);
}

TEST_CASE("brute force enumeration oracle") {
  GaloisLattice triv_z2(FiniteGroup::cyclic(2), {IntMatrix::identity(1), IntMatrix::identity(1)});
  CHECK(brute_force_cohomology(triv_z2.group(), fin(triv_z2, 2), 1) ==
        FinGenAbGroup(0, {Int(2)}));
  // 4 cocycles, coboundaries {0, 2}.
  GaloisLattice sgn = sign_lattice();
  CHECK(brute_force_cohomology(sgn.group(), fin(sgn, 4), 1) == FinGenAbGroup(0, {Int(2)}));
  GaloisLattice split1 = preset("split", 1);
  CHECK(brute_force_cohomology(split1.group(), fin(split1, 4), 2) ==
        FinGenAbGroup::trivial());
}

TEST_CASE("enumeration budget") {
  GaloisLattice x = preset("weil_restriction", 4);  // (Z/4)^4 cochains over Z/4
  CHECK_THROWS_AS(brute_force_cohomology(x.group(), fin(x, 4), 2), Error);
  try {
    brute_force_cohomology(x.group(), fin(x, 4), 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::budget_exceeded);
  }
}

TEST_CASE("bar resolution agrees with both oracles on small modules") {
  std::vector<GaloisLattice> modules = {sign_lattice(), swap_lattice(),
                                        preset("norm_one_cyclic", 3),
                                        preset("norm_one_cyclic", 4),
                                        preset("weil_restriction", 3), z4_sign_lattice()};
  for (const GaloisLattice& x : modules) {
    int gen = *x.group().cyclic_generator();
    for (int n = 1; n <= 2; ++n) {
      CHECK(cohomology_group(x.group(), lat(x), n).group ==
            cyclic_oracle(x.group(), gen, lat(x), n));
      // Cyclic periodicity: degree n matches the oracle at n + 2.
      CHECK(cohomology_group(x.group(), lat(x), n).group ==
            cyclic_oracle(x.group(), gen, lat(x), n + 2));
      for (long m = 2; m <= 3; ++m) {
        CHECK(cohomology_group(x.group(), fin(x, m), n).group ==
              cyclic_oracle(x.group(), gen, fin(x, m), n));
        Int candidates = 1;
        std::size_t tuples = tuple_count(x.group().order(), n);
        for (std::size_t t = 0; t < tuples * x.rank(); ++t) candidates *= m;
        if (candidates <= enumeration_budget())
          CHECK(cohomology_group(x.group(), fin(x, m), n).group ==
                brute_force_cohomology(x.group(), fin(x, m), n));
      }
    }
  }
}

TEST_CASE("Shapiro vanishing for induced-from-trivial modules") {
  for (const GaloisLattice& x : catalog_defaults()) {
    GaloisLattice reg = induce(x.group(), {x.group().identity()}, preset("split", 1));
    for (int n = 1; n <= 2; ++n)
      CHECK(cohomology_group(reg.group(), lat(reg), n).group == FinGenAbGroup::trivial());
  }
}

TEST_CASE("Shapiro for a nontrivial inducing subgroup") {
  // H^n(Z/4, Ind_{Z/2}^{Z/4} sign) = H^n(Z/2, sign).
  GaloisLattice sgn = sign_lattice();
  GaloisLattice ind = induce(FiniteGroup::cyclic(4), {0, 2}, sgn);
  for (int n = 1; n <= 2; ++n)
    CHECK(cohomology_group(ind.group(), lat(ind), n).group ==
          cohomology_group(sgn.group(), lat(sgn), n).group);
}

TEST_CASE("H^1 order equals the torsion of the dual coinvariants") {
  for (const GaloisLattice& x : catalog_defaults()) {
    FinGenAbGroup h1 = cohomology_group(x.group(), lat(x), 1).group;
    CHECK(h1.torsion_order() == coinvariants(dual_module(x)).torsion_order());
  }
}

TEST_CASE("representative cocycles") {
  GaloisLattice sgn = sign_lattice();
  auto h1 = cohomology_group(sgn.group(), lat(sgn), 1, true);
  REQUIRE(h1.generators.size() == 1);
  CHECK(is_cocycle(sgn.group(), lat(sgn), h1.generators[0]));
  CHECK(!is_coboundary(sgn.group(), lat(sgn), h1.generators[0]));
  // Twice a 2-torsion generator is a coboundary.
  Cochain doubled = cochain_scale(lat(sgn), Int(2), h1.generators[0]);
  CHECK(is_coboundary(sgn.group(), lat(sgn), doubled));

  auto h2 = cohomology_group(sgn.group(), fin(sgn, 4), 2, true);
  for (const Cochain& g : h2.generators) {
    CHECK(is_cocycle(sgn.group(), fin(sgn, 4), g));
    CHECK(!is_coboundary(sgn.group(), fin(sgn, 4), g));
  }
}

TEST_CASE("restriction kills cohomology on the trivial subgroup") {
  GaloisLattice sgn = sign_lattice();
  auto h1 = cohomology_group(sgn.group(), lat(sgn), 1, true);
  REQUIRE(h1.generators.size() == 1);
  std::vector<int> triv{sgn.group().identity()};
  Cochain res = restrict_cochain(sgn.group(), triv, lat(sgn), h1.generators[0]);
  CoefficientModule m_triv = restrict_module(sgn.group(), triv, lat(sgn));
  CHECK(is_coboundary(m_triv.group, m_triv, res));
}

TEST_CASE("corestriction composed with restriction is multiplication by the index") {
  SUBCASE("Z/4 over Z/2 with mod-4 coefficients") {
    GaloisLattice x = z4_sign_lattice();
    CoefficientModule m = fin(x, 4);
    std::vector<int> sub{0, 2};
    CoefficientModule m_sub = restrict_module(x.group(), sub, m);
    for (int n = 1; n <= 2; ++n) {
      auto h = cohomology_group(x.group(), m, n, true);
      for (const Cochain& gen : h.generators) {
        Cochain res = restrict_cochain(x.group(), sub, m, gen);
        CHECK(is_cocycle(m_sub.group, m_sub, res));
        Cochain back = corestrict_cochain(x.group(), sub, m, res);
        CHECK(is_cocycle(x.group(), m, back));
        CHECK(classes_equal(x.group(), m, back, cochain_scale(m, Int(2), gen)));
      }
    }
  }
  SUBCASE("cor of res is [G:H] = 2 = 0 on H^1(Z/2, Z sign)") {
    GaloisLattice sgn = sign_lattice();
    CoefficientModule m = lat(sgn);
    auto h1 = cohomology_group(sgn.group(), m, 1, true);
    REQUIRE(h1.generators.size() == 1);
    std::vector<int> triv{0};
    Cochain res = restrict_cochain(sgn.group(), triv, m, h1.generators[0]);
    Cochain back = corestrict_cochain(sgn.group(), triv, m, res);
    // [G:1] = 2 kills the 2-torsion class.
    CHECK(is_coboundary(sgn.group(), m, back));
  }
  SUBCASE("S3 over a non-normal order-2 subgroup, lattice coefficients") {
    GaloisLattice x = preset("a2_weyl");
    CoefficientModule m = lat(x);
    int transposition = 0;
    for (std::size_t g = 0; g < 6; ++g)
      if (x.group().element_order(static_cast<int>(g)) == 2) {
        transposition = static_cast<int>(g);
        break;
      }
    std::vector<int> sub{x.group().identity(), transposition};
    CoefficientModule m_sub = restrict_module(x.group(), sub, m);
    for (int n = 1; n <= 2; ++n) {
      auto h = cohomology_group(x.group(), m, n, true);
      for (const Cochain& gen : h.generators) {
        Cochain res = restrict_cochain(x.group(), sub, m, gen);
        CHECK(is_cocycle(m_sub.group, m_sub, res));
        Cochain back = corestrict_cochain(x.group(), sub, m, res);
        CHECK(is_cocycle(x.group(), m, back));
        CHECK(classes_equal(x.group(), m, back, cochain_scale(m, Int(3), gen)));
      }
    }
  }
  SUBCASE("S3 over A3 with mod-2 coefficients") {
    GaloisLattice x = preset("a2_weyl");
    CoefficientModule m = fin(x, 2);
    std::vector<int> a3;
    for (std::size_t g = 0; g < 6; ++g)
      if (x.group().element_order(static_cast<int>(g)) != 2)
        a3.push_back(static_cast<int>(g));
    CoefficientModule m_sub = restrict_module(x.group(), a3, m);
    auto h1 = cohomology_group(x.group(), m, 1, true);
    for (const Cochain& gen : h1.generators) {
      Cochain res = restrict_cochain(x.group(), a3, m, gen);
      CHECK(is_cocycle(m_sub.group, m_sub, res));
      Cochain back = corestrict_cochain(x.group(), a3, m, res);
      CHECK(is_cocycle(x.group(), m, back));
      CHECK(classes_equal(x.group(), m, back, cochain_scale(m, Int(2), gen)));
    }
  }
}

TEST_CASE("inflation-restriction is exact in low degree (enumerated)") {
  // Gamma = Z/4, N = Z/2, M = Z/4 with the generator acting by -1.
  GaloisLattice x = z4_sign_lattice();
  CoefficientModule m = fin(x, 4);
  std::vector<int> sub{0, 2};

  EnumeratedModule m_n = invariant_submodule_over_quotient(x.group(), m, sub);
  CHECK(m_n.elements.size() == 4);  // N acts trivially here
  EnumeratedCohomology h1_q = enumerate_cohomology(m_n, 1);
  CHECK(h1_q.group == FinGenAbGroup(0, {Int(2)}));

  EnumeratedModule full = enumerate_full_module(x.group(), m);
  EnumeratedCohomology h1_g = enumerate_cohomology(full, 1);
  CHECK(h1_g.group == FinGenAbGroup(0, {Int(2)}));

  CoefficientModule m_sub = restrict_module(x.group(), sub, m);

  // Inflation is injective: nonzero classes over the quotient inflate to
  // nonzero classes over Gamma.
  std::size_t nontrivial_inflations = 0;
  for (const auto& rep : h1_q.class_reps) {
    Cochain over_q{1, std::vector<Int>(rep.size())};
    for (std::size_t i = 0; i < rep.size(); ++i) over_q.values[i] = rep[i];
    Cochain inflated = inflate_cochain(x.group(), sub, m, over_q);
    CHECK(is_cocycle(x.group(), m, inflated));
    bool q_trivial = is_coboundary_enumerated(m_n, 1, rep);
    bool g_trivial = is_coboundary(x.group(), m, inflated);
    CHECK(q_trivial == g_trivial);
    if (!g_trivial) ++nontrivial_inflations;
  }
  CHECK(nontrivial_inflations == 1);

  // Exactness at H^1(Gamma, M): a class restricts to a coboundary on N iff
  // it is an inflation. |im inf| = 2 = |ker res| here.
  std::size_t killed_by_res = 0;
  for (const auto& rep : h1_g.class_reps) {
    Cochain over_g{1, std::vector<Int>(rep.size())};
    for (std::size_t i = 0; i < rep.size(); ++i) over_g.values[i] = rep[i];
    Cochain res = restrict_cochain(x.group(), sub, m, over_g);
    if (is_coboundary(m_sub.group, m_sub, res)) ++killed_by_res;
  }
  CHECK(killed_by_res == 2);  // both classes: res is zero on H^1 here
}
