#include <random>

#include "doctest.h"
#include "test_helpers.hpp"
#include "toral/error.hpp"
#include "toral/rational_lattice.hpp"

using namespace toral;
using toral::testing::random_matrix;

namespace {

Rat q(long n, long d = 1) { return make_rat(Int(n), Int(d)); }

RationalLattice line(std::vector<Rat> v) {
  std::size_t n = v.size();
  return RationalLattice::from_generators(n, {std::move(v)});
}

// New lattice whose basis vectors are integer combinations (rows of t) of l's.
RationalLattice transformed(const RationalLattice& l, const IntMatrix& t) {
  std::vector<std::vector<Rat>> gens(t.rows(), std::vector<Rat>(l.ambient_dim()));
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j)
      for (std::size_t a = 0; a < l.ambient_dim(); ++a)
        gens[i][a] += Rat(t.at(i, j)) * l.basis()[j][a];
  return RationalLattice::from_generators(l.ambient_dim(), gens);
}

}  // namespace

TEST_CASE("canonical form makes equality decidable") {
  auto a = RationalLattice::from_generators(2, {{q(1), q(1)}, {q(0), q(2)}});
  auto b = RationalLattice::from_generators(2, {{q(1), q(1)}, {q(2), q(0)}, {q(3), q(1)}});
  CHECK(a == b);  // same lattice, different (redundant) generators
  CHECK(RationalLattice::from_generators(1, {{q(1, 2)}, {q(1, 3)}}) ==
        RationalLattice::from_generators(1, {{q(1, 6)}}));
  CHECK(a.contains({q(3), q(1)}));
  CHECK(!a.contains({q(1), q(0)}));
}

TEST_CASE("lattice_index") {
  SUBCASE("pinned") {
    CHECK(lattice_index(line({q(2)}), line({q(1)})) == LatticeIndex{true, Int(2)});
    CHECK(lattice_index(line({q(1), q(1)}), line({q(1, 2), q(1, 2)})) ==
          LatticeIndex{true, Int(2)});
    auto l = line({q(1), q(1)});
    CHECK(lattice_index(l, l) == LatticeIndex{true, Int(1)});
  }
  SUBCASE("infinite when the ranks differ") {
    auto inner = line({q(1), q(0)});
    auto outer = RationalLattice::standard(2);
    CHECK(lattice_index(inner, outer) == LatticeIndex{false, Int(0)});
  }
  SUBCASE("not a sublattice") {
    CHECK_THROWS_AS(lattice_index(line({q(1, 2)}), line({q(1)})), Error);
    CHECK_THROWS_AS(
        lattice_index(line({q(1), q(0)}), line({q(0), q(1)})), Error);
  }
  SUBCASE("multiplicative in chains") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
      IntMatrix base = random_matrix(rng, 3, 3, -5, 5);
      if (base.determinant() == 0) continue;
      auto c = RationalLattice::from_generators(
          3, {{Rat(base.at(0, 0)), Rat(base.at(0, 1)), Rat(base.at(0, 2))},
              {Rat(base.at(1, 0)), Rat(base.at(1, 1)), Rat(base.at(1, 2))},
              {Rat(base.at(2, 0)), Rat(base.at(2, 1)), Rat(base.at(2, 2))}});
      IntMatrix t1 = random_matrix(rng, 3, 3, -3, 3);
      IntMatrix t2 = random_matrix(rng, 3, 3, -3, 3);
      if (t1.determinant() == 0 || t2.determinant() == 0) continue;
      auto b = transformed(c, t1);
      auto a = transformed(b, t2);
      Int ab = lattice_index(a, b).value;
      Int bc = lattice_index(b, c).value;
      Int ac = lattice_index(a, c).value;
      CHECK(ac == ab * bc);
    }
  }
}

TEST_CASE("kernel_lattice") {
  CHECK(kernel_lattice(IntMatrix::from_rows({{-1, 1}, {1, -1}})) ==
        line({q(1), q(1)}));
  CHECK(kernel_lattice(IntMatrix::from_rows({{-2}})) == RationalLattice::zero(1));
  CHECK(kernel_lattice(IntMatrix(2, 2)) == RationalLattice::standard(2));
}

TEST_CASE("dual_lattice") {
  IntMatrix dot1 = IntMatrix::identity(1);
  IntMatrix dot2 = IntMatrix::identity(2);
  SUBCASE("pinned") {
    CHECK(dual_lattice(line({q(1)}), dot1) == line({q(1)}));
    CHECK(dual_lattice(line({q(2)}), dot1) == line({q(1, 2)}));
    CHECK(dual_lattice(line({q(1), q(1)}), dot2) == line({q(1, 2), q(1, 2)}));
  }
  SUBCASE("degenerate pairing rejected") {
    IntMatrix zero(1, 1);
    CHECK_THROWS_AS(dual_lattice(line({q(1)}), zero), Error);
  }
  SUBCASE("double duality on full-rank lattices") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      IntMatrix m = random_matrix(rng, 3, 3, -4, 4);
      if (m.determinant() == 0) continue;
      std::vector<std::vector<Rat>> gens(3, std::vector<Rat>(3));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) gens[i][j] = make_rat(m.at(i, j), Int(1 + (i + j) % 3));
      auto l = RationalLattice::from_generators(3, gens);
      CHECK(dual_lattice(dual_lattice(l, IntMatrix::identity(3)), IntMatrix::identity(3)) == l);
    }
  }
}
