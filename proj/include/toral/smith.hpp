#pragma once

#include <optional>

#include "toral/abelian_group.hpp"
#include "toral/int_matrix.hpp"

namespace toral {

// U * M * V = D with U, V unimodular and D diagonal, nonnegative,
// d1 | d2 | ... with zeros trailing. U and V are not canonical.
struct SnfDecomposition {
  IntMatrix u, d, v;
  bool verify(const IntMatrix& m) const;
};

SnfDecomposition smith_normal_form(const IntMatrix& m);

// Same, with the inverse transforms tracked alongside (u_inv * u = 1, etc).
struct SnfWithInverses {
  IntMatrix u, d, v, u_inv, v_inv;
};
SnfWithInverses smith_normal_form_with_inverses(const IntMatrix& m);

std::vector<Int> diagonal_of(const IntMatrix& d);

// Z^target_rank / (column span of m), in invariant-factor form.
// m must have target_rank rows.
FinGenAbGroup cokernel(const IntMatrix& m, std::size_t target_rank);

// Columns form a basis of ker(m) cap Z^cols; this lattice is saturated.
IntMatrix kernel_basis(const IntMatrix& m);

// Canonical row-style Hermite normal form of the row span of m: pivots
// positive, entries above each pivot reduced into [0, pivot), zero rows
// dropped. Unique for a given row lattice, so usable as a canonical form.
IntMatrix row_hermite_basis(const IntMatrix& m);

// Integral solution x of a x = b (column-wise), if one exists.
std::optional<IntMatrix> solve_integral(const IntMatrix& a, const IntMatrix& b);

bool is_unimodular(const IntMatrix& m);

}  // namespace toral
