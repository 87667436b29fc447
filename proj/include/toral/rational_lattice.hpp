#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "toral/int_matrix.hpp"
#include "toral/numeric.hpp"

namespace toral {

// A finitely generated subgroup of Q^n of full rank in its span. The basis is
// stored in a canonical form (scaled row-Hermite with positive pivots), so two
// lattices are equal iff their representations are equal.
class RationalLattice {
 public:
  RationalLattice() : ambient_(0) {}

  static RationalLattice zero(std::size_t ambient);
  static RationalLattice standard(std::size_t ambient);
  // Generators need not be independent; the canonical basis is extracted.
  static RationalLattice from_generators(std::size_t ambient,
                                         const std::vector<std::vector<Rat>>& gens);
  static RationalLattice from_integer_columns(const IntMatrix& cols);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::vector<Rat>>& basis() const { return basis_; }

  bool contains(const std::vector<Rat>& v) const;
  // Coordinates of v in this basis, when v lies in the rational span.
  std::optional<std::vector<Rat>> coordinates(const std::vector<Rat>& v) const;

  // Basis vectors scaled to a common denominator: (matrix, denominator).
  std::pair<IntMatrix, Int> scaled_basis() const;

  bool operator==(const RationalLattice& rhs) const = default;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const RationalLattice& l) {
    return os << l.to_string();
  }

 private:
  std::size_t ambient_;
  std::vector<std::vector<Rat>> basis_;
};

// [outer : inner]; finite value when the ranks agree, infinite when inner has
// strictly smaller rank. Throws NotASublattice when inner is not inside outer.
struct LatticeIndex {
  bool finite;
  Int value;  // meaningful only when finite

  bool operator==(const LatticeIndex& rhs) const = default;
  std::string to_string() const { return finite ? value.get_str() : "infinite"; }
};

LatticeIndex lattice_index(const RationalLattice& inner, const RationalLattice& outer);

// ker(m) cap Z^cols as a lattice: saturated, basis in canonical form.
RationalLattice kernel_lattice(const IntMatrix& m);

// {v in span(L) : pairing(v, l) in Z for all l in L}. The pairing must be
// nondegenerate on the span of L.
RationalLattice dual_lattice(const RationalLattice& l, const IntMatrix& pairing);

}  // namespace toral
