#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "toral/numeric.hpp"

namespace toral {

// Finitely generated abelian group in invariant-factor normal form:
// Z^free_rank + Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
// The representation is unique, so equality means isomorphism.
class FinGenAbGroup {
 public:
  FinGenAbGroup() : free_rank_(0) {}
  FinGenAbGroup(std::size_t free_rank, std::vector<Int> torsion);

  static FinGenAbGroup trivial() { return FinGenAbGroup(); }
  static FinGenAbGroup free_of_rank(std::size_t r) { return FinGenAbGroup(r, {}); }
  // Builds the normal form from an arbitrary diagonal (drops 1s, keeps order).
  static FinGenAbGroup from_diagonal(std::size_t free_rank, const std::vector<Int>& diag);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }

  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  // Order of the torsion subgroup.
  Int torsion_order() const;
  // Total order; only valid for finite groups.
  Int order() const;

  FinGenAbGroup torsion_part() const { return FinGenAbGroup(0, torsion_); }
  FinGenAbGroup free_part() const { return FinGenAbGroup(free_rank_, {}); }

  // Number of elements x with d*x = 0; requires a finite group.
  Int count_killed_by(const Int& d) const;

  bool operator==(const FinGenAbGroup& rhs) const = default;

  // "0", "Z^2", "Z/2 + Z/4", "Z + Z/3", ...
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const FinGenAbGroup& g) {
    return os << g.to_string();
  }

 private:
  std::size_t free_rank_;
  std::vector<Int> torsion_;
};

}  // namespace toral
