#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toral/int_matrix.hpp"

namespace toral {

struct GroupQuotient;

// Finite group given by its multiplication table. The table is fully checked
// at construction: identity, associativity, inverses.
class FiniteGroup {
 public:
  FiniteGroup(std::size_t order, std::vector<int> mult_table, int identity_index);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  // Closure of a set of integer matrices under multiplication, in a
  // deterministic (BFS) element order starting from the identity. Fills
  // elements_out with the matrix realizing each element when requested.
  static FiniteGroup from_generator_matrices(const std::vector<IntMatrix>& gens,
                                             std::vector<IntMatrix>* elements_out);

  std::size_t order() const { return order_; }
  int identity() const { return identity_; }
  int mult(int a, int b) const { return mult_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int power(int g, long k) const;
  int element_order(int g) const;
  const std::vector<int>& mult_table() const { return mult_; }

  bool is_subgroup(const std::vector<int>& elems) const;
  bool is_normal_subgroup(const std::vector<int>& elems) const;
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;
  std::optional<int> cyclic_generator() const;
  bool is_cyclic() const { return cyclic_generator().has_value(); }

  // Left coset representatives for a subgroup, identity's coset first.
  std::vector<int> left_transversal(const std::vector<int>& subgroup) const;

  GroupQuotient quotient_by(const std::vector<int>& normal_subgroup) const;

  // The subgroup on elements `elems` as a standalone group; element i of the
  // result corresponds to elems[i].
  FiniteGroup subgroup_group(const std::vector<int>& elems) const;

  bool operator==(const FiniteGroup& rhs) const = default;

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<int> mult_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

struct GroupQuotient {
  FiniteGroup group;
  std::vector<int> projection;  // element of the source -> element of quotient
  std::vector<int> section;     // quotient element -> a representative
};

}  // namespace toral
