#include "toral/abelian_group.hpp"

#include <sstream>

#include "toral/error.hpp"

namespace toral {

FinGenAbGroup::FinGenAbGroup(std::size_t free_rank, std::vector<Int> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) fail(ErrorKind::bad_params, "invariant factor < 2");
    if (i + 1 < torsion_.size() && torsion_[i + 1] % torsion_[i] != 0)
      fail(ErrorKind::bad_params, "invariant factors must form a divisibility chain");
  }
}

FinGenAbGroup FinGenAbGroup::from_diagonal(std::size_t free_rank,
                                           const std::vector<Int>& diag) {
  std::vector<Int> torsion;
  for (const Int& d : diag) {
    if (d < 0) fail(ErrorKind::internal, "negative diagonal entry in normal form");
    if (d >= 2) torsion.push_back(d);
  }
  return FinGenAbGroup(free_rank, std::move(torsion));
}

Int FinGenAbGroup::torsion_order() const {
  Int n = 1;
  for (const Int& d : torsion_) n *= d;
  return n;
}

Int FinGenAbGroup::order() const {
  if (!is_finite()) fail(ErrorKind::bad_params, "order of an infinite group");
  return torsion_order();
}

Int FinGenAbGroup::count_killed_by(const Int& d) const {
  if (!is_finite()) fail(ErrorKind::bad_params, "count_killed_by on an infinite group");
  Int n = 1;
  for (const Int& f : torsion_) n *= gcd(f, d);
  return n;
}

std::string FinGenAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ == 1) {
    os << "Z";
    first = false;
  } else if (free_rank_ > 1) {
    os << "Z^" << free_rank_;
    first = false;
  }
  for (const Int& d : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

}  // namespace toral
