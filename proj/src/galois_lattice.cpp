#include "toral/galois_lattice.hpp"

#include <sstream>

#include "toral/error.hpp"
#include "toral/smith.hpp"

namespace toral {

namespace {

IntMatrix stack_action_differences_vertically(const GaloisLattice& x) {
  IntMatrix id = IntMatrix::identity(x.rank());
  IntMatrix out(0, x.rank());
  for (std::size_t g = 0; g < x.group().order(); ++g) {
    if (static_cast<int>(g) == x.group().identity()) continue;
    out = IntMatrix::vstack(out, x.action(static_cast<int>(g)) - id);
  }
  return out;
}

IntMatrix stack_action_differences_horizontally(const GaloisLattice& x) {
  IntMatrix id = IntMatrix::identity(x.rank());
  IntMatrix out(x.rank(), 0);
  for (std::size_t g = 0; g < x.group().order(); ++g) {
    if (static_cast<int>(g) == x.group().identity()) continue;
    out = IntMatrix::hstack(out, x.action(static_cast<int>(g)) - id);
  }
  return out;
}

}  // namespace

GaloisLattice::GaloisLattice(FiniteGroup group, std::vector<IntMatrix> action)
    : group_(std::move(group)), action_(std::move(action)) {
  rank_ = action_.empty() ? 0 : action_[0].rows();
  ValidationReport report = validate(group_, rank_, action_);
  if (!report.ok) {
    std::ostringstream os;
    os << "invalid lattice action";
    for (const auto& issue : report.issues) os << "; " << issue.check << ": " << issue.detail;
    fail(ErrorKind::validation, os.str());
  }
}

ValidationReport GaloisLattice::validate(const FiniteGroup& group, std::size_t rank,
                                         const std::vector<IntMatrix>& action) {
  ValidationReport report;
  auto issue = [&](const std::string& check, const std::string& detail) {
    report.ok = false;
    report.issues.push_back({check, detail});
  };

  if (action.size() != group.order()) {
    issue("action_count", "need one matrix per group element");
    return report;
  }
  for (std::size_t g = 0; g < action.size(); ++g) {
    if (action[g].rows() != rank || action[g].cols() != rank) {
      std::ostringstream os;
      os << "matrix " << g << " is " << action[g].rows() << "x" << action[g].cols()
         << ", expected " << rank << "x" << rank;
      issue("shape", os.str());
      return report;
    }
  }
  if (!action[group.identity()].is_identity())
    issue("identity", "identity element must act as the identity matrix");
  for (std::size_t a = 0; a < action.size(); ++a)
    for (std::size_t b = 0; b < action.size(); ++b) {
      int ab = group.mult(static_cast<int>(a), static_cast<int>(b));
      if (!(action[a] * action[b] == action[ab])) {
        std::ostringstream os;
        os << "action(" << a << ") * action(" << b << ") != action(" << ab << ")";
        issue("homomorphism", os.str());
        return report;
      }
    }
  for (std::size_t g = 0; g < action.size(); ++g) {
    Int det = action[g].determinant();
    if (det != 1 && det != -1) {
      std::ostringstream os;
      os << "matrix " << g << " has determinant " << det.get_str();
      issue("unimodular", os.str());
    }
  }
  return report;
}

RationalLattice invariants(const GaloisLattice& x) {
  return kernel_lattice(stack_action_differences_vertically(x));
}

FinGenAbGroup coinvariants(const GaloisLattice& x) {
  return cokernel(stack_action_differences_horizontally(x), x.rank());
}

RationalLattice projection_lattice(const GaloisLattice& x) {
  IntMatrix norm(x.rank(), x.rank());
  for (std::size_t g = 0; g < x.group().order(); ++g)
    norm = norm + x.action(static_cast<int>(g));
  Int order(static_cast<unsigned long>(x.group().order()));
  std::vector<std::vector<Rat>> gens(x.rank(), std::vector<Rat>(x.rank()));
  for (std::size_t j = 0; j < x.rank(); ++j)
    for (std::size_t i = 0; i < x.rank(); ++i)
      gens[j][i] = make_rat(norm.at(i, j), order);
  return RationalLattice::from_generators(x.rank(), gens);
}

GaloisLattice dual_module(const GaloisLattice& x) {
  std::vector<IntMatrix> action;
  action.reserve(x.group().order());
  for (std::size_t g = 0; g < x.group().order(); ++g)
    action.push_back(x.action(x.group().inverse(static_cast<int>(g))).transpose());
  return GaloisLattice(x.group(), std::move(action));
}

GaloisLattice induce(const FiniteGroup& big, const std::vector<int>& sub_elements,
                     const GaloisLattice& m) {
  if (!big.is_subgroup(sub_elements))
    fail(ErrorKind::not_a_subgroup, "induction needs a genuine subgroup");
  if (m.group().order() != sub_elements.size())
    fail(ErrorKind::bad_params, "module group does not match the subgroup");
  if (sub_elements[m.group().identity()] != big.identity())
    fail(ErrorKind::bad_params, "subgroup labeling must send identity to identity");
  for (std::size_t i = 0; i < sub_elements.size(); ++i)
    for (std::size_t j = 0; j < sub_elements.size(); ++j)
      if (sub_elements[m.group().mult(static_cast<int>(i), static_cast<int>(j))] !=
          big.mult(sub_elements[i], sub_elements[j]))
        fail(ErrorKind::bad_params, "subgroup labeling is not multiplicative");

  std::vector<int> pos_in_sub(big.order(), -1);
  for (std::size_t i = 0; i < sub_elements.size(); ++i)
    pos_in_sub[sub_elements[i]] = static_cast<int>(i);

  std::vector<int> reps = big.left_transversal(sub_elements);
  const std::size_t cosets = reps.size();
  std::vector<int> coset_of(big.order(), -1);
  for (std::size_t i = 0; i < cosets; ++i)
    for (int h : sub_elements) coset_of[big.mult(reps[i], h)] = static_cast<int>(i);

  const std::size_t r = m.rank();
  const std::size_t out_rank = cosets * r;
  std::vector<IntMatrix> action;
  action.reserve(big.order());
  for (std::size_t g = 0; g < big.order(); ++g) {
    IntMatrix a(out_rank, out_rank);
    for (std::size_t i = 0; i < cosets; ++i) {
      int gt = big.mult(static_cast<int>(g), reps[i]);
      int target = coset_of[gt];
      int h = big.mult(big.inverse(reps[target]), gt);
      const IntMatrix& block = m.action(pos_in_sub[h]);
      for (std::size_t a_i = 0; a_i < r; ++a_i)
        for (std::size_t a_j = 0; a_j < r; ++a_j)
          a.at(target * r + a_i, i * r + a_j) = block.at(a_i, a_j);
    }
    action.push_back(std::move(a));
  }
  return GaloisLattice(big, std::move(action));
}

LocalArithmeticData make_arithmetic(const FiniteGroup& group, std::vector<int> inertia,
                                    int frobenius) {
  if (frobenius < 0 || static_cast<std::size_t>(frobenius) >= group.order())
    fail(ErrorKind::invalid_arithmetic, "frobenius index out of range");
  if (!group.is_normal_subgroup(inertia))
    fail(ErrorKind::invalid_arithmetic, "inertia must be a normal subgroup");
  GroupQuotient q = group.quotient_by(inertia);
  int image = q.projection[frobenius];
  if (q.group.element_order(image) != static_cast<int>(q.group.order()))
    fail(ErrorKind::invalid_arithmetic,
         "frobenius must generate the (necessarily cyclic) quotient by inertia");
  return LocalArithmeticData{std::move(inertia), frobenius};
}

namespace {

GaloisLattice make_split(long rank) {
  if (rank < 0) fail(ErrorKind::bad_params, "split: rank must be nonnegative");
  return GaloisLattice(FiniteGroup::trivial(),
                       {IntMatrix::identity(static_cast<std::size_t>(rank))});
}

GaloisLattice make_sign() {
  IntMatrix minus(1, 1);
  minus.at(0, 0) = -1;
  return GaloisLattice(FiniteGroup::cyclic(2), {IntMatrix::identity(1), minus});
}

// Character lattice of the norm-one torus of a cyclic degree-n extension:
// Z[C_n]/(norm), rank n-1, with the generator acting by the companion-style
// matrix of the cyclic shift.
GaloisLattice make_norm_one_cyclic(long n) {
  if (n < 2) fail(ErrorKind::bad_params, "norm_one_cyclic: need n >= 2");
  std::size_t rank = static_cast<std::size_t>(n - 1);
  IntMatrix gen(rank, rank);
  for (std::size_t i = 0; i + 1 < rank; ++i) gen.at(i + 1, i) = 1;
  for (std::size_t i = 0; i < rank; ++i) gen.at(i, rank - 1) = -1;
  std::vector<IntMatrix> action{IntMatrix::identity(rank)};
  for (long k = 1; k < n; ++k) action.push_back(action.back() * gen);
  return GaloisLattice(FiniteGroup::cyclic(static_cast<std::size_t>(n)), std::move(action));
}

GaloisLattice make_weil_restriction(long n) {
  if (n < 2) fail(ErrorKind::bad_params, "weil_restriction: need n >= 2");
  std::size_t rank = static_cast<std::size_t>(n);
  IntMatrix shift(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) shift.at((i + 1) % rank, i) = 1;
  std::vector<IntMatrix> action{IntMatrix::identity(rank)};
  for (long k = 1; k < n; ++k) action.push_back(action.back() * shift);
  return GaloisLattice(FiniteGroup::cyclic(rank), std::move(action));
}

GaloisLattice make_from_generators(const std::vector<IntMatrix>& gens) {
  std::vector<IntMatrix> elements;
  FiniteGroup group = FiniteGroup::from_generator_matrices(gens, &elements);
  return GaloisLattice(std::move(group), std::move(elements));
}

GaloisLattice make_a2_weyl() {
  // Order-3 rotation and a reflection generating the A2 Weyl group (S3).
  return make_from_generators(
      {IntMatrix::from_rows({{0, -1}, {1, -1}}), IntMatrix::from_rows({{0, 1}, {1, 0}})});
}

GaloisLattice make_dihedral_plane() {
  return make_from_generators(
      {IntMatrix::from_rows({{0, -1}, {1, 0}}), IntMatrix::from_rows({{1, 0}, {0, -1}})});
}

}  // namespace

GaloisLattice preset(const std::string& name, long param) {
  if (name == "split") return make_split(param < 0 ? 2 : param);
  if (name == "sign") {
    if (param >= 0) fail(ErrorKind::bad_params, "sign takes no parameter");
    return make_sign();
  }
  if (name == "norm_one_cyclic") return make_norm_one_cyclic(param < 0 ? 3 : param);
  if (name == "weil_restriction") return make_weil_restriction(param < 0 ? 2 : param);
  if (name == "a2_weyl") {
    if (param >= 0) fail(ErrorKind::bad_params, "a2_weyl takes no parameter");
    return make_a2_weyl();
  }
  if (name == "dihedral_plane") {
    if (param >= 0) fail(ErrorKind::bad_params, "dihedral_plane takes no parameter");
    return make_dihedral_plane();
  }
  fail(ErrorKind::unknown_preset, "no preset named '" + name + "'");
}

LocalArithmeticData preset_arithmetic(const GaloisLattice& x, const std::string& variant) {
  const FiniteGroup& g = x.group();
  if (variant == "unramified") {
    auto gen = g.cyclic_generator();
    if (!gen)
      fail(ErrorKind::invalid_arithmetic,
           "unramified data needs a cyclic Galois group (Frobenius must generate)");
    return make_arithmetic(g, {g.identity()}, *gen);
  }
  if (variant == "totally_ramified") {
    std::vector<int> all(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) all[i] = static_cast<int>(i);
    return make_arithmetic(g, std::move(all), g.identity());
  }
  fail(ErrorKind::bad_params, "unknown arithmetic variant '" + variant + "'");
}

bool preset_arithmetic_admissible(const GaloisLattice& x, const std::string& variant) {
  try {
    preset_arithmetic(x, variant);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<std::string> catalog_keys() {
  return {"split", "sign", "norm_one_cyclic", "weil_restriction", "a2_weyl",
          "dihedral_plane"};
}

std::vector<std::string> arithmetic_variant_keys() {
  return {"unramified", "totally_ramified"};
}

}  // namespace toral
