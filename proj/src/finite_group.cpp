#include "toral/finite_group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "toral/error.hpp"

namespace toral {

namespace {
constexpr std::size_t kMaxClosureOrder = 4096;
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<int> mult_table,
                         int identity_index)
    : order_(order), mult_(std::move(mult_table)), identity_(identity_index) {
  if (order_ == 0) fail(ErrorKind::validation, "group order must be positive");
  if (mult_.size() != order_ * order_)
    fail(ErrorKind::validation, "multiplication table has wrong size");
  if (identity_ < 0 || static_cast<std::size_t>(identity_) >= order_)
    fail(ErrorKind::validation, "identity index out of range");
  for (int v : mult_)
    if (v < 0 || static_cast<std::size_t>(v) >= order_)
      fail(ErrorKind::validation, "multiplication table entry out of range");
  for (std::size_t g = 0; g < order_; ++g) {
    if (mult(identity_, static_cast<int>(g)) != static_cast<int>(g) ||
        mult(static_cast<int>(g), identity_) != static_cast<int>(g))
      fail(ErrorKind::validation, "declared identity is not an identity");
  }
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      for (std::size_t c = 0; c < order_; ++c)
        if (mult(mult(static_cast<int>(a), static_cast<int>(b)), static_cast<int>(c)) !=
            mult(static_cast<int>(a), mult(static_cast<int>(b), static_cast<int>(c))))
          fail(ErrorKind::validation, "multiplication table is not associative");
  inverse_.assign(order_, -1);
  for (std::size_t g = 0; g < order_; ++g) {
    for (std::size_t h = 0; h < order_; ++h) {
      if (mult(static_cast<int>(g), static_cast<int>(h)) == identity_ &&
          mult(static_cast<int>(h), static_cast<int>(g)) == identity_) {
        inverse_[g] = static_cast<int>(h);
        break;
      }
    }
    if (inverse_[g] < 0) fail(ErrorKind::validation, "element without inverse");
  }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(1, {0}, 0); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) fail(ErrorKind::bad_params, "cyclic group order must be positive");
  std::vector<int> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<int>((a + b) % n);
  return FiniteGroup(n, std::move(table), 0);
}

FiniteGroup FiniteGroup::from_generator_matrices(const std::vector<IntMatrix>& gens,
                                                 std::vector<IntMatrix>* elements_out) {
  if (gens.empty()) fail(ErrorKind::bad_params, "need at least one generator");
  const std::size_t n = gens[0].rows();
  for (const IntMatrix& g : gens)
    if (g.rows() != n || g.cols() != n)
      fail(ErrorKind::bad_params, "generators must be square of equal size");

  auto key = [](const IntMatrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
  };

  std::vector<IntMatrix> elems{IntMatrix::identity(n)};
  std::map<std::string, int> index{{key(elems[0]), 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const IntMatrix& g : gens) {
      IntMatrix p = elems[head] * g;
      std::string k = key(p);
      if (!index.count(k)) {
        index[k] = static_cast<int>(elems.size());
        elems.push_back(std::move(p));
        if (elems.size() > kMaxClosureOrder)
          fail(ErrorKind::bad_params, "generated group is too large");
      }
    }
  }
  const std::size_t order = elems.size();
  std::vector<int> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      auto it = index.find(key(elems[a] * elems[b]));
      if (it == index.end()) fail(ErrorKind::internal, "closure is not closed");
      table[a * order + b] = it->second;
    }
  if (elements_out) *elements_out = elems;
  return FiniteGroup(order, std::move(table), 0);
}

int FiniteGroup::power(int g, long k) const {
  long ord = static_cast<long>(order_);
  long e = ((k % ord) + ord) % ord;  // group element order divides |G|
  int acc = identity_;
  for (long i = 0; i < e; ++i) acc = mult(acc, g);
  return acc;
}

int FiniteGroup::element_order(int g) const {
  int acc = g;
  int ord = 1;
  while (acc != identity_) {
    acc = mult(acc, g);
    ++ord;
  }
  return ord;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
  std::vector<bool> in(order_, false);
  for (int e : elems) {
    if (e < 0 || static_cast<std::size_t>(e) >= order_) return false;
    in[e] = true;
  }
  if (!in[identity_]) return false;
  for (int a : elems)
    for (int b : elems)
      if (!in[mult(a, b)]) return false;
  for (int a : elems)
    if (!in[inverse(a)]) return false;
  return true;
}

bool FiniteGroup::is_normal_subgroup(const std::vector<int>& elems) const {
  if (!is_subgroup(elems)) return false;
  std::vector<bool> in(order_, false);
  for (int e : elems) in[e] = true;
  for (std::size_t g = 0; g < order_; ++g)
    for (int h : elems)
      if (!in[mult(mult(static_cast<int>(g), h), inverse(static_cast<int>(g)))])
        return false;
  return true;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
  std::vector<bool> in(order_, false);
  std::vector<int> elems{identity_};
  in[identity_] = true;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (int g : gens) {
      int p = mult(elems[head], g);
      if (!in[p]) {
        in[p] = true;
        elems.push_back(p);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::optional<int> FiniteGroup::cyclic_generator() const {
  for (std::size_t g = 0; g < order_; ++g)
    if (element_order(static_cast<int>(g)) == static_cast<int>(order_))
      return static_cast<int>(g);
  return std::nullopt;
}

std::vector<int> FiniteGroup::left_transversal(const std::vector<int>& subgroup) const {
  if (!is_subgroup(subgroup)) fail(ErrorKind::not_a_subgroup, "not a subgroup");
  std::vector<bool> covered(order_, false);
  std::vector<int> reps;
  // Identity's coset first, represented by the identity itself.
  reps.push_back(identity_);
  for (int h : subgroup) covered[mult(identity_, h)] = true;
  for (std::size_t g = 0; g < order_; ++g) {
    if (covered[g]) continue;
    reps.push_back(static_cast<int>(g));
    for (int h : subgroup) covered[mult(static_cast<int>(g), h)] = true;
  }
  return reps;
}

GroupQuotient FiniteGroup::quotient_by(const std::vector<int>& normal_subgroup) const {
  if (!is_normal_subgroup(normal_subgroup))
    fail(ErrorKind::not_normal, "subgroup is not normal");
  std::vector<int> reps = left_transversal(normal_subgroup);
  const std::size_t q = reps.size();
  std::vector<int> coset_of(order_, -1);
  for (std::size_t i = 0; i < q; ++i)
    for (int h : normal_subgroup) coset_of[mult(reps[i], h)] = static_cast<int>(i);
  std::vector<int> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) table[a * q + b] = coset_of[mult(reps[a], reps[b])];
  GroupQuotient out{FiniteGroup(q, std::move(table), coset_of[identity_]), std::move(coset_of),
               std::move(reps)};
  return out;
}

FiniteGroup FiniteGroup::subgroup_group(const std::vector<int>& elems) const {
  if (!is_subgroup(elems)) fail(ErrorKind::not_a_subgroup, "not a subgroup");
  const std::size_t k = elems.size();
  std::vector<int> pos(order_, -1);
  for (std::size_t i = 0; i < k; ++i) pos[elems[i]] = static_cast<int>(i);
  std::vector<int> table(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) table[a * k + b] = pos[mult(elems[a], elems[b])];
  return FiniteGroup(k, std::move(table), pos[identity_]);
}

}  // namespace toral
