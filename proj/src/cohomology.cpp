#include "toral/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "toral/error.hpp"

namespace toral {

namespace {

constexpr int kMaxComplexDegree = 3;

void require_degree(int n, int max) {
  if (n < 0 || n > max) fail(ErrorKind::bad_params, "cohomological degree out of range");
}

std::vector<int> decode_tuple(std::size_t t, std::size_t order, int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = static_cast<int>(t % order);
    t /= order;
  }
  return out;
}

std::size_t encode_tuple(const std::vector<int>& comps, std::size_t order) {
  std::size_t t = 0;
  for (std::size_t i = comps.size(); i-- > 0;) t = t * order + comps[i];
  return t;
}

// The n+2 terms of the inhomogeneous coboundary applied to a tuple of Gamma^{n+1}:
// (d f)(g_1..g_{n+1}) = g_1 f(g_2..g_{n+1})
//                       + sum_i (-1)^i f(g_1,..,g_i g_{i+1},..,g_{n+1})
//                       + (-1)^{n+1} f(g_1..g_n).
struct CoboundaryTerm {
  std::size_t source_tuple;
  int sign;        // +1 / -1
  int act_by = -1; // group element acting, or -1 for plain sign
};

std::vector<CoboundaryTerm> coboundary_terms(const FiniteGroup& g, int n,
                                             const std::vector<int>& comps) {
  std::vector<CoboundaryTerm> terms;
  terms.reserve(n + 2);
  const std::size_t order = g.order();
  {
    std::vector<int> rest(comps.begin() + 1, comps.end());
    terms.push_back({encode_tuple(rest, order), +1, comps[0]});
  }
  int sign = -1;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> merged;
    merged.reserve(n);
    for (int j = 0; j < i - 1; ++j) merged.push_back(comps[j]);
    merged.push_back(g.mult(comps[i - 1], comps[i]));
    for (int j = i + 1; j <= n; ++j) merged.push_back(comps[j]);
    terms.push_back({encode_tuple(merged, order), sign, -1});
    sign = -sign;
  }
  {
    std::vector<int> head(comps.begin(), comps.begin() + n);
    terms.push_back({encode_tuple(head, order), sign, -1});
  }
  return terms;
}

Int int_pow(const Int& base, std::size_t e) {
  Int out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

IntMatrix column_from(const std::vector<Int>& v) {
  IntMatrix c(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) c.at(i, 0) = v[i];
  return c;
}

// --- subquotient helpers -------------------------------------------------

struct Subquotient {
  FinGenAbGroup group;
  std::vector<std::vector<Int>> generators;  // free generators first
};

std::vector<std::vector<Int>> recover_generators(const IntMatrix& basis,
                                                 const SnfWithInverses& s,
                                                 std::size_t k) {
  std::vector<Int> diag = diagonal_of(s.d);
  std::vector<std::size_t> free_pos, torsion_pos;
  for (std::size_t j = 0; j < k; ++j) {
    Int d = j < diag.size() ? diag[j] : Int(0);
    if (d == 0)
      free_pos.push_back(j);
    else if (d >= 2)
      torsion_pos.push_back(j);
  }
  std::vector<std::vector<Int>> gens;
  auto emit = [&](std::size_t j) {
    std::vector<Int> coords(k);
    for (std::size_t i = 0; i < k; ++i) coords[i] = s.u_inv.at(i, j);
    gens.push_back(basis.apply(coords));
  };
  for (std::size_t j : free_pos) emit(j);
  for (std::size_t j : torsion_pos) emit(j);
  return gens;
}

// ker-with-basis K (ambient x k, saturated) modulo the column span of B.
Subquotient lattice_subquotient(const IntMatrix& k_basis, const IntMatrix& b,
                                bool with_reps) {
  auto y = solve_integral(k_basis, b);
  if (!y) fail(ErrorKind::internal, "coboundary image escapes the cocycle lattice");
  if (!with_reps) return {cokernel(*y, k_basis.cols()), {}};
  SnfWithInverses s = smith_normal_form_with_inverses(*y);
  FinGenAbGroup grp = cokernel(*y, k_basis.cols());
  return {grp, recover_generators(k_basis, s, k_basis.cols())};
}

// {x : a x = 0 mod m} modulo (column span of b + m Z^dim).
Subquotient finite_subquotient(const IntMatrix& a, const IntMatrix& b, const Int& m,
                               bool with_reps) {
  const std::size_t dim = a.cols();
  SnfDecomposition s = smith_normal_form(a);
  std::vector<Int> diag = diagonal_of(s.d);
  // x with a x in m Z^rows form the lattice v * diag(m / gcd(d_i, m)).
  std::vector<Int> scale(dim, Int(1));
  for (std::size_t i = 0; i < dim; ++i) {
    Int d = i < diag.size() ? diag[i] : Int(0);
    scale[i] = m / gcd(d, m);
  }
  IntMatrix p = s.v * IntMatrix::diagonal(scale);
  IntMatrix denom = IntMatrix::hstack(b, IntMatrix::scalar(dim, m));
  auto y = solve_integral(p, denom);
  if (!y) fail(ErrorKind::internal, "denominator escapes the mod-m cocycle lattice");
  if (!with_reps) return {cokernel(*y, dim), {}};
  SnfWithInverses sy = smith_normal_form_with_inverses(*y);
  Subquotient out{cokernel(*y, dim), recover_generators(p, sy, dim)};
  for (auto& gen : out.generators)
    for (Int& v : gen) {
      v %= m;
      if (v < 0) v += m;
    }
  return out;
}

long long_modulus(const Int& m) {
  if (!m.fits_slong_p()) fail(ErrorKind::budget_exceeded, "modulus too large to enumerate");
  return m.get_si();
}

// Incrementally built integer row lattice; add() keeps a Hermite basis.
class IncrementalLattice {
 public:
  explicit IncrementalLattice(std::size_t dim) : dim_(dim) {}

  void add(const std::vector<Int>& v) {
    std::vector<Int> w = reduce(v);
    bool zero = true;
    for (const Int& x : w)
      if (x != 0) {
        zero = false;
        break;
      }
    if (zero) return;
    IntMatrix stacked(rows_.size() + 1, dim_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < dim_; ++j) stacked.at(i, j) = rows_[i][j];
    for (std::size_t j = 0; j < dim_; ++j) stacked.at(rows_.size(), j) = w[j];
    IntMatrix h = row_hermite_basis(stacked);
    rows_.assign(h.rows(), std::vector<Int>(dim_));
    pivots_.assign(h.rows(), 0);
    for (std::size_t i = 0; i < h.rows(); ++i) {
      for (std::size_t j = 0; j < dim_; ++j) rows_[i][j] = h.at(i, j);
      std::size_t p = 0;
      while (p < dim_ && h.at(i, p) == 0) ++p;
      pivots_[i] = p;
    }
  }

  IntMatrix basis_matrix() const {
    IntMatrix out(rows_.size(), dim_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < dim_; ++j) out.at(i, j) = rows_[i][j];
    return out;
  }

 private:
  std::vector<Int> reduce(std::vector<Int> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::size_t p = pivots_[i];
      if (v[p] == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), v[p].get_mpz_t(), rows_[i][p].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = p; j < dim_; ++j) v[j] -= q * rows_[i][j];
    }
    return v;
  }

  std::size_t dim_;
  std::vector<std::vector<Int>> rows_;
  std::vector<std::size_t> pivots_;
};

// Structure of (span of numerator + mZ^dim) / (span of denominator + mZ^dim).
FinGenAbGroup quotient_structure_mod(const std::vector<std::vector<long>>& numerator,
                                     const std::vector<std::vector<long>>& denominator,
                                     long m, std::size_t dim) {
  IncrementalLattice num(dim), den(dim);
  std::vector<Int> row(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::fill(row.begin(), row.end(), Int(0));
    row[i] = m;
    num.add(row);
    den.add(row);
  }
  for (const auto& v : numerator) {
    for (std::size_t i = 0; i < dim; ++i) row[i] = v[i];
    num.add(row);
  }
  for (const auto& v : denominator) {
    for (std::size_t i = 0; i < dim; ++i) row[i] = v[i];
    den.add(row);
  }
  IntMatrix hn = num.basis_matrix().transpose();  // columns = basis
  IntMatrix hd = den.basis_matrix().transpose();
  auto y = solve_integral(hn, hd);
  if (!y) fail(ErrorKind::internal, "denominator lattice not inside numerator lattice");
  return cokernel(*y, hn.cols());
}

}  // namespace

CoefficientModule CoefficientModule::lattice_kind(const GaloisLattice& x) {
  CoefficientModule m;
  m.kind = Kind::lattice;
  m.group = x.group();
  m.action = x.actions();
  m.modulus = 0;
  return m;
}

CoefficientModule CoefficientModule::finite_kind(const GaloisLattice& x,
                                                 const Int& modulus) {
  if (modulus < 2) fail(ErrorKind::bad_params, "finite coefficients need modulus >= 2");
  CoefficientModule m;
  m.kind = Kind::finite;
  m.group = x.group();
  m.action = x.actions();
  m.modulus = modulus;
  return m;
}

CoefficientModule CoefficientModule::finite_kind_mod(FiniteGroup group,
                                                     std::vector<IntMatrix> action,
                                                     const Int& modulus) {
  if (modulus < 2) fail(ErrorKind::bad_params, "finite coefficients need modulus >= 2");
  if (action.size() != group.order())
    fail(ErrorKind::validation, "need one matrix per group element");
  std::size_t rank = action.empty() ? 0 : action[0].rows();
  auto congruent = [&](const IntMatrix& a, const IntMatrix& b) {
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j)
        if ((a.at(i, j) - b.at(i, j)) % modulus != 0) return false;
    return true;
  };
  for (const IntMatrix& a : action)
    if (a.rows() != rank || a.cols() != rank)
      fail(ErrorKind::validation, "action matrices must be square of equal size");
  if (!congruent(action[group.identity()], IntMatrix::identity(rank)))
    fail(ErrorKind::validation, "identity must act as the identity mod m");
  for (std::size_t a = 0; a < action.size(); ++a)
    for (std::size_t b = 0; b < action.size(); ++b)
      if (!congruent(action[a] * action[b],
                     action[group.mult(static_cast<int>(a), static_cast<int>(b))]))
        fail(ErrorKind::validation, "matrices are not a homomorphism mod m");
  CoefficientModule m;
  m.kind = Kind::finite;
  m.group = std::move(group);
  m.action = std::move(action);
  m.modulus = modulus;
  return m;
}

std::size_t tuple_count(std::size_t order, int n) {
  std::size_t t = 1;
  for (int i = 0; i < n; ++i) t *= order;
  return t;
}

std::size_t cochain_dim(const FiniteGroup& g, const CoefficientModule& m, int n) {
  return m.rank() * tuple_count(g.order(), n);
}

IntMatrix coboundary_matrix(const FiniteGroup& g, const CoefficientModule& m, int n) {
  require_degree(n, kMaxComplexDegree);
  const std::size_t r = m.rank();
  const std::size_t order = g.order();
  const std::size_t rows_tuples = tuple_count(order, n + 1);
  IntMatrix d(r * rows_tuples, r * tuple_count(order, n));
  for (std::size_t t = 0; t < rows_tuples; ++t) {
    std::vector<int> comps = decode_tuple(t, order, n + 1);
    for (const CoboundaryTerm& term : coboundary_terms(g, n, comps)) {
      if (term.act_by >= 0) {
        const IntMatrix& a = m.act(term.act_by);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j)
            d.at(t * r + i, term.source_tuple * r + j) += a.at(i, j);
      } else {
        for (std::size_t i = 0; i < r; ++i)
          d.at(t * r + i, term.source_tuple * r + i) += term.sign;
      }
    }
  }
  return d;
}

std::vector<IntMatrix> cochain_complex(const FiniteGroup& g, const CoefficientModule& m,
                                       int n_max) {
  require_degree(n_max, kMaxComplexDegree);
  std::vector<IntMatrix> out;
  out.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) out.push_back(coboundary_matrix(g, m, n));
  return out;
}

std::vector<Int> apply_coboundary(const FiniteGroup& g, const CoefficientModule& m, int n,
                                  const std::vector<Int>& values) {
  if (values.size() != cochain_dim(g, m, n))
    fail(ErrorKind::bad_params, "cochain has the wrong dimension");
  const std::size_t r = m.rank();
  const std::size_t order = g.order();
  const std::size_t rows_tuples = tuple_count(order, n + 1);
  std::vector<Int> out(r * rows_tuples);
  for (std::size_t t = 0; t < rows_tuples; ++t) {
    std::vector<int> comps = decode_tuple(t, order, n + 1);
    for (const CoboundaryTerm& term : coboundary_terms(g, n, comps)) {
      if (term.act_by >= 0) {
        const IntMatrix& a = m.act(term.act_by);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j)
            out[t * r + i] += a.at(i, j) * values[term.source_tuple * r + j];
      } else {
        for (std::size_t i = 0; i < r; ++i)
          out[t * r + i] += term.sign * values[term.source_tuple * r + i];
      }
    }
  }
  return out;
}

CohomologyClassGroup cohomology_group(const FiniteGroup& g, const CoefficientModule& m,
                                      int n, bool with_representatives) {
  require_degree(n, 2);
  CohomologyClassGroup out;
  out.degree = n;
  auto pack = [&](Subquotient sq) {
    out.group = std::move(sq.group);
    for (auto& gen : sq.generators) out.generators.push_back(Cochain{n, std::move(gen)});
  };

  if (!m.is_finite()) {
    if (n == 0) {
      IntMatrix k = kernel_basis(coboundary_matrix(g, m, 0));
      out.group = FinGenAbGroup::free_of_rank(k.cols());
      if (with_representatives)
        for (std::size_t j = 0; j < k.cols(); ++j) {
          std::vector<Int> v(k.rows());
          for (std::size_t i = 0; i < k.rows(); ++i) v[i] = k.at(i, j);
          out.generators.push_back(Cochain{0, std::move(v)});
        }
      return out;
    }
    if (n == 1) {
      IntMatrix d1 = coboundary_matrix(g, m, 1);
      IntMatrix d0 = coboundary_matrix(g, m, 0);
      pack(lattice_subquotient(kernel_basis(d1), d0, with_representatives));
      if (out.group.free_rank() != 0)
        fail(ErrorKind::internal, "H^1 with lattice coefficients must be finite");
      return out;
    }
    // Degree 2 with lattice coefficients: the quotient of Z^{C^2} by im(d^1)
    // splits as a free part plus torsion, and rational exactness of the bar
    // complex for a finite group identifies ker(d^2) with the saturation of
    // im(d^1); H^2 is exactly the torsion part. This avoids eliminating the
    // very tall d^2.
    IntMatrix d1 = coboundary_matrix(g, m, 1);
    std::size_t dim2 = cochain_dim(g, m, 2);
    if (!with_representatives) {
      out.group = cokernel(d1, dim2).torsion_part();
      return out;
    }
    SnfWithInverses s = smith_normal_form_with_inverses(d1);
    std::vector<Int> diag = diagonal_of(s.d);
    std::vector<Int> torsion;
    for (std::size_t j = 0; j < diag.size(); ++j) {
      if (diag[j] < 2) continue;
      torsion.push_back(diag[j]);
      std::vector<Int> gen(dim2);
      for (std::size_t i = 0; i < dim2; ++i) gen[i] = s.u_inv.at(i, j);
      // Torsion classes of coker(d^1) are honest cocycles; check it.
      for (const Int& v : apply_coboundary(g, m, 2, gen))
        if (v != 0) fail(ErrorKind::internal, "recovered H^2 generator is not a cocycle");
      out.generators.push_back(Cochain{2, std::move(gen)});
    }
    out.group = FinGenAbGroup(0, std::move(torsion));
    return out;
  }

  IntMatrix a = coboundary_matrix(g, m, n);
  IntMatrix b = n == 0 ? IntMatrix(cochain_dim(g, m, 0), 0)
                       : coboundary_matrix(g, m, n - 1);
  pack(finite_subquotient(a, b, m.modulus, with_representatives));
  return out;
}

FinGenAbGroup cyclic_oracle(const FiniteGroup& g, int generator,
                            const CoefficientModule& m, int n) {
  if (n < 0) fail(ErrorKind::bad_params, "negative degree");
  if (g.element_order(generator) != static_cast<int>(g.order()))
    fail(ErrorKind::not_cyclic, "supplied element does not generate the group");
  const std::size_t r = m.rank();
  IntMatrix id = IntMatrix::identity(r);
  const IntMatrix& s = m.act(generator);
  IntMatrix norm(r, r);
  {
    IntMatrix pw = id;
    for (std::size_t i = 0; i < g.order(); ++i) {
      norm = norm + pw;
      pw = pw * s;
    }
  }
  IntMatrix sigma_minus_1 = s - id;

  if (!m.is_finite()) {
    if (n == 0) return FinGenAbGroup::free_of_rank(kernel_basis(sigma_minus_1).cols());
    if (n % 2 == 1)
      return lattice_subquotient(kernel_basis(norm), sigma_minus_1, false).group;
    return lattice_subquotient(kernel_basis(sigma_minus_1), norm, false).group;
  }
  IntMatrix empty(r, 0);
  if (n == 0) return finite_subquotient(sigma_minus_1, empty, m.modulus, false).group;
  if (n % 2 == 1) return finite_subquotient(norm, sigma_minus_1, m.modulus, false).group;
  return finite_subquotient(sigma_minus_1, norm, m.modulus, false).group;
}

Int enumeration_budget() {
  if (const char* env = std::getenv("TORAL_ENUM_BUDGET")) {
    try {
      Int v = int_from_string(env);
      if (v > 0) return v;
    } catch (const Error&) {
      // fall through to the default
    }
  }
  return Int(10000000);
}

EnumeratedModule enumerate_full_module(const FiniteGroup& g, const CoefficientModule& m) {
  if (!m.is_finite()) fail(ErrorKind::bad_params, "enumeration needs finite coefficients");
  long mod = long_modulus(m.modulus);
  const std::size_t r = m.rank();
  Int count = int_pow(m.modulus, r);
  if (count > enumeration_budget() || !count.fits_ulong_p())
    fail(ErrorKind::budget_exceeded, "module too large to enumerate");
  EnumeratedModule out;
  out.group = g;
  out.modulus = mod;
  out.ambient_rank = r;
  out.action.resize(g.order(), std::vector<long>(r * r));
  for (std::size_t e = 0; e < g.order(); ++e)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Int v = m.act(static_cast<int>(e)).at(i, j) % mod;
        if (v < 0) v += mod;
        out.action[e][i * r + j] = v.get_si();
      }
  std::size_t total = count.get_ui();
  out.elements.reserve(total);
  std::vector<long> x(r, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    out.elements.push_back(x);
    for (std::size_t i = 0; i < r; ++i) {
      if (++x[i] < mod) break;
      x[i] = 0;
    }
  }
  return out;
}

EnumeratedModule invariant_submodule_over_quotient(const FiniteGroup& g,
                                                   const CoefficientModule& m,
                                                   const std::vector<int>& normal_sub) {
  if (!g.is_normal_subgroup(normal_sub))
    fail(ErrorKind::not_normal, "invariants need a normal subgroup");
  EnumeratedModule full = enumerate_full_module(g, m);
  GroupQuotient q = g.quotient_by(normal_sub);
  const std::size_t r = full.ambient_rank;
  long mod = full.modulus;

  auto act = [&](const std::vector<long>& mat, const std::vector<long>& x) {
    std::vector<long> y(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      long acc = 0;
      for (std::size_t j = 0; j < r; ++j) acc += mat[i * r + j] * x[j];
      y[i] = ((acc % mod) + mod) % mod;
    }
    return y;
  };

  EnumeratedModule out;
  out.group = q.group;
  out.modulus = mod;
  out.ambient_rank = r;
  out.action.resize(q.group.order());
  for (std::size_t e = 0; e < q.group.order(); ++e) out.action[e] = full.action[q.section[e]];
  for (const auto& x : full.elements) {
    bool fixed = true;
    for (int h : normal_sub) {
      if (act(full.action[h], x) != x) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.elements.push_back(x);
  }
  return out;
}

EnumeratedCohomology enumerate_cohomology(const EnumeratedModule& m, int n) {
  require_degree(n, 2);
  const std::size_t order = m.group.order();
  const std::size_t r = m.ambient_rank;
  const long mod = m.modulus;
  const std::size_t tuples = tuple_count(order, n);
  const std::size_t dim = tuples * r;

  Int candidates = int_pow(Int(static_cast<unsigned long>(m.size())), tuples);
  if (candidates > enumeration_budget())
    fail(ErrorKind::budget_exceeded, "cochain space exceeds the enumeration budget");

  auto act = [&](int g_elt, const long* x, long* y) {
    const std::vector<long>& mat = m.action[g_elt];
    for (std::size_t i = 0; i < r; ++i) {
      long acc = 0;
      for (std::size_t j = 0; j < r; ++j) acc += mat[i * r + j] * x[j];
      y[i] = ((acc % mod) + mod) % mod;
    }
  };

  // Identity data for all (n+1)-tuples, reused across candidates.
  const std::size_t check_tuples = tuple_count(order, n + 1);
  std::vector<std::vector<CoboundaryTerm>> identities;
  identities.reserve(check_tuples);
  for (std::size_t t = 0; t < check_tuples; ++t)
    identities.push_back(coboundary_terms(m.group, n, decode_tuple(t, order, n + 1)));

  auto is_cocycle_flat = [&](const std::vector<long>& f) {
    std::vector<long> acc(r), tmp(r);
    for (const auto& terms : identities) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < terms.size(); ++k) {
        const CoboundaryTerm& term = terms[k];
        int sign = term.sign;
        if (m.wrong_sign_fault && k + 1 == terms.size()) sign = -sign;
        const long* src = f.data() + term.source_tuple * r;
        if (term.act_by >= 0) {
          act(term.act_by, src, tmp.data());
          for (std::size_t i = 0; i < r; ++i) acc[i] += tmp[i];
        } else {
          for (std::size_t i = 0; i < r; ++i) acc[i] += sign * src[i];
        }
      }
      for (std::size_t i = 0; i < r; ++i)
        if (((acc[i] % mod) + mod) % mod != 0) return false;
    }
    return true;
  };

  // Enumerate all functions Gamma^n -> elements.
  std::vector<std::vector<long>> cocycles;
  std::vector<std::size_t> pos(tuples, 0);
  std::vector<long> flat(dim, 0);
  auto fill_flat = [&]() {
    for (std::size_t t = 0; t < tuples; ++t)
      std::copy(m.elements[pos[t]].begin(), m.elements[pos[t]].end(),
                flat.begin() + t * r);
  };
  for (;;) {
    fill_flat();
    if (is_cocycle_flat(flat)) cocycles.push_back(flat);
    std::size_t i = 0;
    for (; i < tuples; ++i) {
      if (++pos[i] < m.size()) break;
      pos[i] = 0;
    }
    if (i == tuples) break;
  }

  // Coboundaries: images of all (n-1)-cochains.
  std::set<std::vector<long>> coboundaries;
  if (n == 0) {
    coboundaries.insert(std::vector<long>(dim, 0));
  } else {
    const std::size_t prev_tuples = tuple_count(order, n - 1);
    std::vector<std::vector<CoboundaryTerm>> prev_terms;
    prev_terms.reserve(tuples);
    for (std::size_t t = 0; t < tuples; ++t)
      prev_terms.push_back(coboundary_terms(m.group, n - 1, decode_tuple(t, order, n)));
    std::vector<std::size_t> ppos(prev_tuples, 0);
    std::vector<long> pflat(prev_tuples * r, 0), image(dim, 0), tmp(r);
    for (;;) {
      for (std::size_t t = 0; t < prev_tuples; ++t)
        std::copy(m.elements[ppos[t]].begin(), m.elements[ppos[t]].end(),
                  pflat.begin() + t * r);
      for (std::size_t t = 0; t < tuples; ++t) {
        long* out_block = image.data() + t * r;
        std::fill(out_block, out_block + r, 0);
        for (const CoboundaryTerm& term : prev_terms[t]) {
          const long* src = pflat.data() + term.source_tuple * r;
          if (term.act_by >= 0) {
            act(term.act_by, src, tmp.data());
            for (std::size_t i = 0; i < r; ++i) out_block[i] += tmp[i];
          } else {
            for (std::size_t i = 0; i < r; ++i) out_block[i] += term.sign * src[i];
          }
        }
        for (std::size_t i = 0; i < r; ++i) out_block[i] = ((out_block[i] % mod) + mod) % mod;
      }
      coboundaries.insert(image);
      std::size_t i = 0;
      for (; i < prev_tuples; ++i) {
        if (++ppos[i] < m.size()) break;
        ppos[i] = 0;
      }
      if (i == prev_tuples) break;
    }
  }

  // Group the cocycles into classes modulo coboundaries.
  EnumeratedCohomology out;
  out.cocycle_count = cocycles.size();
  out.coboundary_count = coboundaries.size();
  std::set<std::vector<long>> claimed;
  std::vector<long> shifted(dim);
  for (const auto& z : cocycles) {
    if (claimed.count(z)) continue;
    out.class_reps.push_back(z);
    for (const auto& b : coboundaries) {
      for (std::size_t i = 0; i < dim; ++i) shifted[i] = (z[i] + b[i]) % mod;
      claimed.insert(shifted);
    }
  }
  std::vector<std::vector<long>> den(coboundaries.begin(), coboundaries.end());
  out.group = quotient_structure_mod(cocycles, den, mod, dim);
  if (out.group.order() != Int(static_cast<unsigned long>(out.class_reps.size())))
    fail(ErrorKind::internal, "class count disagrees with the quotient structure");
  return out;
}

bool is_coboundary_enumerated(const EnumeratedModule& m, int n,
                              const std::vector<long>& values) {
  require_degree(n, 2);
  if (n == 0) {
    for (long v : values)
      if (((v % m.modulus) + m.modulus) % m.modulus != 0) return false;
    return true;
  }
  const std::size_t order = m.group.order();
  const std::size_t r = m.ambient_rank;
  const long mod = m.modulus;
  const std::size_t tuples = tuple_count(order, n);
  const std::size_t prev_tuples = tuple_count(order, n - 1);
  if (values.size() != tuples * r)
    fail(ErrorKind::bad_params, "cochain has the wrong dimension");
  Int candidates = int_pow(Int(static_cast<unsigned long>(m.size())), prev_tuples);
  if (candidates > enumeration_budget())
    fail(ErrorKind::budget_exceeded, "cochain space exceeds the enumeration budget");

  auto act = [&](int g_elt, const long* x, long* y) {
    const std::vector<long>& mat = m.action[g_elt];
    for (std::size_t i = 0; i < r; ++i) {
      long acc = 0;
      for (std::size_t j = 0; j < r; ++j) acc += mat[i * r + j] * x[j];
      y[i] = ((acc % mod) + mod) % mod;
    }
  };
  std::vector<std::vector<CoboundaryTerm>> terms;
  terms.reserve(tuples);
  for (std::size_t t = 0; t < tuples; ++t)
    terms.push_back(coboundary_terms(m.group, n - 1, decode_tuple(t, order, n)));

  std::vector<std::size_t> pos(prev_tuples, 0);
  std::vector<long> pflat(prev_tuples * r, 0), tmp(r);
  for (;;) {
    for (std::size_t t = 0; t < prev_tuples; ++t)
      std::copy(m.elements[pos[t]].begin(), m.elements[pos[t]].end(),
                pflat.begin() + t * r);
    bool match = true;
    for (std::size_t t = 0; t < tuples && match; ++t) {
      for (std::size_t i = 0; i < r; ++i) {
        long acc = 0;
        for (const CoboundaryTerm& term : terms[t]) {
          const long* src = pflat.data() + term.source_tuple * r;
          if (term.act_by >= 0) {
            act(term.act_by, src, tmp.data());
            acc += tmp[i];
          } else {
            acc += term.sign * src[i];
          }
        }
        long want = ((values[t * r + i] % mod) + mod) % mod;
        if (((acc % mod) + mod) % mod != want) {
          match = false;
          break;
        }
      }
    }
    if (match) return true;
    std::size_t i = 0;
    for (; i < prev_tuples; ++i) {
      if (++pos[i] < m.size()) break;
      pos[i] = 0;
    }
    if (i == prev_tuples) break;
  }
  return false;
}

FinGenAbGroup brute_force_cohomology(const FiniteGroup& g, const CoefficientModule& m,
                                     int n) {
  if (!m.is_finite())
    fail(ErrorKind::bad_params, "brute-force oracle needs finite coefficients");
  return enumerate_cohomology(enumerate_full_module(g, m), n).group;
}

bool is_cocycle(const FiniteGroup& g, const CoefficientModule& m, const Cochain& c) {
  std::vector<Int> image = apply_coboundary(g, m, c.degree, c.values);
  for (const Int& v : image) {
    if (m.is_finite()) {
      if (v % m.modulus != 0) return false;
    } else if (v != 0) {
      return false;
    }
  }
  return true;
}

bool is_coboundary(const FiniteGroup& g, const CoefficientModule& m, const Cochain& c) {
  if (c.values.size() != cochain_dim(g, m, c.degree))
    fail(ErrorKind::bad_params, "cochain has the wrong dimension");
  if (c.degree == 0) {
    for (const Int& v : c.values) {
      if (m.is_finite()) {
        if (v % m.modulus != 0) return false;
      } else if (v != 0) {
        return false;
      }
    }
    return true;
  }
  IntMatrix d_prev = coboundary_matrix(g, m, c.degree - 1);
  IntMatrix target = column_from(c.values);
  if (m.is_finite())
    d_prev = IntMatrix::hstack(d_prev, IntMatrix::scalar(d_prev.rows(), m.modulus));
  return solve_integral(d_prev, target).has_value();
}

bool classes_equal(const FiniteGroup& g, const CoefficientModule& m, const Cochain& a,
                   const Cochain& b) {
  if (a.degree != b.degree) return false;
  Cochain diff = cochain_add(m, a, cochain_scale(m, Int(-1), b));
  return is_coboundary(g, m, diff);
}

Cochain cochain_add(const CoefficientModule& m, const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree || a.values.size() != b.values.size())
    fail(ErrorKind::bad_params, "cochain sum shape mismatch");
  Cochain out{a.degree, std::vector<Int>(a.values.size())};
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    out.values[i] = a.values[i] + b.values[i];
    if (m.is_finite()) {
      out.values[i] %= m.modulus;
      if (out.values[i] < 0) out.values[i] += m.modulus;
    }
  }
  return out;
}

Cochain cochain_scale(const CoefficientModule& m, const Int& k, const Cochain& a) {
  Cochain out{a.degree, std::vector<Int>(a.values.size())};
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    out.values[i] = k * a.values[i];
    if (m.is_finite()) {
      out.values[i] %= m.modulus;
      if (out.values[i] < 0) out.values[i] += m.modulus;
    }
  }
  return out;
}

CoefficientModule restrict_module(const FiniteGroup& g, const std::vector<int>& sub,
                                  const CoefficientModule& m) {
  std::vector<IntMatrix> action;
  action.reserve(sub.size());
  for (int e : sub) action.push_back(m.act(e));
  FiniteGroup sub_group = g.subgroup_group(sub);
  if (m.is_finite())
    return CoefficientModule::finite_kind_mod(std::move(sub_group), std::move(action),
                                              m.modulus);
  return CoefficientModule::lattice_kind(GaloisLattice(std::move(sub_group), std::move(action)));
}

Cochain restrict_cochain(const FiniteGroup& g, const std::vector<int>& sub,
                         const CoefficientModule& m, const Cochain& c) {
  require_degree(c.degree, 2);
  if (!g.is_subgroup(sub)) fail(ErrorKind::not_a_subgroup, "restriction needs a subgroup");
  const std::size_t r = m.rank();
  const int n = c.degree;
  const std::size_t sub_tuples = tuple_count(sub.size(), n);
  Cochain out{n, std::vector<Int>(sub_tuples * r)};
  for (std::size_t t = 0; t < sub_tuples; ++t) {
    std::vector<int> comps = decode_tuple(t, sub.size(), n);
    std::vector<int> big(n);
    for (int i = 0; i < n; ++i) big[i] = sub[comps[i]];
    std::size_t src = encode_tuple(big, g.order());
    for (std::size_t i = 0; i < r; ++i) out.values[t * r + i] = c.values[src * r + i];
  }
  return out;
}

Cochain corestrict_cochain(const FiniteGroup& g, const std::vector<int>& sub,
                           const CoefficientModule& m, const Cochain& c_over_sub) {
  require_degree(c_over_sub.degree, 2);
  if (!g.is_subgroup(sub))
    fail(ErrorKind::not_a_subgroup, "corestriction needs a subgroup");
  const std::size_t r = m.rank();
  const int n = c_over_sub.degree;
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < sub.size(); ++i) pos[sub[i]] = static_cast<int>(i);

  std::vector<int> reps = g.left_transversal(sub);
  // H-part of the decomposition G = union of H t^{-1} over the left
  // transversal: pi(x) = x*t for the unique t with x*t in H.
  std::vector<int> pi(g.order(), -1);
  for (std::size_t x = 0; x < g.order(); ++x)
    for (int t : reps) {
      int xt = g.mult(static_cast<int>(x), t);
      if (pos[xt] >= 0) {
        pi[x] = xt;
        break;
      }
    }

  const std::size_t out_tuples = tuple_count(g.order(), n);
  Cochain out{n, std::vector<Int>(out_tuples * r)};
  for (std::size_t t_idx = 0; t_idx < out_tuples; ++t_idx) {
    std::vector<int> comps = decode_tuple(t_idx, g.order(), n);
    for (int t : reps) {
      // Homogeneous evaluation along pi(t^{-1} g_1 ... g_j).
      std::vector<int> h(n + 1);
      int prefix = g.inverse(t);
      h[0] = pi[prefix];
      for (int j = 1; j <= n; ++j) {
        prefix = g.mult(prefix, comps[j - 1]);
        h[j] = pi[prefix];
      }
      std::vector<int> args(n);
      for (int j = 1; j <= n; ++j) args[j - 1] = pos[g.mult(g.inverse(h[j - 1]), h[j])];
      std::size_t src = encode_tuple(args, sub.size());
      // Value is h[0]^{-1}-twisted in the homogeneous picture; h[0] is the
      // identity for this transversal convention, so only t acts.
      int act_elt = g.mult(t, h[0]);
      const IntMatrix& a = m.act(act_elt);
      for (std::size_t i = 0; i < r; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < r; ++j)
          acc += a.at(i, j) * c_over_sub.values[src * r + j];
        out.values[t_idx * r + i] += acc;
      }
    }
  }
  if (m.is_finite())
    for (Int& v : out.values) {
      v %= m.modulus;
      if (v < 0) v += m.modulus;
    }
  return out;
}

Cochain inflate_cochain(const FiniteGroup& g, const std::vector<int>& normal_sub,
                        const CoefficientModule& m, const Cochain& c_over_quotient) {
  require_degree(c_over_quotient.degree, 2);
  GroupQuotient q = g.quotient_by(normal_sub);
  const std::size_t r = m.rank();
  const int n = c_over_quotient.degree;
  const std::size_t out_tuples = tuple_count(g.order(), n);
  Cochain out{n, std::vector<Int>(out_tuples * r)};
  for (std::size_t t = 0; t < out_tuples; ++t) {
    std::vector<int> comps = decode_tuple(t, g.order(), n);
    std::vector<int> image(n);
    for (int i = 0; i < n; ++i) image[i] = q.projection[comps[i]];
    std::size_t src = encode_tuple(image, q.group.order());
    for (std::size_t i = 0; i < r; ++i)
      out.values[t * r + i] = c_over_quotient.values[src * r + i];
  }
  return out;
}

Cochain conjugate_cochain(const FiniteGroup& g, const std::vector<int>& normal_sub,
                          const CoefficientModule& m, const Cochain& c_over_sub,
                          int g_elt) {
  require_degree(c_over_sub.degree, 2);
  if (!g.is_normal_subgroup(normal_sub))
    fail(ErrorKind::not_normal, "conjugation action needs a normal subgroup");
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < normal_sub.size(); ++i) pos[normal_sub[i]] = static_cast<int>(i);
  const std::size_t r = m.rank();
  const int n = c_over_sub.degree;
  const std::size_t out_tuples = tuple_count(normal_sub.size(), n);
  const IntMatrix& a = m.act(g_elt);
  int g_inv = g.inverse(g_elt);
  Cochain out{n, std::vector<Int>(out_tuples * r)};
  for (std::size_t t = 0; t < out_tuples; ++t) {
    std::vector<int> comps = decode_tuple(t, normal_sub.size(), n);
    std::vector<int> conj(n);
    for (int i = 0; i < n; ++i)
      conj[i] = pos[g.mult(g.mult(g_inv, normal_sub[comps[i]]), g_elt)];
    std::size_t src = encode_tuple(conj, normal_sub.size());
    for (std::size_t i = 0; i < r; ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < r; ++j)
        acc += a.at(i, j) * c_over_sub.values[src * r + j];
      out.values[t * r + i] = acc;
    }
  }
  if (m.is_finite())
    for (Int& v : out.values) {
      v %= m.modulus;
      if (v < 0) v += m.modulus;
    }
  return out;
}

}  // namespace toral
