#include "toral/rational_lattice.hpp"

#include <sstream>

#include "toral/error.hpp"
#include "toral/smith.hpp"

namespace toral {

namespace {

// Gaussian elimination over Q. Solves a * x = b for a with full column rank
// (columns = basis vectors); returns nullopt when inconsistent.
std::optional<std::vector<Rat>> solve_columns(const std::vector<std::vector<Rat>>& cols,
                                              const std::vector<Rat>& b) {
  const std::size_t n = b.size(), k = cols.size();
  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(k + 1));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) aug[i][j] = cols[j][i];
  for (std::size_t i = 0; i < n; ++i) aug[i][k] = b[i];

  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(k, n);
  for (std::size_t col = 0; col < k && row < n; ++col) {
    std::size_t p = row;
    while (p < n && aug[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(aug[p], aug[row]);
    Rat inv = 1 / aug[row][col];
    for (std::size_t j = col; j <= k; ++j) aug[row][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      Rat f = aug[i][col];
      for (std::size_t j = col; j <= k; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_row[col] = row;
    ++row;
  }
  for (std::size_t col = 0; col < k; ++col)
    if (pivot_row[col] == n) return std::nullopt;  // dependent columns
  for (std::size_t i = row; i < n; ++i)
    if (aug[i][k] != 0) return std::nullopt;
  std::vector<Rat> x(k);
  for (std::size_t col = 0; col < k; ++col) x[col] = aug[pivot_row[col]][k];
  return x;
}

std::optional<std::vector<std::vector<Rat>>> invert_square(
    const std::vector<std::vector<Rat>>& m) {
  const std::size_t k = m.size();
  std::vector<std::vector<Rat>> aug(k, std::vector<Rat>(2 * k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = m[i][j];
    aug[i][k + i] = 1;
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t p = col;
    while (p < k && aug[p][col] == 0) ++p;
    if (p == k) return std::nullopt;
    std::swap(aug[p], aug[col]);
    Rat inv = 1 / aug[col][col];
    for (std::size_t j = 0; j < 2 * k; ++j) aug[col][j] *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      Rat f = aug[i][col];
      for (std::size_t j = 0; j < 2 * k; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  std::vector<std::vector<Rat>> out(k, std::vector<Rat>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out[i][j] = aug[i][k + j];
  return out;
}

}  // namespace

RationalLattice RationalLattice::zero(std::size_t ambient) {
  RationalLattice l;
  l.ambient_ = ambient;
  return l;
}

RationalLattice RationalLattice::standard(std::size_t ambient) {
  std::vector<std::vector<Rat>> gens(ambient, std::vector<Rat>(ambient));
  for (std::size_t i = 0; i < ambient; ++i) gens[i][i] = 1;
  return from_generators(ambient, gens);
}

RationalLattice RationalLattice::from_generators(
    std::size_t ambient, const std::vector<std::vector<Rat>>& gens) {
  Int den = 1;
  for (const auto& g : gens) {
    if (g.size() != ambient)
      fail(ErrorKind::bad_params, "lattice generator of wrong dimension");
    for (const Rat& x : g) den = lcm(den, x.get_den());
  }
  IntMatrix scaled(gens.size(), ambient);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < ambient; ++j) {
      Rat v = gens[i][j] * Rat(den);
      v.canonicalize();
      scaled.at(i, j) = v.get_num();
    }
  IntMatrix h = row_hermite_basis(scaled);
  RationalLattice l;
  l.ambient_ = ambient;
  l.basis_.resize(h.rows(), std::vector<Rat>(ambient));
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < ambient; ++j)
      l.basis_[i][j] = make_rat(h.at(i, j), den);
  return l;
}

RationalLattice RationalLattice::from_integer_columns(const IntMatrix& cols) {
  std::vector<std::vector<Rat>> gens(cols.cols(), std::vector<Rat>(cols.rows()));
  for (std::size_t j = 0; j < cols.cols(); ++j)
    for (std::size_t i = 0; i < cols.rows(); ++i) gens[j][i] = Rat(cols.at(i, j));
  return from_generators(cols.rows(), gens);
}

std::optional<std::vector<Rat>> RationalLattice::coordinates(
    const std::vector<Rat>& v) const {
  if (v.size() != ambient_) fail(ErrorKind::bad_params, "vector dimension mismatch");
  std::vector<std::vector<Rat>> cols(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) cols[i] = basis_[i];
  if (basis_.empty()) {
    for (const Rat& x : v)
      if (x != 0) return std::nullopt;
    return std::vector<Rat>{};
  }
  return solve_columns(cols, v);
}

bool RationalLattice::contains(const std::vector<Rat>& v) const {
  auto coords = coordinates(v);
  if (!coords) return false;
  for (const Rat& c : *coords)
    if (!is_integer(c)) return false;
  return true;
}

std::pair<IntMatrix, Int> RationalLattice::scaled_basis() const {
  Int den = 1;
  for (const auto& row : basis_)
    for (const Rat& x : row) den = lcm(den, x.get_den());
  IntMatrix m(basis_.size(), ambient_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) {
      Rat v = basis_[i][j] * Rat(den);
      v.canonicalize();
      m.at(i, j) = v.get_num();
    }
  return {std::move(m), den};
}

std::string RationalLattice::to_string() const {
  std::ostringstream os;
  os << "lattice rank " << rank() << " in Q^" << ambient_ << " [";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) os << "; ";
    os << "(";
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (j) os << ", ";
      os << rat_to_string(basis_[i][j]);
    }
    os << ")";
  }
  return os.str() + "]";
}

LatticeIndex lattice_index(const RationalLattice& inner, const RationalLattice& outer) {
  if (inner.ambient_dim() != outer.ambient_dim())
    fail(ErrorKind::bad_params, "lattice_index: ambient dimension mismatch");
  const std::size_t ki = inner.rank(), ko = outer.rank();
  IntMatrix coords(ko, ki);
  for (std::size_t j = 0; j < ki; ++j) {
    auto c = outer.coordinates(inner.basis()[j]);
    if (!c) fail(ErrorKind::not_a_sublattice, "inner vector outside the outer span");
    for (std::size_t i = 0; i < ko; ++i) {
      if (!is_integer((*c)[i]))
        fail(ErrorKind::not_a_sublattice, "inner vector has non-integral coordinates");
      coords.at(i, j) = (*c)[i].get_num();
    }
  }
  if (ki < ko) return LatticeIndex{false, 0};
  Int det = coords.determinant();
  if (det < 0) det = -det;
  if (det == 0) fail(ErrorKind::internal, "degenerate coordinate matrix");
  return LatticeIndex{true, det};
}

RationalLattice kernel_lattice(const IntMatrix& m) {
  return RationalLattice::from_integer_columns(kernel_basis(m));
}

RationalLattice dual_lattice(const RationalLattice& l, const IntMatrix& pairing) {
  const std::size_t n = l.ambient_dim(), k = l.rank();
  if (pairing.rows() != n || pairing.cols() != n)
    fail(ErrorKind::bad_params, "pairing matrix must match the ambient dimension");
  if (k == 0) return l;
  // Gram matrix g[i][j] = <b_i, b_j> under the pairing.
  std::vector<std::vector<Rat>> g(k, std::vector<Rat>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rat acc = 0;
      for (std::size_t a = 0; a < n; ++a) {
        if (l.basis()[i][a] == 0) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (pairing.at(a, b) == 0) continue;
          acc += l.basis()[i][a] * Rat(pairing.at(a, b)) * l.basis()[j][b];
        }
      }
      g[i][j] = acc;
    }
  // Dual vectors have coordinates (g^T)^{-1} in the basis of l.
  std::vector<std::vector<Rat>> gt(k, std::vector<Rat>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gt[i][j] = g[j][i];
  auto inv = invert_square(gt);
  if (!inv) fail(ErrorKind::degenerate_pairing, "pairing is singular on the span");
  std::vector<std::vector<Rat>> gens(k, std::vector<Rat>(n));
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t a = 0; a < n; ++a) {
      Rat acc = 0;
      for (std::size_t j = 0; j < k; ++j) acc += (*inv)[j][c] * l.basis()[j][a];
      gens[c][a] = acc;
    }
  return RationalLattice::from_generators(n, gens);
}

}  // namespace toral
