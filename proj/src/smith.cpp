#include "toral/smith.hpp"

#include <cstdlib>

#include "toral/error.hpp"

namespace toral {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Mirrors of the elementary operations applied to the work matrix. The
// inverse transforms pick up the inverse elementary operation on the
// opposite side, keeping u_inv * u = 1 and v * v_inv = 1 throughout.
struct Tracking {
  IntMatrix* u = nullptr;
  IntMatrix* v = nullptr;
  IntMatrix* u_inv = nullptr;
  IntMatrix* v_inv = nullptr;

  void row_swap(std::size_t i, std::size_t j) {
    if (u) u->swap_rows(i, j);
    if (u_inv) u_inv->swap_cols(i, j);
  }
  void row_add(std::size_t i, std::size_t j, const Int& q) {  // row_i += q*row_j
    if (u) u->add_row_multiple(i, j, q);
    if (u_inv) u_inv->add_col_multiple(j, i, -q);
  }
  void row_negate(std::size_t i) {
    if (u) u->negate_row(i);
    if (u_inv) u_inv->negate_col(i);
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (v) v->swap_cols(i, j);
    if (v_inv) v_inv->swap_rows(i, j);
  }
  void col_add(std::size_t i, std::size_t j, const Int& q) {  // col_i += q*col_j
    if (v) v->add_col_multiple(i, j, q);
    if (v_inv) v_inv->add_row_multiple(j, i, -q);
  }
  void col_negate(std::size_t i) {
    if (v) v->negate_col(i);
    if (v_inv) v_inv->negate_row(i);
  }
};

// Reduces a to Smith form in place with elementary operations, smallest
// pivot first to keep entry growth down.
void snf_in_place(IntMatrix& a, Tracking trk) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the active block becomes the pivot; a unit
    // entry is already optimal.
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows && !(found && abs(a.at(pi, pj)) == 1); ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const Int& e = a.at(i, j);
        if (e == 0) continue;
        if (!found || cmp(abs(e), abs(a.at(pi, pj))) < 0) {
          pi = i;
          pj = j;
          found = true;
          if (abs(e) == 1) break;
        }
      }
    if (!found) break;
    if (pi != t) {
      a.swap_rows(t, pi);
      trk.row_swap(t, pi);
    }
    if (pj != t) {
      a.swap_cols(t, pj);
      trk.col_swap(t, pj);
    }
    if (a.at(t, t) < 0) {
      a.negate_row(t);
      trk.row_negate(t);
    }

    for (;;) {
      // Clear column t.
      bool col_clear = true;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == t || a.at(i, t) == 0) continue;
        Int q = floor_div(a.at(i, t), a.at(t, t));
        a.add_row_multiple(i, t, -q);
        trk.row_add(i, t, -q);
        if (a.at(i, t) != 0) {
          // Remainder is a strictly smaller pivot candidate.
          a.swap_rows(t, i);
          trk.row_swap(t, i);
          col_clear = false;
          break;
        }
      }
      if (!col_clear) continue;
      // Clear row t.
      bool row_clear = true;
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == t || a.at(t, j) == 0) continue;
        Int q = floor_div(a.at(t, j), a.at(t, t));
        a.add_col_multiple(j, t, -q);
        trk.col_add(j, t, -q);
        if (a.at(t, j) != 0) {
          a.swap_cols(t, j);
          trk.col_swap(t, j);
          row_clear = false;
          break;
        }
      }
      if (!row_clear) continue;
      // Divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            a.add_row_multiple(t, i, 1);
            trk.row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }

    if (a.at(t, t) < 0) {
      a.negate_row(t);
      trk.row_negate(t);
    }
    ++t;
  }
}

}  // namespace

bool SnfDecomposition::verify(const IntMatrix& m) const {
  if (!(u * m * v == d)) return false;
  if (!is_unimodular(u) || !is_unimodular(v)) return false;
  std::vector<Int> diag = diagonal_of(d);
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d.at(i, j) != 0) return false;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) return false;
    if (i + 1 < diag.size()) {
      if (diag[i] == 0 && diag[i + 1] != 0) return false;
      if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) return false;
    }
  }
  return true;
}

SnfDecomposition smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  Tracking trk;
  trk.u = &u;
  trk.v = &v;
  snf_in_place(a, trk);
  return SnfDecomposition{std::move(u), std::move(a), std::move(v)};
}

SnfWithInverses smith_normal_form_with_inverses(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  IntMatrix u_inv = u, v_inv = v;
  Tracking trk;
  trk.u = &u;
  trk.v = &v;
  trk.u_inv = &u_inv;
  trk.v_inv = &v_inv;
  snf_in_place(a, trk);
  return SnfWithInverses{std::move(u), std::move(a), std::move(v),
                         std::move(u_inv), std::move(v_inv)};
}

std::vector<Int> diagonal_of(const IntMatrix& d) {
  std::vector<Int> out;
  std::size_t n = std::min(d.rows(), d.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
  return out;
}

FinGenAbGroup cokernel(const IntMatrix& m, std::size_t target_rank) {
  if (m.rows() != target_rank)
    fail(ErrorKind::bad_params, "cokernel: row count must equal target rank");
  IntMatrix a = m;
  snf_in_place(a, Tracking{});
  std::vector<Int> diag = diagonal_of(a);
  std::size_t nonzero = 0;
  for (const Int& d : diag)
    if (d != 0) ++nonzero;
  return FinGenAbGroup::from_diagonal(target_rank - nonzero, diag);
}

IntMatrix kernel_basis(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix v = IntMatrix::identity(m.cols());
  Tracking trk;
  trk.v = &v;
  snf_in_place(a, trk);
  std::vector<Int> diag = diagonal_of(a);
  std::size_t rank = 0;
  for (const Int& d : diag)
    if (d != 0) ++rank;
  return v.columns(rank, m.cols() - rank);
}

IntMatrix row_hermite_basis(const IntMatrix& m) {
  IntMatrix h = m;
  const std::size_t rows = h.rows(), cols = h.cols();
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h.at(i, j) == 0) continue;
        if (best == rows || cmp(abs(h.at(i, j)), abs(h.at(best, j))) < 0) best = i;
      }
      if (best == rows) break;
      h.swap_rows(r, best);
      if (h.at(r, j) < 0) h.negate_row(r);
      bool clear = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h.at(i, j) == 0) continue;
        Int q = floor_div(h.at(i, j), h.at(r, j));
        h.add_row_multiple(i, r, -q);
        if (h.at(i, j) != 0) clear = false;
      }
      if (clear) break;
    }
    if (h.at(r, j) != 0) {
      for (std::size_t i = 0; i < r; ++i) {
        Int q = floor_div(h.at(i, j), h.at(r, j));
        h.add_row_multiple(i, r, -q);
      }
      ++r;
    }
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = h.at(i, j);
  return out;
}

std::optional<IntMatrix> solve_integral(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) fail(ErrorKind::bad_params, "solve_integral shape mismatch");
  SnfDecomposition snf = smith_normal_form(a);
  std::vector<Int> diag = diagonal_of(snf.d);
  IntMatrix c = snf.u * b;
  IntMatrix y(a.cols(), b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const Int& rhs = c.at(i, col);
      if (i < diag.size() && diag[i] != 0) {
        if (rhs % diag[i] != 0) return std::nullopt;
        y.at(i, col) = rhs / diag[i];
      } else if (rhs != 0) {
        return std::nullopt;
      }
    }
  }
  return snf.v * y;
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  Int d = m.determinant();
  return d == 1 || d == -1;
}

}  // namespace toral
