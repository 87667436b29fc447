#pragma once

#include <random>
#include <vector>

#include "toral/int_matrix.hpp"
#include "toral/numeric.hpp"

namespace toral::testing {

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                               long lo = -20, long hi = 20) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
  return m;
}

// Product of random elementary row operations; always unimodular.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int ops = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> coef(-2, 2);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int k = 0; k < ops; ++k) {
    std::size_t i = idx(rng), j = idx(rng);
    switch (kind(rng)) {
      case 0:
        if (i != j) u.add_row_multiple(i, j, Int(coef(rng)));
        break;
      case 1:
        u.swap_rows(i, j);
        break;
      default:
        u.negate_row(i);
    }
  }
  return u;
}

}  // namespace toral::testing
