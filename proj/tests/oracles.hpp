#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <algorithm>
#include <vector>

#include <gmpxx.h>

#include "pqw/snf.hpp"

namespace pqw::testing {

// Determinantal-divisor Smith form: d_k = D_k / D_{k-1} where D_k is the gcd
// of all k x k minors. Exponential in the matrix size; for small test
// matrices only.
inline std::vector<mpz_class> snf_diagonal_by_minors(const MatZ& m) {
  int n = std::min(m.rows, m.cols);
  std::vector<mpz_class> det_gcd(static_cast<std::size_t>(n) + 1);
  det_gcd[0] = 1;

  std::vector<int> rows_sel, cols_sel;
  for (int k = 1; k <= n; ++k) {
    mpz_class g = 0;
    // All k-subsets of rows and columns.
    std::vector<int> ri(static_cast<std::size_t>(k)), ci(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) ri[std::size_t(i)] = i;
    while (true) {
      for (int i = 0; i < k; ++i) ci[std::size_t(i)] = i;
      while (true) {
        MatZ sub(k, k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) sub.at(a, b) = m.at(ri[std::size_t(a)], ci[std::size_t(b)]);
        mpz_class d = determinant(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        // next column subset
        int p = k - 1;
        while (p >= 0 && ci[std::size_t(p)] == m.cols - k + p) --p;
        if (p < 0) break;
        ++ci[std::size_t(p)];
        for (int q = p + 1; q < k; ++q) ci[std::size_t(q)] = ci[std::size_t(q - 1)] + 1;
      }
      int p = k - 1;
      while (p >= 0 && ri[std::size_t(p)] == m.rows - k + p) --p;
      if (p < 0) break;
      ++ri[std::size_t(p)];
      for (int q = p + 1; q < k; ++q) ri[std::size_t(q)] = ri[std::size_t(q - 1)] + 1;
    }
    det_gcd[std::size_t(k)] = g;
  }

  std::vector<mpz_class> diag(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    if (det_gcd[std::size_t(k)] == 0) {
      diag[std::size_t(k) - 1] = 0;
    } else {
      diag[std::size_t(k) - 1] = det_gcd[std::size_t(k)] / det_gcd[std::size_t(k) - 1];
    }
  }
  return diag;
}

}  // namespace pqw::testing
