#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pqw/presentation.hpp"

namespace pqw {

// Dense integer matrix, row-major.
template <typename T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * std::size_t(c)) {}

  T& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  const T& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }
};

using MatI = Mat<std::int64_t>;
using MatZ = Mat<mpz_class>;

MatZ to_mpz(const MatI& m);
MatZ mat_mul(const MatZ& a, const MatZ& b);
mpz_class determinant(const MatZ& m);  // fraction-free (Bareiss)

// left * M * right = diag(diag), with d_i | d_{i+1}, d_i >= 0 and
// |det(left)| = |det(right)| = 1. `diag` has min(rows, cols) entries,
// trailing zeros included.
struct SmithResult {
  std::vector<mpz_class> diag;
  MatZ left, right;
};

// Runs on checked 64-bit arithmetic and transparently redoes the computation
// with arbitrary-precision integers if an intermediate entry overflows.
SmithResult smith_normal_form(const MatI& m);
SmithResult smith_normal_form(const MatZ& m);

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<long long> torsion;  // divisor chain d_1 | d_2 | ..., each >= 2

  bool finite() const { return free_rank == 0; }
  // Product of torsion entries; only meaningful when finite().
  long long order() const;
  // "1", "Z2^3", "Z2 x Z4", "Z^2 x Z3", ...
  std::string to_string() const;
  bool operator==(const AbelianInvariants&) const = default;
};

// Invariants of Z^ncols modulo the row space. Rows are sparse
// (column, coefficient) lists; columns are 0-based.
using SparseRow = std::vector<std::pair<int, long long>>;
AbelianInvariants abelian_invariants_of_rows(std::vector<SparseRow> rows, int ncols);

// Smith normal form of the relator exponent matrix.
AbelianInvariants abelianization(const Presentation& p);

}  // namespace pqw
