#include "pqw/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "pqw/errors.hpp"

namespace pqw {

MatZ to_mpz(const MatI& m) {
  MatZ z(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) z.a[i] = mpz_class((long)m.a[i]);
  return z;
}

MatZ mat_mul(const MatZ& a, const MatZ& b) {
  check_internal(a.cols == b.rows, "matrix shape mismatch");
  MatZ c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  }
  return c;
}

mpz_class determinant(const MatZ& m) {
  check_internal(m.rows == m.cols, "determinant of non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  MatZ w = m;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i) {
        if (w.at(i, k) != 0) {
          p = i;
          break;
        }
      }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : mpz_class(-w.at(n - 1, n - 1));
}

namespace {

struct Overflow {};

inline std::int64_t c_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t c_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t c_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t c_neg(std::int64_t a) {
  if (a == INT64_MIN) throw Overflow{};
  return -a;
}
inline std::int64_t c_quot(std::int64_t a, std::int64_t b) {
  if (b == -1 && a == INT64_MIN) throw Overflow{};
  return a / b;
}
inline bool abs_less(std::int64_t a, std::int64_t b) {
  if (a == INT64_MIN || b == INT64_MIN) throw Overflow{};
  return std::llabs(a) < std::llabs(b);
}

inline mpz_class c_add(const mpz_class& a, const mpz_class& b) { return a + b; }
inline mpz_class c_sub(const mpz_class& a, const mpz_class& b) { return a - b; }
inline mpz_class c_mul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline mpz_class c_neg(const mpz_class& a) { return -a; }
inline mpz_class c_quot(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline bool abs_less(const mpz_class& a, const mpz_class& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

template <typename T>
class SnfEngine {
public:
  SnfEngine(Mat<T> m, bool track) : m_(std::move(m)), track_(track) {
    if (track_) {
      left_ = Mat<T>::identity(m_.rows);
      right_ = Mat<T>::identity(m_.cols);
    }
  }

  void run() {
    int steps = std::min(m_.rows, m_.cols);
    for (int t = 0; t < steps; ++t) {
      if (!pick_pivot(t)) break;
      reduce_step(t);
    }
    // Positive diagonal.
    for (int t = 0; t < steps; ++t) {
      if (m_.at(t, t) < 0) row_negate(t);
    }
  }

  const Mat<T>& matrix() const { return m_; }
  const Mat<T>& left() const { return left_; }
  const Mat<T>& right() const { return right_; }

private:
  Mat<T> m_, left_, right_;
  bool track_;

  void row_sub(int i, int t, const T& q) {
    for (int j = 0; j < m_.cols; ++j) m_.at(i, j) = c_sub(m_.at(i, j), c_mul(q, m_.at(t, j)));
    if (track_) {
      for (int j = 0; j < m_.rows; ++j)
        left_.at(i, j) = c_sub(left_.at(i, j), c_mul(q, left_.at(t, j)));
    }
  }
  void col_sub(int j, int t, const T& q) {
    for (int i = 0; i < m_.rows; ++i) m_.at(i, j) = c_sub(m_.at(i, j), c_mul(q, m_.at(i, t)));
    if (track_) {
      for (int i = 0; i < m_.cols; ++i)
        right_.at(i, j) = c_sub(right_.at(i, j), c_mul(q, right_.at(i, t)));
    }
  }
  void row_add(int i, int t) {
    for (int j = 0; j < m_.cols; ++j) m_.at(i, j) = c_add(m_.at(i, j), m_.at(t, j));
    if (track_) {
      for (int j = 0; j < m_.rows; ++j) left_.at(i, j) = c_add(left_.at(i, j), left_.at(t, j));
    }
  }
  void row_swap(int i, int t) {
    for (int j = 0; j < m_.cols; ++j) std::swap(m_.at(i, j), m_.at(t, j));
    if (track_) {
      for (int j = 0; j < m_.rows; ++j) std::swap(left_.at(i, j), left_.at(t, j));
    }
  }
  void col_swap(int j, int t) {
    for (int i = 0; i < m_.rows; ++i) std::swap(m_.at(i, j), m_.at(i, t));
    if (track_) {
      for (int i = 0; i < m_.cols; ++i) std::swap(right_.at(i, j), right_.at(i, t));
    }
  }
  void row_negate(int i) {
    for (int j = 0; j < m_.cols; ++j) m_.at(i, j) = c_neg(m_.at(i, j));
    if (track_) {
      for (int j = 0; j < m_.rows; ++j) left_.at(i, j) = c_neg(left_.at(i, j));
    }
  }

  // Moves a nonzero entry of least absolute value in the trailing submatrix
  // to (t, t). Returns false when the submatrix is zero.
  bool pick_pivot(int t) {
    int bi = -1, bj = -1;
    for (int i = t; i < m_.rows; ++i) {
      for (int j = t; j < m_.cols; ++j) {
        if (m_.at(i, j) == 0) continue;
        if (bi < 0 || abs_less(m_.at(i, j), m_.at(bi, bj))) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi < 0) return false;
    if (bi != t) row_swap(bi, t);
    if (bj != t) col_swap(bj, t);
    return true;
  }

  void reduce_step(int t) {
    while (true) {
      bool restart = false;
      // Clear column t via Euclid.
      for (int i = t + 1; i < m_.rows && !restart; ++i) {
        while (m_.at(i, t) != 0) {
          T q = c_quot(m_.at(i, t), m_.at(t, t));
          if (q != 0) row_sub(i, t, q);
          if (m_.at(i, t) != 0) {
            row_swap(i, t);
            restart = true;
            break;
          }
        }
      }
      if (restart) continue;
      // Clear row t; column t stays zero below the pivot.
      for (int j = t + 1; j < m_.cols && !restart; ++j) {
        while (m_.at(t, j) != 0) {
          T q = c_quot(m_.at(t, j), m_.at(t, t));
          if (q != 0) col_sub(j, t, q);
          if (m_.at(t, j) != 0) {
            col_swap(j, t);
            restart = true;
            break;
          }
        }
      }
      if (restart) continue;
      // Pivot must divide the rest of the submatrix for the divisor chain.
      bool dirty = false;
      for (int i = t + 1; i < m_.rows && !dirty; ++i) {
        for (int j = t + 1; j < m_.cols && !dirty; ++j) {
          T r = c_sub(m_.at(i, j), c_mul(c_quot(m_.at(i, j), m_.at(t, t)), m_.at(t, t)));
          if (r != 0) {
            row_add(t, i);
            dirty = true;
          }
        }
      }
      if (!dirty) return;
    }
  }
};

template <typename T>
SmithResult collect(const SnfEngine<T>& eng) {
  SmithResult res;
  const Mat<T>& m = eng.matrix();
  int n = std::min(m.rows, m.cols);
  res.diag.resize(n);
  for (int i = 0; i < n; ++i) res.diag[i] = mpz_class(m.at(i, i));
  res.left = MatZ(m.rows, m.rows);
  res.right = MatZ(m.cols, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.rows; ++j) res.left.at(i, j) = mpz_class(eng.left().at(i, j));
  for (int i = 0; i < m.cols; ++i)
    for (int j = 0; j < m.cols; ++j) res.right.at(i, j) = mpz_class(eng.right().at(i, j));
  return res;
}

template <>
SmithResult collect<mpz_class>(const SnfEngine<mpz_class>& eng) {
  SmithResult res;
  const MatZ& m = eng.matrix();
  int n = std::min(m.rows, m.cols);
  res.diag.resize(n);
  for (int i = 0; i < n; ++i) res.diag[i] = m.at(i, i);
  res.left = eng.left();
  res.right = eng.right();
  return res;
}

std::vector<mpz_class> snf_diagonal(MatI m) {
  try {
    SnfEngine<std::int64_t> eng(std::move(m), /*track=*/false);
    eng.run();
    int n = std::min(eng.matrix().rows, eng.matrix().cols);
    std::vector<mpz_class> d(n);
    for (int i = 0; i < n; ++i) d[i] = mpz_class((long)eng.matrix().at(i, i));
    return d;
  } catch (const Overflow&) {
    SnfEngine<mpz_class> eng(to_mpz(m), /*track=*/false);
    eng.run();
    int n = std::min(eng.matrix().rows, eng.matrix().cols);
    std::vector<mpz_class> d(n);
    for (int i = 0; i < n; ++i) d[i] = eng.matrix().at(i, i);
    return d;
  }
}

}  // namespace

SmithResult smith_normal_form(const MatI& m) {
  try {
    SnfEngine<std::int64_t> eng(m, /*track=*/true);
    eng.run();
    return collect(eng);
  } catch (const Overflow&) {
    return smith_normal_form(to_mpz(m));
  }
}

SmithResult smith_normal_form(const MatZ& m) {
  SnfEngine<mpz_class> eng(m, /*track=*/true);
  eng.run();
  return collect(eng);
}

long long AbelianInvariants::order() const {
  check_internal(finite(), "order of an infinite abelian group");
  long long n = 1;
  for (long long d : torsion) {
    check_internal(!__builtin_mul_overflow(n, d, &n), "abelian group order overflow");
  }
  return n;
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " x ";
    first = false;
  };
  if (free_rank == 1) {
    sep();
    out << "Z";
  } else if (free_rank > 1) {
    sep();
    out << "Z^" << free_rank;
  }
  std::size_t i = 0;
  while (i < torsion.size()) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    sep();
    out << "Z" << torsion[i];
    if (j - i > 1) out << "^" << (j - i);
    i = j;
  }
  if (first) out << "1";
  return out.str();
}

namespace {

SparseRow normalize_row(const SparseRow& row) {
  std::map<int, long long> acc;
  for (auto [c, v] : row) acc[c] += v;
  SparseRow out;
  for (auto [c, v] : acc) {
    if (v != 0) out.emplace_back(c, v);
  }
  return out;
}

}  // namespace

AbelianInvariants abelian_invariants_of_rows(std::vector<SparseRow> rows, int ncols) {
  check_input(ncols >= 0, "negative column count");
  for (auto& r : rows) r = normalize_row(r);

  std::vector<bool> row_live(rows.size(), true);
  std::vector<bool> col_live(std::size_t(ncols), true);
  std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(ncols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (auto [c, v] : rows[i]) col_rows[c].push_back(int(i));
  }

  long long units = 0;
  bool overflowed = false;

  // Peel off +-1 pivots; each contributes an invariant factor 1. The dense
  // Smith step below only sees whatever is left.
  try {
    bool progress = true;
    while (progress && !overflowed) {
      progress = false;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!row_live[i]) continue;
        int pivot_col = -1;
        long long pivot_val = 0;
        for (auto [c, v] : rows[i]) {
          if (v == 1 || v == -1) {
            if (pivot_col < 0 || col_rows[c].size() < col_rows[pivot_col].size()) {
              pivot_col = c;
              pivot_val = v;
            }
          }
        }
        if (pivot_col < 0) continue;
        // Eliminate pivot_col from every other live row.
        std::vector<int> users = col_rows[pivot_col];
        for (int j : users) {
          if (!row_live[j] || j == int(i)) continue;
          long long coeff = 0;
          for (auto [c, v] : rows[j]) {
            if (c == pivot_col) coeff = v;
          }
          if (coeff == 0) continue;
          long long mult = c_mul(coeff, pivot_val);  // row_j -= mult * row_i
          SparseRow merged;
          merged.reserve(rows[j].size() + rows[i].size());
          for (auto [c, v] : rows[j]) merged.emplace_back(c, v);
          for (auto [c, v] : rows[i]) merged.emplace_back(c, c_neg(c_mul(mult, v)));
          rows[j] = normalize_row(merged);
          for (auto [c, v] : rows[j]) col_rows[c].push_back(j);
        }
        row_live[i] = false;
        col_live[pivot_col] = false;
        ++units;
        progress = true;
      }
    }
  } catch (const Overflow&) {
    overflowed = true;
  }

  // Dense Smith on the residual. All applied row operations were invertible,
  // so the current live state presents the same quotient even if the peel
  // stopped early on overflow; the exact engine finishes it in that case.
  std::vector<int> col_map(std::size_t(ncols), -1);
  int live_cols = 0;
  for (int c = 0; c < ncols; ++c) {
    if (col_live[c]) col_map[c] = live_cols++;
  }
  std::vector<std::size_t> live_row_ids;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (row_live[i] && !rows[i].empty()) live_row_ids.push_back(i);
  }

  std::vector<mpz_class> diag;
  if (!live_row_ids.empty() && live_cols > 0) {
    if (!overflowed) {
      MatI dense(int(live_row_ids.size()), live_cols);
      for (std::size_t r = 0; r < live_row_ids.size(); ++r) {
        for (auto [c, v] : rows[live_row_ids[r]]) {
          check_internal(col_live[c], "eliminated column in live row");
          dense.at(int(r), col_map[c]) = v;
        }
      }
      diag = snf_diagonal(std::move(dense));
    } else {
      MatZ exact(int(live_row_ids.size()), live_cols);
      for (std::size_t r = 0; r < live_row_ids.size(); ++r) {
        for (auto [c, v] : rows[live_row_ids[r]]) exact.at(int(r), col_map[c]) = mpz_class((long)v);
      }
      SnfEngine<mpz_class> eng(std::move(exact), /*track=*/false);
      eng.run();
      int n = std::min(eng.matrix().rows, eng.matrix().cols);
      for (int i = 0; i < n; ++i) diag.push_back(eng.matrix().at(i, i));
    }
  }

  AbelianInvariants inv;
  long long rank = units;
  for (const mpz_class& d : diag) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) {
      check_internal(d.fits_slong_p(), "torsion coefficient exceeds 64 bits");
      inv.torsion.push_back(d.get_si());
    }
  }
  inv.free_rank = int(ncols - rank);
  return inv;
}

AbelianInvariants abelianization(const Presentation& p) {
  std::vector<SparseRow> rows;
  rows.reserve(p.relators.size());
  for (const Word& r : p.relators) {
    SparseRow row;
    for (Letter l : r) row.emplace_back(generator_of(l) - 1, l > 0 ? 1 : -1);
    rows.push_back(std::move(row));
  }
  return abelian_invariants_of_rows(std::move(rows), p.ngens);
}

}  // namespace pqw
