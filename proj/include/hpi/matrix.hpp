#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hpi/errors.hpp"
#include "hpi/rational.hpp"

namespace hpi {

// Dense exact rational matrix, row major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw Error(ErrorCode::ValidationError, "ragged rows in matrix construction");
      for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ValidationError, "matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a.at(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

inline Vec mat_apply(const Matrix& a, const Vec& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::ValidationError, "matrix apply shape mismatch");
  Vec out(a.rows(), Rat(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(a.at(i, j))) out[i] += a.at(i, j) * v[j];
  return out;
}

// Fraction-free (Bareiss) elimination on a denominator-cleared copy.
// Exact rank; intermediate entries are minors of the scaled matrix, so all
// divisions below are exact integer divisions.
inline std::size_t bareiss_rank(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  if (R == 0 || C == 0) return 0;
  std::vector<std::vector<Int>> a(R, std::vector<Int>(C));
  for (std::size_t i = 0; i < R; ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < C; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < C; ++j) a[i][j] = m.at(i, j).get_num() * (lcm / m.at(i, j).get_den());
  }
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < C && r < R; ++col) {
    std::size_t piv = r;
    while (piv < R && a[piv][col] == 0) ++piv;
    if (piv == R) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = col + 1; j < C; ++j) {
        Int t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

// Determinant of a square matrix by the same fraction-free scheme, tracking
// row swaps and row scalings.
inline Rat bareiss_det(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::ValidationError, "determinant of non-square matrix");
  const std::size_t N = m.rows();
  if (N == 0) return Rat(1);
  std::vector<std::vector<Int>> a(N, std::vector<Int>(N));
  Rat scale = 1;
  for (std::size_t i = 0; i < N; ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < N; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < N; ++j) a[i][j] = m.at(i, j).get_num() * (lcm / m.at(i, j).get_den());
    scale /= Rat(lcm);
  }
  int sign = 1;
  Int prev = 1;
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t piv = col;
    while (piv < N && a[piv][col] == 0) ++piv;
    if (piv == N) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      sign = -sign;
    }
    for (std::size_t i = col + 1; i < N; ++i) {
      for (std::size_t j = col + 1; j < N; ++j) {
        Int t = a[col][col] * a[i][j] - a[i][col] * a[col][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[col][col];
  }
  Rat det(a[N - 1][N - 1]);
  det *= scale;
  if (sign < 0) det = -det;
  return det;
}

struct RrefResult {
  Matrix mat;                    // nonzero rows only, unit pivots, back-reduced
  std::vector<std::size_t> pivots;  // pivot column per row, strictly increasing
};

// Reduced row echelon form over the rationals. The output is the canonical
// basis of the row space: unit pivots at the lowest possible columns.
inline RrefResult rref(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<Vec> rows(R);
  for (std::size_t i = 0; i < R; ++i) rows[i] = m.row(i);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < C && r < R; ++col) {
    std::size_t piv = r;
    while (piv < R && is_zero(rows[piv][col])) ++piv;
    if (piv == R) continue;
    std::swap(rows[piv], rows[r]);
    Rat inv = 1 / rows[r][col];
    for (std::size_t j = col; j < C; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || is_zero(rows[i][col])) continue;
      Rat c = rows[i][col];
      for (std::size_t j = col; j < C; ++j) rows[i][j] -= c * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  Matrix out(r, C);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < C; ++j) out.at(i, j) = rows[i][j];
  return {std::move(out), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return bareiss_rank(m); }

// Canonical basis of { x : m x = 0 }: one vector per free column, unit entry
// at the free column, listed by increasing free column.
inline std::vector<Vec> kernel_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    Vec x(C, Rat(0));
    x[f] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = -rr.mat.at(i, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

// One solution of m x = b, if any.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::ValidationError, "solve shape mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult rr = rref(aug);
  Vec x(m.cols(), Rat(0));
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] == m.cols()) return std::nullopt;  // inconsistent row
    x[rr.pivots[i]] = rr.mat.at(i, m.cols());
  }
  return x;
}

}  // namespace hpi
