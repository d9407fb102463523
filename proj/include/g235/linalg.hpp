#pragma once

#include <cstddef>
#include <vector>

#include "g235/errors.hpp"

namespace g235 {

/// Dense exact matrix over a field F (F needs +,-,*,/, is_zero, ==, F(long)).
template <class F>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Matrix transposed() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) fail(Err::Internal, "matrix product shape mismatch");
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.c_; ++j) {
          if (b(k, j).is_zero()) continue;
          m(i, j) += a(i, k) * b(k, j);
        }
      }
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) fail(Err::Internal, "matrix sum shape mismatch");
    Matrix m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] += b.a_[k];
    return m;
  }

  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != c_) fail(Err::Internal, "matrix apply shape mismatch");
    std::vector<F> out(r_, F(0));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  /// In-place reduction to row echelon form; returns pivot column list.
  std::vector<std::size_t> row_reduce() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c_ && row < r_; ++col) {
      std::size_t p = row;
      while (p < r_ && (*this)(p, col).is_zero()) ++p;
      if (p == r_) continue;
      if (p != row)
        for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(p, j), (*this)(row, j));
      F inv = F(1) / (*this)(row, col);
      for (std::size_t j = col; j < c_; ++j) (*this)(row, j) = (*this)(row, j) * inv;
      for (std::size_t i = 0; i < r_; ++i) {
        if (i == row || (*this)(i, col).is_zero()) continue;
        F f = (*this)(i, col);
        for (std::size_t j = col; j < c_; ++j) (*this)(i, j) -= f * (*this)(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.row_reduce().size();
  }

  /// Basis of the right null space, as columns of the result.
  Matrix kernel() const {
    Matrix m = *this;
    auto pivots = m.row_reduce();
    std::vector<bool> is_pivot(c_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::size_t nfree = c_ - pivots.size();
    Matrix k(c_, nfree);
    std::size_t idx = 0;
    for (std::size_t col = 0; col < c_; ++col) {
      if (is_pivot[col]) continue;
      k(col, idx) = F(1);
      for (std::size_t pi = 0; pi < pivots.size(); ++pi) k(pivots[pi], idx) = -m(pi, col);
      ++idx;
    }
    return k;
  }

  /// Solves A x = b; returns false if inconsistent (then x untouched).
  bool solve(const std::vector<F>& b, std::vector<F>& x) const {
    if (b.size() != r_) fail(Err::Internal, "solve shape mismatch");
    Matrix aug(r_, c_ + 1);
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_) = b[i];
    }
    auto pivots = aug.row_reduce();
    if (!pivots.empty() && pivots.back() == c_) return false;
    x.assign(c_, F(0));
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug(pi, c_);
    return true;
  }

  Matrix inverse() const {
    if (r_ != c_) fail(Err::Internal, "inverse of non-square matrix");
    Matrix aug(r_, 2 * c_);
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_ + i) = F(1);
    }
    auto pivots = aug.row_reduce();
    if (pivots.size() != r_ || pivots.back() != r_ - 1)
      fail(Err::Internal, "matrix not invertible");
    Matrix inv(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) inv(i, j) = aug(i, c_ + j);
    return inv;
  }

private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<F> a_;
};

/// Column span with membership testing (kept in reduced row form internally).
template <class F>
class Span {
public:
  explicit Span(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return dim_; }

  /// Reduces v against the current rows; returns the residual.
  std::vector<F> residual(std::vector<F> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const F& c = v[lead_[k]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) v[j] -= c * rows_[k][j];
    }
    return v;
  }

  bool contains(const std::vector<F>& v) const {
    auto r = residual(v);
    for (const auto& x : r)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Adds v to the span; returns true if the dimension grew.
  bool add(const std::vector<F>& v) {
    auto r = residual(v);
    std::size_t lead = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!r[j].is_zero()) {
        lead = j;
        break;
      }
    if (lead == dim_) return false;
    F inv = F(1) / r[lead];
    for (auto& x : r) x = x * inv;
    // Back-substitute into existing rows to keep reduced form.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const F c = rows_[k][lead];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) rows_[k][j] -= c * r[j];
    }
    std::size_t pos = 0;
    while (pos < lead_.size() && lead_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(r));
    lead_.insert(lead_.begin() + pos, lead);
    return true;
  }

  const std::vector<std::vector<F>>& basis_rows() const { return rows_; }

private:
  std::size_t dim_;
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> lead_;
};

/// Determinant over a commutative ring (no division): Laplace expansion with
/// memoization over column subsets.  Intended for small n (<= 8).
template <class R>
R ring_det(const Matrix<R>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) fail(Err::Internal, "ring_det of non-square matrix");
  if (n == 0) return R(1);
  if (n > 20) fail(Err::Internal, "ring_det too large");
  std::vector<std::vector<R>> memo(std::size_t(1) << n);
  std::vector<bool> have(std::size_t(1) << n, false);
  // det of the submatrix with rows n-k..n-1 and column set `mask` (|mask| = k).
  struct Rec {
    const Matrix<R>& m;
    std::size_t n;
    std::vector<std::vector<R>>& memo;
    std::vector<bool>& have;
    R operator()(std::size_t mask, std::size_t k) {
      if (k == 0) return R(1);
      if (have[mask]) return memo[mask][0];
      std::size_t row = n - k;
      R acc(0);
      int sgn = 1;
      for (std::size_t j = 0, seen = 0; j < n; ++j) {
        if (!(mask & (std::size_t(1) << j))) continue;
        ++seen;
        if (!m(row, j).is_zero()) {
          R sub = (*this)(mask & ~(std::size_t(1) << j), k - 1);
          R term = m(row, j) * sub;
          acc += (sgn > 0) ? term : -term;
        }
        sgn = (seen % 2 == 1) ? -1 : 1;
      }
      memo[mask] = {acc};
      have[mask] = true;
      return acc;
    }
  } rec{m, n, memo, have};
  return rec((std::size_t(1) << n) - 1, n);
}

} // namespace g235
