#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "casorati/errors.hpp"

namespace casorati {

/// Dense row-major matrix over an exact field F (BigRational, RationalFunction).
/// F must provide construction from long, field operators and a free is_zero().
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  F& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) fail(ErrorCode::InvalidArgument, "matrix shape mismatch");
    Matrix r(x.rows_, y.cols_);
    for (size_t i = 0; i < x.rows_; ++i)
      for (size_t k = 0; k < x.cols_; ++k) {
        if (is_zero(x(i, k))) continue;
        for (size_t j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
      }
    return r;
  }

  friend Matrix operator+(Matrix x, const Matrix& y) {
    for (size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
    return x;
  }

  friend Matrix operator-(Matrix x, const Matrix& y) {
    for (size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
    return x;
  }

  Matrix scaled(const F& s) const {
    Matrix r = *this;
    for (auto& v : r.a_) v *= s;
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<F> a_;
};

template <class F>
struct Echelon {
  Matrix<F> reduced;            // reduced row echelon form
  std::vector<size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <class F>
Echelon<F> rref(Matrix<F> m) {
  Echelon<F> out;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    const F inv = F(1) / m(row, col);
    for (size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const F factor = m(i, col);
      for (size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class F>
size_t rank(const Matrix<F>& m) {
  return rref(m).pivots.size();
}

/// Right nullspace basis; each vector has a 1 at its free column and zeros at the other free columns.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) fail(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const size_t n = m.rows();
  F det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) return F(0);
    if (pivot != col) {
      for (size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const F inv = F(1) / m(col, col);
    for (size_t i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      const F factor = m(i, col) * inv;
      for (size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

/// Canonical basis of a subspace given by spanning vectors: the nonzero rows of their RREF.
template <class F>
std::vector<std::vector<F>> canonical_span(const std::vector<std::vector<F>>& vectors, size_t dim) {
  if (vectors.empty()) return {};
  Matrix<F> m(vectors.size(), dim);
  for (size_t i = 0; i < vectors.size(); ++i)
    for (size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
  auto e = rref(std::move(m));
  std::vector<std::vector<F>> out;
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    std::vector<F> row(dim);
    for (size_t j = 0; j < dim; ++j) row[j] = e.reduced(r, j);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace casorati
