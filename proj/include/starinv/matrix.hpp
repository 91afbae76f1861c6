#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "starinv/error.hpp"
#include "starinv/field.hpp"

namespace starinv {

// Dense m x n matrix over an exact field F (RationalField or PrimeField).
//
// Matrices are immutable values: the entry storage is shared between copies
// and never written after construction, so copying is cheap and concurrent
// reads need no synchronization. Zero-sized dimensions are allowed; an m x 0
// times 0 x n product is the m x n zero matrix.
template <class F>
class Matrix {
 public:
  using Field = F;
  using Scalar = typename F::Scalar;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : Matrix(field, rows, cols,
               std::vector<Scalar>(rows * cols, field.zero())) {}

  Matrix(F field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
      : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (entries.size() != rows * cols) {
      throw Error(Errc::dimension_mismatch,
                  "entry count " + std::to_string(entries.size()) +
                      " does not match " + shape_string(rows, cols));
    }
    data_ = std::make_shared<const std::vector<Scalar>>(std::move(entries));
  }

  static Matrix identity(F field, std::size_t n) {
    std::vector<Scalar> e(n * n, field.zero());
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = field.one();
    return Matrix(field, n, n, std::move(e));
  }

  // Integer literal rows, reduced into the field. Handy for fixtures.
  static Matrix from_rows(F field,
                          std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Scalar> e;
    e.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) {
        throw Error(Errc::dimension_mismatch, "ragged row list");
      }
      for (long v : row) e.push_back(field.from_int(v));
    }
    return Matrix(field, r, c, std::move(e));
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return (*data_)[i * cols_ + j];
  }
  std::span<const Scalar> entries() const { return *data_; }

  bool is_zero() const {
    for (const auto& s : *data_) {
      if (!field_.is_zero(s)) return false;
    }
    return true;
  }

  Matrix transpose() const {
    std::vector<Scalar> e;
    e.reserve(rows_ * cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) e.push_back((*this)(i, j));
    return Matrix(field_, cols_, rows_, std::move(e));
  }

  // Columns listed in `which`, in that order.
  Matrix select_columns(std::span<const std::size_t> which) const {
    std::vector<Scalar> e;
    e.reserve(rows_ * which.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j : which) e.push_back((*this)(i, j));
    return Matrix(field_, rows_, which.size(), std::move(e));
  }

  Matrix select_rows(std::span<const std::size_t> which) const {
    std::vector<Scalar> e;
    e.reserve(which.size() * cols_);
    for (std::size_t i : which)
      for (std::size_t j = 0; j < cols_; ++j) e.push_back((*this)(i, j));
    return Matrix(field_, which.size(), cols_, std::move(e));
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "addition");
    std::vector<Scalar> e;
    e.reserve(a.data_->size());
    for (std::size_t k = 0; k < a.data_->size(); ++k)
      e.push_back(a.field_.add((*a.data_)[k], (*b.data_)[k]));
    return Matrix(a.field_, a.rows_, a.cols_, std::move(e));
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "subtraction");
    std::vector<Scalar> e;
    e.reserve(a.data_->size());
    for (std::size_t k = 0; k < a.data_->size(); ++k)
      e.push_back(a.field_.sub((*a.data_)[k], (*b.data_)[k]));
    return Matrix(a.field_, a.rows_, a.cols_, std::move(e));
  }

  friend Matrix operator-(const Matrix& a) {
    std::vector<Scalar> e;
    e.reserve(a.data_->size());
    for (const auto& s : *a.data_) e.push_back(a.field_.neg(s));
    return Matrix(a.field_, a.rows_, a.cols_, std::move(e));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.require_same_field(b);
    if (a.cols_ != b.rows_) {
      throw Error(Errc::dimension_mismatch,
                  "cannot multiply " + shape_string(a.rows_, a.cols_) + " by " +
                      shape_string(b.rows_, b.cols_));
    }
    const F& f = a.field_;
    std::vector<Scalar> e(a.rows_ * b.cols_, f.zero());
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (f.is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          auto& slot = e[i * b.cols_ + j];
          slot = f.add(slot, f.mul(aik, b(k, j)));
        }
      }
    }
    return Matrix(f, a.rows_, b.cols_, std::move(e));
  }

  friend Matrix operator*(const Scalar& s, const Matrix& a) {
    std::vector<Scalar> e;
    e.reserve(a.data_->size());
    for (const auto& v : *a.data_) e.push_back(a.field_.mul(s, v));
    return Matrix(a.field_, a.rows_, a.cols_, std::move(e));
  }

  // Shape and field are part of identity: differently shaped matrices are
  // simply unequal.
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      return false;
    }
    if (a.data_ == b.data_) return true;
    for (std::size_t k = 0; k < a.data_->size(); ++k) {
      if (!a.field_.equal((*a.data_)[k], (*b.data_)[k])) return false;
    }
    return true;
  }

  std::string shape() const { return shape_string(rows_, cols_); }

  static std::string shape_string(std::size_t r, std::size_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
  }

 private:
  void require_same_field(const Matrix& other) const {
    if (!(field_ == other.field_)) {
      throw Error(Errc::ring_mismatch, "matrices over different fields: " +
                                           field_.tag() + " vs " +
                                           other.field_.tag());
    }
  }

  void require_same_shape(const Matrix& other, const char* op) const {
    require_same_field(other);
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw Error(Errc::dimension_mismatch, std::string(op) + " of " + shape() +
                                                " and " + other.shape());
    }
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::shared_ptr<const std::vector<Scalar>> data_;
};

using RationalMatrix = Matrix<RationalField>;
using PrimeMatrix = Matrix<PrimeField>;

template <class F>
Matrix<F> hstack(const Matrix<F>& left, const Matrix<F>& right) {
  if (left.rows() != right.rows()) {
    throw Error(Errc::dimension_mismatch,
                "hstack of " + left.shape() + " and " + right.shape());
  }
  std::vector<typename F::Scalar> e;
  e.reserve(left.rows() * (left.cols() + right.cols()));
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) e.push_back(left(i, j));
    for (std::size_t j = 0; j < right.cols(); ++j) e.push_back(right(i, j));
  }
  return Matrix<F>(left.field(), left.rows(), left.cols() + right.cols(),
                   std::move(e));
}

// Zero-padded top-left embedding into a square matrix of order n.
template <class F>
Matrix<F> embed_square(const Matrix<F>& m, std::size_t n) {
  if (n < m.rows() || n < m.cols()) {
    throw Error(Errc::dimension_mismatch,
                "cannot embed " + m.shape() + " into order " + std::to_string(n));
  }
  std::vector<typename F::Scalar> e(n * n, m.field().zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e[i * n + j] = m(i, j);
  return Matrix<F>(m.field(), n, n, std::move(e));
}

// Column-major vectorization and the Kronecker product, used to turn
// corner-constrained matrix equations into ordinary linear systems.
template <class F>
Matrix<F> vectorize(const Matrix<F>& m) {
  std::vector<typename F::Scalar> e;
  e.reserve(m.rows() * m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) e.push_back(m(i, j));
  return Matrix<F>(m.field(), m.rows() * m.cols(), 1, std::move(e));
}

template <class F>
Matrix<F> unvectorize(const Matrix<F>& v, std::size_t rows, std::size_t cols) {
  if (v.rows() != rows * cols || v.cols() != 1) {
    throw Error(Errc::dimension_mismatch, "unvectorize of " + v.shape());
  }
  std::vector<typename F::Scalar> e(rows * cols, v.field().zero());
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) e[i * cols + j] = v(j * rows + i, 0);
  return Matrix<F>(v.field(), rows, cols, std::move(e));
}

template <class F>
Matrix<F> kronecker(const Matrix<F>& a, const Matrix<F>& b) {
  const F& f = a.field();
  const std::size_t r = a.rows() * b.rows(), c = a.cols() * b.cols();
  std::vector<typename F::Scalar> e(r * c, f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          e[(i * b.rows() + k) * c + j * b.cols() + l] = f.mul(a(i, j), b(k, l));
  return Matrix<F>(f, r, c, std::move(e));
}

}  // namespace starinv
