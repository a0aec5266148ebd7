#pragma once

#include "maxtorus/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace maxtorus {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds from row vectors; `cols` is used when `rows` is empty.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<T>> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    return from_rows(r);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }
  std::vector<T> column_vector(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<std::vector<T>> row_vectors() const {
    std::vector<std::vector<T>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  void append_row(std::span<const T> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("Matrix::append_row: length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Sub-matrix made of the listed rows, in order.
  Matrix select_rows(std::span<const std::size_t> indices) const {
    Matrix m(indices.size(), cols_);
    for (std::size_t k = 0; k < indices.size(); ++k)
      for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(indices[k], j);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("Matrix-vector product: shape mismatch");
    std::vector<T> y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

RationalMatrix to_rational(const IntegerMatrix& m);

/// Throws std::invalid_argument if some entry is not an integer.
IntegerMatrix to_integer(const RationalMatrix& m);

}  // namespace maxtorus
