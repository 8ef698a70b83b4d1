#pragma once

#include <cstddef>
#include <vector>

#include "permpat/error.hpp"
#include "permpat/qfield.hpp"
#include "permpat/rational.hpp"

namespace permpat {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1L);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (x != T(0L)) return false;
    }
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& x = a(i, l);
        if (x == T(0L)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(l, j) == T(0L)) continue;
          out(i, j) += x * b(l, j);
        }
      }
    }
    return out;
  }

  Matrix& operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<QNum>;
using RMatrix = Matrix<Rational>;

/// Exact rank by Gaussian elimination.
std::size_t rank(RMatrix m);
std::size_t rank(QMatrix m);

QMatrix to_qmatrix(const RMatrix& m);

}  // namespace permpat
