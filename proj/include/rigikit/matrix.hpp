// Copyright 2026 The rigikit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RIGIKIT_MATRIX_HPP_
#define RIGIKIT_MATRIX_HPP_

#include <cassert>
#include <cstddef>
#include <vector>

#include "rigikit/scalar.hpp"

namespace rigikit {

inline constexpr double kDefaultTolerance = 1e-9;

// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    assert(data_.size() == rows_ * cols_);
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& row : rows) {
      assert(row.size() == cols_);
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  std::vector<T> Row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  Matrix Transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  // Rows selected by index, in the given order.
  Matrix SelectRows(const std::vector<std::size_t>& which) const {
    Matrix out(which.size(), cols_);
    for (std::size_t r = 0; r < which.size(); ++r) {
      for (std::size_t j = 0; j < cols_; ++j) out(r, j) = (*this)(which[r], j);
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;
using FloatMatrix = Matrix<double>;

FloatMatrix ToFloat(const ExactMatrix& m);

// Builds a matrix whose rows are the given vectors (all of equal length).
template <typename T>
Matrix<T> FromRows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
  Matrix<T> m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

// Exact rank by fraction-free (Bareiss) elimination.
std::size_t Rank(const ExactMatrix& m);

// Number of singular values greater than tol * (largest singular value).
std::size_t Rank(const FloatMatrix& m, double tol = kDefaultTolerance);

// Basis of the right null space. Exact vectors are scaled so that their first
// nonzero coordinate is 1; float vectors are orthonormal with their largest
// magnitude coordinate positive.
std::vector<std::vector<Rational>> Kernel(const ExactMatrix& m);
std::vector<std::vector<double>> Kernel(const FloatMatrix& m, double tol = kDefaultTolerance);

// Determinant of a square exact matrix (Bareiss).
Rational Determinant(const ExactMatrix& m);

// Symmetric eigenvalues in ascending order.
std::vector<double> SymmetricEigenvalues(const FloatMatrix& m);

// Minimum-norm least-squares solution of A x = b.
std::vector<double> LeastSquares(const FloatMatrix& a, const std::vector<double>& b,
                                 double tol = kDefaultTolerance);

}  // namespace rigikit

#endif  // RIGIKIT_MATRIX_HPP_
