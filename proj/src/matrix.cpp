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

#include "rigikit/matrix.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace rigikit {

namespace {

struct Echelon {
  Matrix<mpz_class> rows;             // fraction-free row echelon form
  std::vector<std::size_t> pivot_cols;
  int sign = 1;                       // parity of row swaps
};

// Clears denominators row by row, then runs Bareiss elimination with column
// skipping. Every intermediate entry is a minor of the scaled input, so the
// divisions by the previous pivot are exact.
Echelon BareissEchelon(const ExactMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Echelon out;
  out.rows = Matrix<mpz_class>(rows, cols, mpz_class(0));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      out.rows(i, j) = m(i, j).get_num() * (lcm / m(i, j).get_den());
    }
  }
  auto& a = out.rows;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
      out.sign = -out.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

Eigen::MatrixXd ToEigen(const FloatMatrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  }
  return e;
}

}  // namespace

FloatMatrix ToFloat(const ExactMatrix& m) {
  FloatMatrix f(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) f(i, j) = RationalToDouble(m(i, j));
  }
  return f;
}

std::size_t Rank(const ExactMatrix& m) { return BareissEchelon(m).pivot_cols.size(); }

std::size_t Rank(const FloatMatrix& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(ToEigen(m));
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol * sv(0)) ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> Kernel(const ExactMatrix& m) {
  const std::size_t cols = m.cols();
  Echelon ech = BareissEchelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t r = ech.pivot_cols.size(); r-- > 0;) {
      std::size_t c = ech.pivot_cols[r];
      Rational acc = 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (x[j] != 0 && ech.rows(r, j) != 0) acc += Rational(ech.rows(r, j)) * x[j];
      }
      x[c] = -acc / Rational(ech.rows(r, c));
    }
    auto first = std::find_if(x.begin(), x.end(), [](const Rational& q) { return q != 0; });
    Rational scale = *first;
    for (auto& q : x) q /= scale;
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<std::vector<double>> Kernel(const FloatMatrix& m, double tol) {
  const std::size_t cols = m.cols();
  std::vector<std::vector<double>> basis;
  if (cols == 0) return basis;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<double> e(cols, 0.0);
      e[j] = 1.0;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(ToEigen(m), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  std::size_t rank = 0;
  if (sv.size() > 0 && sv(0) > 0.0) {
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) > tol * sv(0)) ++rank;
    }
  }
  const Eigen::MatrixXd& v = svd.matrixV();
  for (std::size_t k = rank; k < cols; ++k) {
    std::vector<double> x(cols);
    std::size_t arg = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      x[j] = v(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
      if (std::abs(x[j]) > std::abs(x[arg]) + 1e-12) arg = j;
    }
    if (x[arg] < 0) {
      for (auto& xi : x) xi = -xi;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Rational Determinant(const ExactMatrix& m) {
  assert(m.rows() == m.cols());
  if (m.rows() == 0) return 1;
  Echelon ech = BareissEchelon(m);
  if (ech.pivot_cols.size() < m.rows()) return 0;
  // The last pivot is the determinant of the row-scaled matrix.
  Rational det(ech.rows(m.rows() - 1, m.cols() - 1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    det /= Rational(lcm);
  }
  return det * ech.sign;
}

std::vector<double> SymmetricEigenvalues(const FloatMatrix& m) {
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(ToEigen(m), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<double> LeastSquares(const FloatMatrix& a, const std::vector<double>& b,
                                 double tol) {
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(ToEigen(a));
  cod.setThreshold(tol);
  Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(b.size()));
  Eigen::VectorXd x = cod.solve(rhs);
  return std::vector<double>(x.data(), x.data() + x.size());
}

}  // namespace rigikit
