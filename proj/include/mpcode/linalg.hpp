// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace mpcode {

/// Dense row-major square matrix.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t size) : size_(size), data_(size * size, T{}) {}

  static SquareMatrix identity(std::size_t size) {
    SquareMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t size() const { return size_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

 private:
  std::size_t size_ = 0;
  std::vector<T> data_;
};

using RealMatrix = SquareMatrix<double>;
using ComplexMatrix = SquareMatrix<std::complex<double>>;

/// Eigenvalues of a real symmetric matrix, sorted ascending.
///
/// Householder reduction to tridiagonal form followed by implicit-shift QL.
/// An off-diagonal element e_i is deflated once
/// |e_i| <= 1e-12 * (|d_i| + |d_{i+1}|); each eigenvalue gets at most 50 QL
/// sweeps. Throws kInvalidArgument if |H_ij - H_ji| > symmetry_tol * max|H|
/// and kNumericalFailure when the iteration cap is hit.
std::vector<double> symmetric_eigenvalues(const RealMatrix& matrix, double symmetry_tol = 1e-12);

/// Eigenvalues of the symmetric tridiagonal matrix with the given diagonal
/// and sub-diagonal (sub.size() == diag.size() - 1), sorted ascending.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> sub);

/// Inverse by Gauss-Jordan elimination with partial pivoting. Throws
/// kNumericalFailure on an exactly singular pivot.
ComplexMatrix invert(const ComplexMatrix& matrix);

}  // namespace mpcode
