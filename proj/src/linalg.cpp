// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#include "mpcode/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "mpcode/error.hpp"

namespace mpcode {
namespace {

constexpr double kDeflationTol = 1e-12;
constexpr int kMaxSweepsPerEigenvalue = 50;

// Householder reduction of a symmetric matrix (lower triangle used, a is
// destroyed). On return d holds the diagonal and e[i] the element coupling
// rows i-1 and i (e[0] = 0).
void householder_tridiagonalize(RealMatrix& a, std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = a.size();
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (std::size_t k = 0; k <= l; ++k) scale += std::fabs(a(i, k));
      if (scale == 0.0) {
        e[i] = a(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          a(i, k) /= scale;
          h += a(i, k) * a(i, k);
        }
        const double f = a(i, l);
        const double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        a(i, l) = f - g;
        // p = A u / h, stored in e[0..l].
        double f_acc = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          double gj = 0.0;
          for (std::size_t k = 0; k <= j; ++k) gj += a(j, k) * a(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) gj += a(k, j) * a(i, k);
          e[j] = gj / h;
          f_acc += e[j] * a(i, j);
        }
        const double hh = f_acc / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          const double fj = a(i, j);
          const double gj = e[j] - hh * fj;
          e[j] = gj;
          for (std::size_t k = 0; k <= j; ++k) a(j, k) -= fj * e[k] + gj * a(i, k);
        }
      }
    } else {
      e[i] = a(i, l);
    }
    d[i] = h;
  }
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> sub) {
  const std::size_t n = d.size();
  if (n == 0) return d;
  if (sub.size() + 1 != n) throw_invalid("sub-diagonal length must be size - 1");
  std::vector<double> e(n, 0.0);
  std::copy(sub.begin(), sub.end(), e.begin());

  for (std::size_t l = 0; l < n; ++l) {
    int sweeps = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= kDeflationTol * dd) break;
      }
      if (m != l) {
        if (sweeps++ == kMaxSweepsPerEigenvalue) {
          throw Error(ErrorCode::kNumericalFailure, "tridiagonal QL did not converge");
        }
        // Wilkinson-style shift from the leading 2x2 block.
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::fabs(r) : -std::fabs(r)));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        std::size_t i = m;
        bool underflow = false;
        while (i-- > l) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<double> symmetric_eigenvalues(const RealMatrix& matrix, double symmetry_tol) {
  const std::size_t n = matrix.size();
  if (n == 0) return {};
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::fabs(matrix(i, j)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::fabs(matrix(i, j) - matrix(j, i)) > symmetry_tol * scale) {
        throw_invalid("matrix is not symmetric");
      }
    }
  }
  RealMatrix work = matrix;
  std::vector<double> d;
  std::vector<double> e;
  householder_tridiagonalize(work, d, e);
  return tridiagonal_eigenvalues(std::move(d), std::vector<double>(e.begin() + 1, e.end()));
}

ComplexMatrix invert(const ComplexMatrix& matrix) {
  const std::size_t n = matrix.size();
  ComplexMatrix a = matrix;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > best) {
        best = std::abs(a(r, col));
        pivot = r;
      }
    }
    if (best == 0.0) throw Error(ErrorCode::kNumericalFailure, "singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const std::complex<double> scale = 1.0 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const std::complex<double> factor = a(r, col);
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= factor * a(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace mpcode
