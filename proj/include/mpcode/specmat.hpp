// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mpcode/bitvec.hpp"
#include "mpcode/codes.hpp"
#include "mpcode/linalg.hpp"

namespace mpcode {

using Complex = std::complex<double>;

/// Rows of independent fair signs: the truly random baseline.
struct IidSignSource {
  std::size_t length = 0;
};

/// Where sample rows come from: a linear code or independent signs.
using RowSource = std::variant<LinearCode, IidSignSource>;

std::size_t source_length(const RowSource& source);

/// p x n matrix of +1/-1 entries, stored as bits (1 means -1).
class SampleMatrix {
 public:
  SampleMatrix(std::size_t rows, std::size_t cols, std::string source_label, std::uint64_t master_seed);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::string& source_label() const { return source_label_; }
  std::uint64_t master_seed() const { return master_seed_; }

  int entry(std::size_t r, std::size_t c) const {
    return ((row_words(r)[c / 64] >> (c % 64)) & 1u) ? -1 : 1;
  }
  std::span<const std::uint64_t> row_words(std::size_t r) const {
    return {bits_.data() + r * words_per_row_, words_per_row_};
  }
  /// The codeword c with psi(c) equal to row r.
  BitVector row_bits(std::size_t r) const;
  void set_row_bits(std::size_t r, const BitVector& bits);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> bits_;
  std::string source_label_;
  std::uint64_t master_seed_;
};

/// Row l is psi of a uniform codeword drawn from a stream seeded with
/// mix_seed(master_seed, l). Requires 1 <= p < n.
SampleMatrix build_sample_matrix(const LinearCode& code, std::size_t p, std::uint64_t master_seed);
SampleMatrix build_sample_matrix(const IidSignSource& source, std::size_t p, std::uint64_t master_seed);
SampleMatrix build_sample_matrix(const RowSource& source, std::size_t p, std::uint64_t master_seed);

/// Integer row inner products of the +1/-1 matrix, entry (j, k) = row_j . row_k.
std::vector<std::int64_t> gram_integer(const SampleMatrix& phi);

/// (1/n) Phi Phi^T; diagonal entries are exactly 1.
RealMatrix gram(const SampleMatrix& phi);

struct GramSpectrum {
  double y = 0.0;                    // p / n
  std::vector<double> eigenvalues;   // ascending
};

/// Eigenvalues of a Gram matrix. Negative values above -1e-8 are clamped to
/// zero; anything lower, or a trace mismatch beyond 1e-8 * p, throws
/// kNumericalFailure.
GramSpectrum gram_spectrum(const RealMatrix& gram_matrix, double y);

/// gram_spectrum(gram(phi), p / n).
GramSpectrum spectrum_of(const SampleMatrix& phi);

/// Tr G = sum_j 1 / (lambda_j - z), unnormalized. Requires Im z > 0.
Complex green_trace(const GramSpectrum& spectrum, Complex z);

// Resolvent identity checks. All of them form X = n^(-1/2) Phi explicitly
// and invert dense complex matrices, so they are limited to n <= 128.
//
// X^(T) is X with the rows in T set to zero. G^(T) is the Green function of
// the rows outside T, i.e. of the (p - |T|) x (p - |T|) Gram matrix of
// X^(T) restricted to those rows; R^(T) = (X^(T)* X^(T) - z)^(-1) is n x n.

struct IdentityCheck {
  Complex lhs;
  Complex rhs;
  double residual = 0.0;  // |lhs - rhs|
};

/// 1/G_ll = -z - z sum_{j,k} X_lj R^(l)_jk conj(X_lk).
IdentityCheck verify_diagonal_identity(const SampleMatrix& phi, std::size_t row, Complex z);

/// Tr G^(T) - Tr R^(T) = (n - (p - |T|)) / z.
IdentityCheck verify_trace_relation(const SampleMatrix& phi, const std::vector<std::size_t>& removed,
                                    Complex z);

/// sum_k |R^(T)_jk|^2 = Im R^(T)_jj / eta.
IdentityCheck verify_wald(const SampleMatrix& phi, const std::vector<std::size_t>& removed,
                          std::size_t j, Complex z);

struct InterlacingCheck {
  double delta = 0.0;  // |Tr G^(T) - Tr G|
  double bound = 0.0;  // |T| / eta
  bool holds() const { return delta <= bound; }
};

InterlacingCheck verify_interlacing(const SampleMatrix& phi, const std::vector<std::size_t>& removed,
                                    Complex z);

/// Tr G^(T) with the convention above (0 when every row is removed).
Complex minor_green_trace(const SampleMatrix& phi, const std::vector<std::size_t>& removed, Complex z);

/// R^(T) as a dense n x n matrix.
ComplexMatrix column_resolvent(const SampleMatrix& phi, const std::vector<std::size_t>& removed,
                               Complex z);

}  // namespace mpcode
