// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mpcode/codes.hpp"
#include "mpcode/mplaw.hpp"
#include "mpcode/specmat.hpp"

namespace mpcode {

/// Empirical spectral distribution: equal mass 1/p on each eigenvalue.
class ESD {
 public:
  explicit ESD(std::vector<double> atoms);
  explicit ESD(const GramSpectrum& spectrum) : ESD(spectrum.eigenvalues) {}

  const std::vector<double>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

 private:
  std::vector<double> atoms_;  // ascending
};

/// #{lambda_j <= x} / p.
double esd_cdf(const ESD& esd, double x);

/// #{lambda_j < x} / p, the left limit of esd_cdf at x.
double esd_cdf_left(const ESD& esd, double x);

/// sup over intervals I of |mu(I) - rho_MP(I)|. With D = F_mu - F_MP this is
/// sup D + sup(-D), where both suprema include D(-inf) = 0; the extremes
/// sit at atoms (evaluated from both sides) or at the edges a, b.
double interval_sup_distance(const ESD& esd, const MPParams& params);

/// sup_x |F_mu(x) - F_MP(x)| over the same candidate set.
double kolmogorov_distance(const ESD& esd, const MPParams& params);

/// (1/p) sum_j 1 / (lambda_j - z).
Complex empirical_stieltjes(const ESD& esd, Complex z);

struct TransformSample {
  Complex z;
  Complex value;
  std::size_t trials = 0;
  double std_err = 0.0;  // max over real and imaginary parts of std / sqrt(trials)
  double std_err_re = 0.0;
  double std_err_im = 0.0;
};

/// Empirical Stieltjes transform of each of `trials` independent sample
/// matrices; trial t uses master seed mix_seed(master_seed, t). The result is
/// indexed by trial and does not depend on the thread count.
std::vector<Complex> sample_stieltjes_values(const RowSource& source, std::size_t p, Complex z,
                                             std::size_t trials, std::uint64_t master_seed,
                                             unsigned threads = 0);

/// Monte Carlo estimate of E s_{G_n}(z), summed in trial order.
TransformSample estimate_expected_stieltjes(const RowSource& source, std::size_t p, Complex z,
                                            std::size_t trials, std::uint64_t master_seed,
                                            unsigned threads = 0);

/// Mean and standard error of a list of transform values.
TransformSample summarize_transform(Complex z, const std::vector<Complex>& values);

/// Delta = 1/s - (1 - y - z - y z s): the defect of s in the self-consistent
/// equation. Throws if s = 0.
Complex delta_perturbation(Complex s, Complex z, const MPParams& params);

/// Exact rational number with positive denominator, always reduced.
struct ExactRational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static ExactRational make(std::int64_t num, std::int64_t den);
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;  // "num/den"

  friend bool operator==(const ExactRational&, const ExactRational&) = default;
};

/// |q| <= bound, compared exactly.
bool abs_le(const ExactRational& q, const ExactRational& bound);

/// True when every index occurs an even number of times.
bool indices_pair_up(std::size_t j, std::size_t t, std::size_t k, std::size_t s);

/// Exact character-sum moments of a code, from one enumeration of all
/// codewords. Dimension must be at most kMaxEnumerationDimension.
class MomentOracle {
 public:
  explicit MomentOracle(const LinearCode& code);

  std::size_t length() const { return length_; }
  std::size_t codeword_count() const { return codewords_.size(); }

  /// E(X_lj X_lk) = (1 / (n #C)) sum_c psi(c_j) psi(c_k).
  ExactRational pair(std::size_t j, std::size_t k) const;
  /// E(X_lj X_lt X_lk X_ls) = (1 / (n^2 #C)) sum_c psi(c_j + c_t + c_k + c_s).
  ExactRational quad(std::size_t j, std::size_t t, std::size_t k, std::size_t s) const;
  /// (1 / #C) sum_c psi(a . c).
  ExactRational character_sum(const BitVector& a) const;

 private:
  std::int64_t signed_sum(const std::vector<std::size_t>& indices) const;

  std::size_t length_;
  std::vector<BitVector> codewords_;
};

ExactRational moment_pair_oracle(const LinearCode& code, std::size_t j, std::size_t k);
ExactRational moment_quad_oracle(const LinearCode& code, std::size_t j, std::size_t t, std::size_t k,
                                 std::size_t s);
ExactRational character_sum_oracle(const LinearCode& code, const BitVector& a);

/// G a^T = 0, i.e. a lies in the dual code.
bool in_dual(const LinearCode& code, const BitVector& a);

}  // namespace mpcode
