// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#include "mpcode/specmat.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "mpcode/error.hpp"
#include "mpcode/rng.hpp"

namespace mpcode {
namespace {

constexpr std::size_t kMaxResolventSize = 128;
constexpr double kNegativeClamp = -1e-8;
constexpr double kTraceTol = 1e-8;

void check_upper_half_plane(Complex z) {
  if (!(z.imag() > 0.0)) throw_invalid("spectral parameter must have Im z > 0");
}

void check_sample_shape(std::size_t p, std::size_t n) {
  if (p < 1 || p >= n) throw_invalid("sample matrix requires 1 <= p < n");
}

void check_resolvent_size(const SampleMatrix& phi) {
  if (phi.cols() > kMaxResolventSize || phi.rows() > kMaxResolventSize) {
    throw Error(ErrorCode::kLimitExceeded, "resolvent checks are limited to n <= 128");
  }
}

std::vector<bool> removal_mask(const SampleMatrix& phi, const std::vector<std::size_t>& removed) {
  std::vector<bool> mask(phi.rows(), false);
  for (std::size_t r : removed) {
    if (r >= phi.rows()) throw_invalid("removed row index out of range");
    mask[r] = true;
  }
  return mask;
}

// X = n^(-1/2) Phi as doubles, with masked rows zeroed.
std::vector<double> scaled_entries(const SampleMatrix& phi, const std::vector<bool>& zeroed) {
  const std::size_t p = phi.rows();
  const std::size_t n = phi.cols();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<double> x(p * n, 0.0);
  for (std::size_t r = 0; r < p; ++r) {
    if (zeroed[r]) continue;
    for (std::size_t c = 0; c < n; ++c) x[r * n + c] = scale * phi.entry(r, c);
  }
  return x;
}

}  // namespace

SampleMatrix::SampleMatrix(std::size_t rows, std::size_t cols, std::string source_label,
                           std::uint64_t master_seed)
    : rows_(rows),
      cols_(cols),
      words_per_row_(BitVector::word_count(cols)),
      bits_(rows * words_per_row_, 0),
      source_label_(std::move(source_label)),
      master_seed_(master_seed) {}

BitVector SampleMatrix::row_bits(std::size_t r) const {
  BitVector out(cols_);
  auto src = row_words(r);
  std::copy(src.begin(), src.end(), out.words().begin());
  return out;
}

void SampleMatrix::set_row_bits(std::size_t r, const BitVector& bits) {
  if (bits.size() != cols_) throw_invalid("row length mismatch");
  std::copy(bits.words().begin(), bits.words().end(), bits_.begin() + static_cast<std::ptrdiff_t>(r * words_per_row_));
}

SampleMatrix build_sample_matrix(const LinearCode& code, std::size_t p, std::uint64_t master_seed) {
  check_sample_shape(p, code.length());
  SampleMatrix phi(p, code.length(), code.label(), master_seed);
  for (std::size_t r = 0; r < p; ++r) {
    RandomStream rng = make_stream(mix_seed(master_seed, r));
    phi.set_row_bits(r, sample_codeword(code, rng));
  }
  return phi;
}

SampleMatrix build_sample_matrix(const IidSignSource& source, std::size_t p, std::uint64_t master_seed) {
  check_sample_shape(p, source.length);
  SampleMatrix phi(p, source.length, "iid-n" + std::to_string(source.length), master_seed);
  BitVector bits(source.length);
  const std::size_t tail = source.length % 64;
  for (std::size_t r = 0; r < p; ++r) {
    RandomStream rng = make_stream(mix_seed(master_seed, r));
    auto words = bits.words();
    for (auto& w : words) w = rng();
    if (tail != 0) words.back() &= (std::uint64_t{1} << tail) - 1;
    phi.set_row_bits(r, bits);
  }
  return phi;
}

SampleMatrix build_sample_matrix(const RowSource& source, std::size_t p, std::uint64_t master_seed) {
  return std::visit([&](const auto& s) { return build_sample_matrix(s, p, master_seed); }, source);
}

std::size_t source_length(const RowSource& source) {
  if (const auto* code = std::get_if<LinearCode>(&source)) return code->length();
  return std::get<IidSignSource>(source).length;
}

std::vector<std::int64_t> gram_integer(const SampleMatrix& phi) {
  const std::size_t p = phi.rows();
  const auto n = static_cast<std::int64_t>(phi.cols());
  std::vector<std::int64_t> out(p * p, 0);
  for (std::size_t j = 0; j < p; ++j) {
    auto rj = phi.row_words(j);
    out[j * p + j] = n;
    for (std::size_t k = j + 1; k < p; ++k) {
      auto rk = phi.row_words(k);
      std::int64_t differing = 0;
      for (std::size_t w = 0; w < rj.size(); ++w) differing += std::popcount(rj[w] ^ rk[w]);
      const std::int64_t dot = n - 2 * differing;
      out[j * p + k] = dot;
      out[k * p + j] = dot;
    }
  }
  return out;
}

RealMatrix gram(const SampleMatrix& phi) {
  const std::size_t p = phi.rows();
  const auto n = static_cast<double>(phi.cols());
  const auto dots = gram_integer(phi);
  RealMatrix g(p);
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t k = 0; k < p; ++k) g(j, k) = static_cast<double>(dots[j * p + k]) / n;
  }
  return g;
}

GramSpectrum gram_spectrum(const RealMatrix& gram_matrix, double y) {
  GramSpectrum out;
  out.y = y;
  out.eigenvalues = symmetric_eigenvalues(gram_matrix);
  double trace = 0.0;
  for (std::size_t i = 0; i < gram_matrix.size(); ++i) trace += gram_matrix(i, i);
  for (double& lambda : out.eigenvalues) {
    if (lambda < 0.0) {
      if (lambda < kNegativeClamp) {
        throw Error(ErrorCode::kNumericalFailure, "Gram eigenvalue below -1e-8");
      }
      lambda = 0.0;
    }
  }
  const double sum = std::accumulate(out.eigenvalues.begin(), out.eigenvalues.end(), 0.0);
  if (std::fabs(sum - trace) > kTraceTol * std::max(1.0, trace)) {
    throw Error(ErrorCode::kNumericalFailure, "Gram eigenvalues do not sum to the trace");
  }
  return out;
}

GramSpectrum spectrum_of(const SampleMatrix& phi) {
  return gram_spectrum(gram(phi), static_cast<double>(phi.rows()) / static_cast<double>(phi.cols()));
}

Complex green_trace(const GramSpectrum& spectrum, Complex z) {
  check_upper_half_plane(z);
  Complex total = 0.0;
  for (double lambda : spectrum.eigenvalues) total += 1.0 / (lambda - z);
  return total;
}

Complex minor_green_trace(const SampleMatrix& phi, const std::vector<std::size_t>& removed, Complex z) {
  check_upper_half_plane(z);
  check_resolvent_size(phi);
  const auto mask = removal_mask(phi, removed);
  std::vector<std::size_t> kept;
  for (std::size_t r = 0; r < phi.rows(); ++r) {
    if (!mask[r]) kept.push_back(r);
  }
  if (kept.empty()) return 0.0;
  const auto x = scaled_entries(phi, mask);
  const std::size_t n = phi.cols();
  ComplexMatrix shifted(kept.size());
  for (std::size_t a = 0; a < kept.size(); ++a) {
    for (std::size_t b = 0; b < kept.size(); ++b) {
      double dot = 0.0;
      for (std::size_t c = 0; c < n; ++c) dot += x[kept[a] * n + c] * x[kept[b] * n + c];
      shifted(a, b) = dot;
    }
    shifted(a, a) -= z;
  }
  const ComplexMatrix g = invert(shifted);
  Complex trace = 0.0;
  for (std::size_t a = 0; a < kept.size(); ++a) trace += g(a, a);
  return trace;
}

ComplexMatrix column_resolvent(const SampleMatrix& phi, const std::vector<std::size_t>& removed,
                               Complex z) {
  check_upper_half_plane(z);
  check_resolvent_size(phi);
  const auto mask = removal_mask(phi, removed);
  const auto x = scaled_entries(phi, mask);
  const std::size_t p = phi.rows();
  const std::size_t n = phi.cols();
  ComplexMatrix shifted(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      double dot = 0.0;
      for (std::size_t r = 0; r < p; ++r) dot += x[r * n + j] * x[r * n + k];
      shifted(j, k) = dot;
    }
    shifted(j, j) -= z;
  }
  return invert(shifted);
}

IdentityCheck verify_diagonal_identity(const SampleMatrix& phi, std::size_t row, Complex z) {
  check_upper_half_plane(z);
  check_resolvent_size(phi);
  if (phi.rows() < 2) throw_invalid("diagonal identity needs p >= 2");
  if (row >= phi.rows()) throw_invalid("row index out of range");
  const std::size_t p = phi.rows();
  const std::size_t n = phi.cols();
  const auto x = scaled_entries(phi, std::vector<bool>(p, false));

  ComplexMatrix shifted(p);
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < p; ++b) {
      double dot = 0.0;
      for (std::size_t c = 0; c < n; ++c) dot += x[a * n + c] * x[b * n + c];
      shifted(a, b) = dot;
    }
    shifted(a, a) -= z;
  }
  const ComplexMatrix g = invert(shifted);
  const ComplexMatrix r = column_resolvent(phi, {row}, z);

  Complex quadratic = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    Complex inner = 0.0;
    for (std::size_t k = 0; k < n; ++k) inner += r(j, k) * x[row * n + k];
    quadratic += x[row * n + j] * inner;
  }
  IdentityCheck out;
  out.lhs = 1.0 / g(row, row);
  out.rhs = -z - z * quadratic;
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

IdentityCheck verify_trace_relation(const SampleMatrix& phi, const std::vector<std::size_t>& removed,
                                    Complex z) {
  const ComplexMatrix r = column_resolvent(phi, removed, z);
  Complex trace_r = 0.0;
  for (std::size_t j = 0; j < r.size(); ++j) trace_r += r(j, j);
  std::vector<std::size_t> distinct = removed;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const double kept = static_cast<double>(phi.rows() - distinct.size());

  IdentityCheck out;
  out.lhs = minor_green_trace(phi, distinct, z) - trace_r;
  out.rhs = (static_cast<double>(phi.cols()) - kept) / z;
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

IdentityCheck verify_wald(const SampleMatrix& phi, const std::vector<std::size_t>& removed,
                          std::size_t j, Complex z) {
  if (j >= phi.cols()) throw_invalid("column index out of range");
  const ComplexMatrix r = column_resolvent(phi, removed, z);
  double row_norm = 0.0;
  for (std::size_t k = 0; k < r.size(); ++k) row_norm += std::norm(r(j, k));
  IdentityCheck out;
  out.lhs = row_norm;
  out.rhs = r(j, j).imag() / z.imag();
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

InterlacingCheck verify_interlacing(const SampleMatrix& phi, const std::vector<std::size_t>& removed,
                                    Complex z) {
  std::vector<std::size_t> distinct = removed;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  InterlacingCheck out;
  out.delta = std::abs(minor_green_trace(phi, distinct, z) - minor_green_trace(phi, {}, z));
  out.bound = static_cast<double>(distinct.size()) / z.imag();
  return out;
}

}  // namespace mpcode
