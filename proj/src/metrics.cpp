// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#include "mpcode/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "mpcode/error.hpp"
#include "mpcode/rng.hpp"
#include "parallel.hpp"

namespace mpcode {
namespace {

struct DeviationExtremes {
  double above = 0.0;  // sup (F_mu - F_MP), at least 0
  double below = 0.0;  // sup (F_MP - F_mu), at least 0
};

DeviationExtremes deviation_extremes(const ESD& esd, const MPParams& mp) {
  DeviationExtremes out;
  const auto& atoms = esd.atoms();
  const auto p = static_cast<double>(atoms.size());
  auto consider = [&](double f_mu, double f_mp) {
    out.above = std::max(out.above, f_mu - f_mp);
    out.below = std::max(out.below, f_mp - f_mu);
  };
  std::size_t i = 0;
  while (i < atoms.size()) {
    std::size_t j = i;
    while (j < atoms.size() && atoms[j] == atoms[i]) ++j;
    const double f_mp = mp_cdf(atoms[i], mp);
    consider(static_cast<double>(i) / p, f_mp);  // left limit
    consider(static_cast<double>(j) / p, f_mp);  // value at the atom
    i = j;
  }
  for (double edge : {mp.a(), mp.b()}) {
    consider(esd_cdf(esd, edge), mp_cdf(edge, mp));
  }
  return out;
}

}  // namespace

ESD::ESD(std::vector<double> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw_invalid("spectral distribution needs at least one atom");
  std::sort(atoms_.begin(), atoms_.end());
}

double esd_cdf(const ESD& esd, double x) {
  const auto& atoms = esd.atoms();
  const auto count = std::upper_bound(atoms.begin(), atoms.end(), x) - atoms.begin();
  return static_cast<double>(count) / static_cast<double>(atoms.size());
}

double esd_cdf_left(const ESD& esd, double x) {
  const auto& atoms = esd.atoms();
  const auto count = std::lower_bound(atoms.begin(), atoms.end(), x) - atoms.begin();
  return static_cast<double>(count) / static_cast<double>(atoms.size());
}

double interval_sup_distance(const ESD& esd, const MPParams& params) {
  const auto ext = deviation_extremes(esd, params);
  return ext.above + ext.below;
}

double kolmogorov_distance(const ESD& esd, const MPParams& params) {
  const auto ext = deviation_extremes(esd, params);
  return std::max(ext.above, ext.below);
}

Complex empirical_stieltjes(const ESD& esd, Complex z) {
  if (!(z.imag() > 0.0)) throw_invalid("Stieltjes transform needs Im z > 0");
  Complex total = 0.0;
  for (double lambda : esd.atoms()) total += 1.0 / (lambda - z);
  return total / static_cast<double>(esd.size());
}

std::vector<Complex> sample_stieltjes_values(const RowSource& source, std::size_t p, Complex z,
                                             std::size_t trials, std::uint64_t master_seed,
                                             unsigned threads) {
  if (trials < 1) throw_invalid("at least one trial is required");
  if (!(z.imag() > 0.0)) throw_invalid("Stieltjes transform needs Im z > 0");
  std::vector<Complex> values(trials);
  detail::parallel_for(trials, threads, [&](std::size_t t) {
    const SampleMatrix phi = build_sample_matrix(source, p, mix_seed(master_seed, t));
    values[t] = empirical_stieltjes(ESD(spectrum_of(phi)), z);
  });
  return values;
}

TransformSample summarize_transform(Complex z, const std::vector<Complex>& values) {
  if (values.empty()) throw_invalid("no transform values to summarize");
  TransformSample out;
  out.z = z;
  out.trials = values.size();
  Complex sum = 0.0;
  for (const Complex& v : values) sum += v;
  out.value = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double var_re = 0.0;
    double var_im = 0.0;
    for (const Complex& v : values) {
      var_re += (v.real() - out.value.real()) * (v.real() - out.value.real());
      var_im += (v.imag() - out.value.imag()) * (v.imag() - out.value.imag());
    }
    const double denom = static_cast<double>(values.size() - 1);
    const double root_n = std::sqrt(static_cast<double>(values.size()));
    out.std_err_re = std::sqrt(var_re / denom) / root_n;
    out.std_err_im = std::sqrt(var_im / denom) / root_n;
    out.std_err = std::max(out.std_err_re, out.std_err_im);
  }
  return out;
}

TransformSample estimate_expected_stieltjes(const RowSource& source, std::size_t p, Complex z,
                                            std::size_t trials, std::uint64_t master_seed,
                                            unsigned threads) {
  return summarize_transform(z, sample_stieltjes_values(source, p, z, trials, master_seed, threads));
}

Complex delta_perturbation(Complex s, Complex z, const MPParams& params) {
  if (s == Complex(0.0, 0.0)) throw_invalid("Delta is undefined for s = 0");
  const double y = params.y();
  return 1.0 / s - (1.0 - y - z - y * z * s);
}

ExactRational ExactRational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw_invalid("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return ExactRational{num / g, den / g};
}

std::string ExactRational::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

bool abs_le(const ExactRational& q, const ExactRational& bound) {
  // |a/b| <= c/d  <=>  |a| d <= c b for positive b, d.
  __extension__ using Wide = __int128;
  const Wide lhs = static_cast<Wide>(q.num < 0 ? -q.num : q.num) * bound.den;
  const Wide rhs = static_cast<Wide>(bound.num) * q.den;
  return lhs <= rhs;
}

bool indices_pair_up(std::size_t j, std::size_t t, std::size_t k, std::size_t s) {
  std::array<std::size_t, 4> idx{j, t, k, s};
  std::sort(idx.begin(), idx.end());
  return idx[0] == idx[1] && idx[2] == idx[3];
}

MomentOracle::MomentOracle(const LinearCode& code)
    : length_(code.length()), codewords_(enumerate_codewords(code)) {}

std::int64_t MomentOracle::signed_sum(const std::vector<std::size_t>& indices) const {
  for (std::size_t i : indices) {
    if (i >= length_) throw_invalid("coordinate index out of range");
  }
  std::int64_t total = 0;
  for (const auto& c : codewords_) {
    bool parity = false;
    for (std::size_t i : indices) parity ^= c.get(i);
    total += parity ? -1 : 1;
  }
  return total;
}

ExactRational MomentOracle::pair(std::size_t j, std::size_t k) const {
  const auto n = static_cast<std::int64_t>(length_);
  const auto count = static_cast<std::int64_t>(codewords_.size());
  return ExactRational::make(signed_sum({j, k}), n * count);
}

ExactRational MomentOracle::quad(std::size_t j, std::size_t t, std::size_t k, std::size_t s) const {
  const auto n = static_cast<std::int64_t>(length_);
  const auto count = static_cast<std::int64_t>(codewords_.size());
  return ExactRational::make(signed_sum({j, t, k, s}), n * n * count);
}

ExactRational MomentOracle::character_sum(const BitVector& a) const {
  if (a.size() != length_) throw_invalid("vector length does not match the code");
  std::int64_t total = 0;
  for (const auto& c : codewords_) total += a.dot(c) ? -1 : 1;
  return ExactRational::make(total, static_cast<std::int64_t>(codewords_.size()));
}

ExactRational moment_pair_oracle(const LinearCode& code, std::size_t j, std::size_t k) {
  return MomentOracle(code).pair(j, k);
}

ExactRational moment_quad_oracle(const LinearCode& code, std::size_t j, std::size_t t, std::size_t k,
                                 std::size_t s) {
  return MomentOracle(code).quad(j, t, k, s);
}

ExactRational character_sum_oracle(const LinearCode& code, const BitVector& a) {
  return MomentOracle(code).character_sum(a);
}

bool in_dual(const LinearCode& code, const BitVector& a) {
  if (a.size() != code.length()) throw_invalid("vector length does not match the code");
  for (const auto& row : code.generator()) {
    if (row.dot(a)) return false;
  }
  return true;
}

}  // namespace mpcode
