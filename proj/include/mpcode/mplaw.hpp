// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>

namespace mpcode {

/// Marchenko-Pastur law with ratio y in (0, 1), supported on [a, b] with
/// a = (1 - sqrt y)^2 and b = (1 + sqrt y)^2.
class MPParams {
 public:
  explicit MPParams(double y);

  double y() const { return y_; }
  double a() const { return a_; }
  double b() const { return b_; }

 private:
  double y_;
  double a_;
  double b_;
};

/// (1 / (2 pi x y)) sqrt((b - x)(x - a)) on [a, b], zero elsewhere.
double mp_density(double x, const MPParams& params);

/// Distribution function, absolute accuracy 1e-10. Integrates the density by
/// adaptive Simpson after x = a + (b - a) sin^2(theta), which turns the
/// square-root edges into a smooth integrand.
double mp_cdf(double x, const MPParams& params);

/// mp_cdf(x2) - mp_cdf(x1). Throws if x1 > x2.
double mp_interval(double x1, double x2, const MPParams& params);

/// Stieltjes transform. Both roots of yz s^2 + (y + z - 1) s + 1 = 0 are
/// formed and the one in the upper half-plane is returned.
std::complex<double> mp_stieltjes(std::complex<double> z, const MPParams& params);

/// |s - 1 / (1 - y - z - y z s)|: how far s is from solving the
/// self-consistent equation.
double fixed_point_residual(std::complex<double> s, std::complex<double> z, const MPParams& params);

/// Distance from E to the nearer spectral edge.
double kappa(double energy, const MPParams& params);

/// C delta / sqrt(kappa + eta + delta): the stability bound on
/// |u - s_MP| for a perturbed self-consistent equation.
double stability_bound(double delta, double energy, double eta, const MPParams& params, double c = 1.0);

struct SpectralDomainPoint {
  double energy = 0.0;
  double eta = 0.0;
  double tau = 0.05;
  std::uint64_t n = 0;
};

/// kappa(E) <= 1/tau and n^(-1/4 + tau) <= eta <= 1/tau.
bool in_spectral_domain(const SpectralDomainPoint& point, const MPParams& params);

}  // namespace mpcode
