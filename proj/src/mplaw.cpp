// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#include "mpcode/mplaw.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mpcode/error.hpp"

namespace mpcode {
namespace {

constexpr double kCdfTolerance = 1e-10;
constexpr int kMaxSimpsonDepth = 50;

// Density pushed through x = a + (b - a) sin^2 theta, theta in [0, pi/2].
double theta_integrand(double theta, const MPParams& mp) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double width = mp.b() - mp.a();
  const double x = mp.a() + width * s * s;
  return width * width * 2.0 * s * s * c * c / (2.0 * std::numbers::pi * x * mp.y());
}

double simpson(double fa, double fm, double fb, double lo, double hi) {
  return (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const MPParams& mp, double lo, double hi, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  const double mid = 0.5 * (lo + hi);
  const double left_mid = 0.5 * (lo + mid);
  const double right_mid = 0.5 * (mid + hi);
  const double flm = theta_integrand(left_mid, mp);
  const double frm = theta_integrand(right_mid, mp);
  const double left = simpson(fa, flm, fm, lo, mid);
  const double right = simpson(fm, frm, fb, mid, hi);
  const double diff = left + right - whole;
  if (depth <= 0 || std::fabs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
  return adaptive_simpson(mp, lo, mid, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(mp, mid, hi, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

MPParams::MPParams(double y) : y_(y) {
  if (!(y > 0.0 && y < 1.0)) throw_invalid("Marchenko-Pastur ratio must lie in (0, 1)");
  const double r = std::sqrt(y);
  a_ = (1.0 - r) * (1.0 - r);
  b_ = (1.0 + r) * (1.0 + r);
}

double mp_density(double x, const MPParams& mp) {
  if (x <= mp.a() || x >= mp.b()) return 0.0;
  return std::sqrt((mp.b() - x) * (x - mp.a())) / (2.0 * std::numbers::pi * x * mp.y());
}

double mp_cdf(double x, const MPParams& mp) {
  if (x <= mp.a()) return 0.0;
  if (x >= mp.b()) return 1.0;
  const double theta = std::asin(std::sqrt((x - mp.a()) / (mp.b() - mp.a())));
  const double fa = theta_integrand(0.0, mp);
  const double fm = theta_integrand(0.5 * theta, mp);
  const double fb = theta_integrand(theta, mp);
  const double value = adaptive_simpson(mp, 0.0, theta, fa, fm, fb, simpson(fa, fm, fb, 0.0, theta),
                                        kCdfTolerance, kMaxSimpsonDepth);
  return std::clamp(value, 0.0, 1.0);
}

double mp_interval(double x1, double x2, const MPParams& mp) {
  if (x1 > x2) throw_invalid("interval endpoints out of order");
  return std::max(0.0, mp_cdf(x2, mp) - mp_cdf(x1, mp));
}

std::complex<double> mp_stieltjes(std::complex<double> z, const MPParams& mp) {
  if (!(z.imag() > 0.0)) throw_invalid("Stieltjes transform needs Im z > 0");
  const double y = mp.y();
  const std::complex<double> lin = y + z - 1.0;
  const std::complex<double> root = std::sqrt(lin * lin - 4.0 * y * z);
  const std::complex<double> first = -(lin - root) / (2.0 * y * z);
  const std::complex<double> second = -(lin + root) / (2.0 * y * z);
  return first.imag() > second.imag() ? first : second;
}

double fixed_point_residual(std::complex<double> s, std::complex<double> z, const MPParams& mp) {
  const double y = mp.y();
  return std::abs(s - 1.0 / (1.0 - y - z - y * z * s));
}

double kappa(double energy, const MPParams& mp) {
  return std::min(std::fabs(energy - mp.a()), std::fabs(energy - mp.b()));
}

double stability_bound(double delta, double energy, double eta, const MPParams& mp, double c) {
  if (!(delta > 0.0) || !(eta >= 0.0) || !(c > 0.0)) {
    throw_invalid("stability bound needs delta > 0, eta >= 0 and c > 0");
  }
  return c * delta / std::sqrt(kappa(energy, mp) + eta + delta);
}

bool in_spectral_domain(const SpectralDomainPoint& point, const MPParams& mp) {
  if (!(point.tau > 0.0) || point.n == 0) return false;
  const double inv_tau = 1.0 / point.tau;
  const double floor = std::pow(static_cast<double>(point.n), -0.25 + point.tau);
  return kappa(point.energy, mp) <= inv_tau && point.eta >= floor && point.eta <= inv_tau;
}

}  // namespace mpcode
