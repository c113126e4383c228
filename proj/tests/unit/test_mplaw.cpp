// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "mpcode/error.hpp"
#include "mpcode/mplaw.hpp"
#include "oracles.hpp"

using namespace mpcode;
using Complex = std::complex<double>;

TEST_CASE("MPParams") {
  for (double y : {0.1, 0.5, 0.9}) {
    const MPParams mp(y);
    CHECK(mp.a() > 0);
    CHECK(mp.a() < 1);
    CHECK(mp.b() > 1);
    CHECK(mp.b() < 4);
    CHECK(std::abs(mp.a() * mp.b() - (1 - y) * (1 - y)) < 1e-15);
  }
  CHECK_THROWS_AS(MPParams(0.0), Error);
  CHECK_THROWS_AS(MPParams(1.0), Error);
  CHECK_THROWS_AS(MPParams(std::nan("")), Error);
}

TEST_CASE("mp_density") {
  const MPParams mp(0.5);
  CHECK(mp_density(mp.a() - 0.01, mp) == 0.0);
  CHECK(mp_density(mp.b() + 0.01, mp) == 0.0);
  CHECK(mp_density(mp.a(), mp) == 0.0);
  CHECK(mp_density(mp.b(), mp) == 0.0);
  CHECK(mp_density(-3.0, mp) == 0.0);
  for (double x = mp.a() + 0.05; x < mp.b(); x += 0.1) {
    CHECK(mp_density(x, mp) == doctest::Approx(oracle::mp_density(x, 0.5)).epsilon(1e-14));
  }
}

TEST_CASE("density integrates to one") {
  for (double y : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const MPParams mp(y);
    const double mass = oracle::mp_integral([](double) { return 1.0; }, y, mp.b(), 200000);
    CHECK(std::abs(mass - 1.0) < 1e-8);
    CHECK(std::abs(mp_interval(mp.a(), mp.b(), mp) - 1.0) < 1e-8);
  }
}

TEST_CASE("mp_cdf") {
  const MPParams mp(0.5);
  CHECK(mp_cdf(mp.a(), mp) == 0.0);
  CHECK(mp_cdf(mp.b(), mp) == 1.0);
  CHECK(mp_cdf(-1.0, mp) == 0.0);
  CHECK(mp_cdf(10.0, mp) == 1.0);
  const double reference =
      oracle::trapezoid([](double x) { return oracle::mp_density(x, 0.5); }, mp.a(), 1.0, 10000000);
  CHECK(std::abs(mp_cdf(1.0, mp) - reference) < 1e-8);
  for (double y : {0.1, 0.3, 0.9}) {
    const MPParams q(y);
    for (double t : {0.1, 0.37, 0.5, 0.81, 0.99}) {
      const double x = q.a() + t * (q.b() - q.a());
      CHECK(std::abs(mp_cdf(x, q) - oracle::mp_integral([](double) { return 1.0; }, y, x, 200000)) < 1e-9);
    }
  }
}

TEST_CASE("mp_cdf is monotone") {
  const MPParams mp(0.3);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(mp.a() - 0.2, mp.b() + 0.2);
  for (int i = 0; i < 1000; ++i) {
    double x1 = u(rng);
    double x2 = u(rng);
    if (x1 > x2) std::swap(x1, x2);
    REQUIRE(mp_cdf(x1, mp) <= mp_cdf(x2, mp));
  }
}

TEST_CASE("mp_interval") {
  const MPParams mp(0.5);
  CHECK(std::abs(mp_interval(mp.a(), mp.b(), mp) - 1.0) < 1e-12);
  CHECK(mp_interval(1.2, 1.2, mp) == 0.0);
  CHECK(mp_interval(-5.0, mp.a(), mp) == 0.0);
  CHECK_THROWS_AS(mp_interval(2.0, 1.0, mp), Error);
}

TEST_CASE("mp_stieltjes solves the self-consistent equation on S_tau") {
  const double tau = 0.05;
  const std::uint64_t n = 10000;
  std::mt19937_64 rng(1);
  for (double y : {0.2, 0.5, 0.8}) {
    const MPParams mp(y);
    const double eta_lo = std::pow(static_cast<double>(n), -0.25 + tau);
    std::uniform_real_distribution<double> ue(mp.a() - 2, mp.b() + 2);
    std::uniform_real_distribution<double> ulog(std::log(eta_lo), std::log(1 / tau));
    for (int i = 0; i < 200; ++i) {
      const SpectralDomainPoint pt{ue(rng), std::exp(ulog(rng)), tau, n};
      REQUIRE(in_spectral_domain(pt, mp));
      const Complex z(pt.energy, pt.eta);
      const Complex s = mp_stieltjes(z, mp);
      CHECK(s.imag() > 0);
      CHECK(fixed_point_residual(s, z, mp) < 1e-12);
    }
  }
}

TEST_CASE("Im mp_stieltjes > 0 across the upper half-plane") {
  const MPParams mp(0.4);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> ue(-10, 10);
  std::uniform_real_distribution<double> ueta(-8, 2);
  for (int i = 0; i < 1000; ++i) {
    const Complex z(ue(rng), std::pow(10.0, ueta(rng)));
    REQUIRE(mp_stieltjes(z, mp).imag() > 0);
  }
  CHECK_THROWS_AS(mp_stieltjes(Complex(1, 0), mp), Error);
  CHECK_THROWS_AS(mp_stieltjes(Complex(1, -1), mp), Error);
}

TEST_CASE("mp_stieltjes matches direct quadrature away from the support") {
  const double y = 0.5;
  const MPParams mp(y);
  for (double e : {mp.b() + 1.0, mp.a() - 0.1, -2.0}) {
    const Complex z(e, 1e-6);
    const Complex s = mp_stieltjes(z, mp);
    const double re = oracle::mp_integral([&](double x) { return 1.0 / (x - e); }, y, mp.b(), 200000);
    CHECK(std::abs(s.real() - re) < 1e-6);
    CHECK(std::abs(s.imag()) < 1e-5);
  }
  // general z, both parts
  const Complex z(1.1, 0.3);
  const Complex s = mp_stieltjes(z, mp);
  const double re = oracle::mp_integral([&](double x) { return std::real(1.0 / (x - z)); }, y, mp.b(), 200000);
  const double im = oracle::mp_integral([&](double x) { return std::imag(1.0 / (x - z)); }, y, mp.b(), 200000);
  CHECK(std::abs(s - Complex(re, im)) < 1e-9);
}

TEST_CASE("mp_stieltjes large-eta asymptotics") {
  const MPParams mp(0.5);
  const Complex z(0.5, 1e6);
  CHECK(std::abs(mp_stieltjes(z, mp) - (-1.0 / z)) < 1e-11);
}

TEST_CASE("Stieltjes inversion recovers interval mass") {
  const MPParams mp(0.5);
  const double eta = 1e-4;
  const double x1 = mp.a();
  const double x2 = 0.5 * (mp.a() + mp.b());
  const double integral =
      oracle::simpson([&](double e) { return mp_stieltjes(Complex(e, eta), mp).imag(); }, x1, x2, 400000) / M_PI;
  CHECK(std::abs(integral - mp_interval(x1, x2, mp)) < 1e-3);
}

TEST_CASE("kappa") {
  const MPParams mp(0.5);
  CHECK(kappa(mp.a(), mp) == 0.0);
  CHECK(std::abs(kappa(0.5 * (mp.a() + mp.b()), mp) - 0.5 * (mp.b() - mp.a())) < 1e-15);
  CHECK(std::abs(kappa(mp.b() + 1.0, mp) - 1.0) < 1e-15);
}

TEST_CASE("stability_bound") {
  const MPParams mp(0.5);
  const double e = mp.a();
  CHECK(std::abs(stability_bound(1.0, e, 0.0, mp) - 1.0) < 1e-15);
  CHECK(stability_bound(1e-12, 1.0, 0.1, mp) < 1e-10);
  CHECK(stability_bound(0.3, 1.0, 0.1, mp, 2.0) == doctest::Approx(2 * stability_bound(0.3, 1.0, 0.1, mp)));
  CHECK_THROWS_AS(stability_bound(0.0, 1.0, 0.1, mp), Error);
  CHECK_THROWS_AS(stability_bound(0.1, 1.0, 0.1, mp, 0.0), Error);
}

TEST_CASE("spectral domain membership") {
  const MPParams mp(0.5);
  CHECK(in_spectral_domain({1.0, 1.0, 0.05, 10000}, mp));
  CHECK_FALSE(in_spectral_domain({1.0, 0.01, 0.05, 10000}, mp));   // eta below n^(-1/4 + tau)
  CHECK_FALSE(in_spectral_domain({1.0, 25.0, 0.05, 10000}, mp));   // eta above 1/tau
  CHECK_FALSE(in_spectral_domain({mp.b() + 30, 1.0, 0.05, 10000}, mp));
}
