// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "mpcode/error.hpp"
#include "mpcode/gf.hpp"
#include "oracles.hpp"

using namespace mpcode;

TEST_CASE("ff_add is xor") {
  CHECK(ff_add(0b101, 0b011) == 0b110);
  CHECK(ff_add(0b1101, 0b1101) == 0);
  CHECK(ff_add(0, 0b111) == 0b111);
}

TEST_CASE("ff_mul small cases") {
  const FieldSpec f3 = make_field(3, 0b1011);
  CHECK(ff_mul(0b010, 0b100, f3) == 0b011);
  CHECK(ff_mul(0b010, 0b100, f3) == oracle::gf_mul(0b010, 0b100, 0b1011));
  for (GfElement e = 0; e < 8; ++e) {
    CHECK(ff_mul(1, e, f3) == e);
    CHECK(ff_mul(0, e, f3) == 0);
  }
}

TEST_CASE("ff_mul matches schoolbook multiplication") {
  for (int m = 2; m <= 8; ++m) {
    const FieldSpec f = default_field(m);
    for (GfElement a = 0; a < f.order(); ++a) {
      for (GfElement b = 0; b < f.order(); ++b) {
        REQUIRE(ff_mul(a, b, f) == oracle::gf_mul(a, b, f.modulus));
      }
    }
  }
  const FieldSpec f16 = default_field(16);
  for (GfElement a = 1; a < f16.order(); a += 977) {
    for (GfElement b = 3; b < f16.order(); b += 1231) {
      REQUIRE(ff_mul(a, b, f16) == oracle::gf_mul(a, b, f16.modulus));
    }
  }
}

TEST_CASE("ff_pow") {
  const FieldSpec f3 = make_field(3, 0b1011);
  CHECK(ff_pow(0b010, 7, f3) == 1);
  GfElement acc = 1;
  for (int i = 0; i < 7; ++i) acc = ff_mul(acc, 0b010, f3);
  CHECK(acc == 1);
  for (GfElement a = 0; a < 8; ++a) CHECK(ff_pow(a, 1, f3) == a);
  CHECK(ff_pow(1, 1000000000ULL, f3) == 1);
  CHECK(ff_pow(0, 0, f3) == 1);
  CHECK(ff_pow(0, 5, f3) == 0);
}

TEST_CASE("Lagrange: a^(2^m - 1) = 1 for every nonzero a, m <= 8") {
  for (int m = 2; m <= 8; ++m) {
    const FieldSpec f = default_field(m);
    for (GfElement a = 1; a < f.order(); ++a) REQUIRE(ff_pow(a, f.mask(), f) == 1);
  }
}

TEST_CASE("Frobenius is additive, m <= 6") {
  for (int m = 2; m <= 6; ++m) {
    const FieldSpec f = default_field(m);
    for (GfElement a = 0; a < f.order(); ++a) {
      for (GfElement b = 0; b < f.order(); ++b) {
        const GfElement s = ff_add(a, b);
        REQUIRE(ff_mul(s, s, f) == ff_add(ff_mul(a, a, f), ff_mul(b, b, f)));
      }
    }
  }
}

TEST_CASE("find_primitive") {
  CHECK(find_primitive(make_field(3, 0b1011)) == 0b010);
  CHECK(find_primitive(make_field(2, 0b111)) == 0b10);
  CHECK(oracle::gf_order(0b010, 0b1011) == 7);

  const FieldSpec f5 = make_field(5, 0b100101);
  const GfElement g = find_primitive(f5);
  CHECK(ff_pow(g, 31, f5) == 1);
  CHECK(ff_pow(g, 1, f5) != 1);

  for (int m = 2; m <= 12; ++m) {
    const FieldSpec f = default_field(m);
    const GfElement p = find_primitive(f);
    CHECK(p == oracle::gf_primitive(m, f.modulus));
    CHECK(multiplicative_order(p, f) == f.mask());
  }
}

TEST_CASE("find_primitive order via prime divisors, all default fields") {
  for (int m = 2; m <= 16; ++m) {
    const FieldSpec f = default_field(m);
    const GfElement g = find_primitive(f);
    std::uint64_t rest = f.mask();
    for (std::uint64_t q = 2; rest > 1; ++q) {
      if (rest % q != 0) continue;
      while (rest % q == 0) rest /= q;
      CHECK(ff_pow(g, f.mask() / q, f) != 1);
    }
  }
}

TEST_CASE("default moduli are the least irreducible polynomials") {
  for (int m = 2; m <= 16; ++m) {
    const std::uint32_t mod = default_modulus(m);
    CHECK((mod >> m) == 1u);
    CHECK(is_irreducible(mod));
    for (std::uint32_t c = (1u << m) + 1; c < mod; c += 2) CHECK_FALSE(is_irreducible(c));
  }
}

TEST_CASE("field validation") {
  CHECK_THROWS_AS(default_field(1), Error);
  CHECK_THROWS_AS(default_field(17), Error);
  CHECK_THROWS_AS(make_field(3, 0b1111), Error);   // (x+1)^3
  CHECK_THROWS_AS(make_field(3, 0b111), Error);    // wrong degree
  CHECK_NOTHROW(make_field(3, 0b1101));
  CHECK(is_irreducible(0b111));
  CHECK_FALSE(is_irreducible(0b101));
}
