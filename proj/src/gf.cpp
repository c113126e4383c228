// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#include "mpcode/gf.hpp"

#include <array>
#include <bit>
#include <string>
#include <vector>

#include "mpcode/error.hpp"

namespace mpcode {
namespace {

// Least irreducible polynomial of each degree, indexed by degree.
constexpr std::array<std::uint32_t, kMaxFieldDegree + 1> kDefaultModuli = {
    0,      0,      0x7,    0xb,    0x13,   0x25,   0x43,   0x83,    0x11b,
    0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003, 0x1002b,
};

int degree_of(std::uint64_t poly) {
  return poly == 0 ? -1 : 63 - std::countl_zero(poly);
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t f) {
  const int df = degree_of(f);
  for (int da = degree_of(a); da >= df; da = degree_of(a)) {
    a ^= f << (da - df);
  }
  return a;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
  std::uint64_t r = 0;
  a = poly_mod(a, f);
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a = poly_mod(a << 1, f);
  }
  return r;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

void check_degree(int degree) {
  if (degree < kMinFieldDegree || degree > kMaxFieldDegree) {
    throw_invalid("field degree " + std::to_string(degree) +
                  " outside supported range [2, 16]");
  }
}

}  // namespace

std::uint32_t default_modulus(int degree) {
  check_degree(degree);
  return kDefaultModuli[static_cast<std::size_t>(degree)];
}

FieldSpec default_field(int degree) {
  return FieldSpec{degree, default_modulus(degree)};
}

FieldSpec make_field(int degree, std::uint32_t modulus) {
  check_degree(degree);
  if (degree_of(modulus) != degree) {
    throw_invalid("modulus degree does not match field degree");
  }
  if (!is_irreducible(modulus)) {
    throw_invalid("modulus is not irreducible over GF(2)");
  }
  return FieldSpec{degree, modulus};
}

bool is_irreducible(std::uint32_t poly) {
  const int m = degree_of(poly);
  if (m < 1) return false;
  if (m == 1) return true;
  // x^(2^i) mod f, computed by repeated squaring.
  std::uint64_t x_pow = 0b10;
  for (int i = 1; i <= m / 2; ++i) {
    x_pow = poly_mulmod(x_pow, x_pow, poly);
    if (poly_gcd(poly, x_pow ^ 0b10) != 1) return false;
  }
  return true;
}

GfElement ff_mul(GfElement a, GfElement b, const FieldSpec& spec) {
  const GfElement top = GfElement{1} << spec.degree;
  GfElement r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= spec.modulus;
  }
  return r;
}

GfElement ff_pow(GfElement a, std::uint64_t e, const FieldSpec& spec) {
  GfElement result = 1;
  while (e != 0) {
    if (e & 1) result = ff_mul(result, a, spec);
    a = ff_mul(a, a, spec);
    e >>= 1;
  }
  return result;
}

std::uint64_t multiplicative_order(GfElement a, const FieldSpec& spec) {
  if (a == 0 || a > spec.mask()) throw_invalid("order of zero or out-of-range element");
  std::uint64_t order = spec.mask();
  for (std::uint64_t q : prime_factors(spec.mask())) {
    while (order % q == 0 && ff_pow(a, order / q, spec) == 1) order /= q;
  }
  return order;
}

GfElement find_primitive(const FieldSpec& spec) {
  check_degree(spec.degree);
  if (degree_of(spec.modulus) != spec.degree || !is_irreducible(spec.modulus)) {
    throw_invalid("invalid field spec: modulus is not irreducible");
  }
  const std::uint64_t group = spec.mask();
  const auto factors = prime_factors(group);
  for (GfElement g = 2; g <= spec.mask(); ++g) {
    bool primitive = true;
    for (std::uint64_t q : factors) {
      if (ff_pow(g, group / q, spec) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  // m = 2..16 always has a generator; 1 is the generator only when 2^m - 1 = 1.
  throw Error(ErrorCode::kNumericalFailure, "no primitive element found");
}

}  // namespace mpcode
