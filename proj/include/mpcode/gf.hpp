// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Arithmetic in GF(2^m), 2 <= m <= 16. Elements are bitmasks of polynomial
// coefficients in the basis {1, x, ..., x^(m-1)}: bit i holds the coefficient
// of x^i.

#include <cstdint>

namespace mpcode {

using GfElement = std::uint32_t;

inline constexpr int kMinFieldDegree = 2;
inline constexpr int kMaxFieldDegree = 16;

struct FieldSpec {
  int degree = 0;
  std::uint32_t modulus = 0;  // bit `degree` always set

  GfElement order() const { return GfElement{1} << degree; }
  GfElement mask() const { return order() - 1; }
};

/// Field of degree m with the lexicographically least irreducible modulus.
FieldSpec default_field(int degree);

/// Field with a caller-supplied modulus; throws if it is not an irreducible
/// polynomial of the given degree.
FieldSpec make_field(int degree, std::uint32_t modulus);

/// Table entry used by default_field().
std::uint32_t default_modulus(int degree);

/// Ben-Or test: gcd(x^(2^i) - x mod f, f) = 1 for every i <= deg(f)/2.
bool is_irreducible(std::uint32_t poly);

constexpr GfElement ff_add(GfElement a, GfElement b) { return a ^ b; }

GfElement ff_mul(GfElement a, GfElement b, const FieldSpec& spec);

/// a^e by square-and-multiply. 0^0 is defined as 1.
GfElement ff_pow(GfElement a, std::uint64_t e, const FieldSpec& spec);

/// Order of a nonzero element in the multiplicative group.
std::uint64_t multiplicative_order(GfElement a, const FieldSpec& spec);

/// Smallest bitmask whose multiplicative order is 2^m - 1.
GfElement find_primitive(const FieldSpec& spec);

}  // namespace mpcode
