// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Seed derivation. Every random stream in the library is a std::mt19937_64
// (bit-exact across standard libraries) whose seed comes from mix_seed().
//
//   splitmix64(x):
//     z = x + 0x9E3779B97F4A7C15
//     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//     return z ^ (z >> 31)
//
//   mix_seed(parent, index) = splitmix64(parent ^ splitmix64(index))
//
// Row l of a sample matrix built with master seed s uses mix_seed(s, l).
// Trial t of an experiment at field degree m uses mix_seed(mix_seed(s, m), t).

#include <cstdint>
#include <random>

namespace mpcode {

using RandomStream = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t parent, std::uint64_t index) {
  return splitmix64(parent ^ splitmix64(index));
}

inline RandomStream make_stream(std::uint64_t seed) { return RandomStream(seed); }

}  // namespace mpcode
