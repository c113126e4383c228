// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mpcode/bitvec.hpp"
#include "mpcode/rng.hpp"

namespace mpcode {

/// Largest dimension accepted by the exhaustive codeword enumerators.
inline constexpr std::size_t kMaxEnumerationDimension = 22;

/// Binary linear code given by a full-rank k x n generator matrix. Immutable.
class LinearCode {
 public:
  /// Throws kConstructionFailure when the rows are not linearly independent
  /// and kInvalidArgument on shape errors. Dimension is limited to 64.
  LinearCode(std::string label, std::size_t length, std::vector<BitVector> generator_rows);

  const std::string& label() const { return label_; }
  std::size_t length() const { return length_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<BitVector>& generator() const { return rows_; }

  /// Column j of the generator as a k-bit integer (bit i = row i).
  std::uint64_t column(std::size_t j) const { return columns_[j]; }
  const std::vector<std::uint64_t>& columns() const { return columns_; }

  /// u G, where bit i of the message selects generator row i.
  BitVector encode(std::uint64_t message) const;

  /// Inverse of encode(); empty when the word is not a codeword.
  std::optional<std::uint64_t> message_of(const BitVector& word) const;

 private:
  std::string label_;
  std::size_t length_;
  std::vector<BitVector> rows_;
  std::vector<std::uint64_t> columns_;
  // Reduced row-echelon basis with pivot columns; echelon_messages_[i] is the
  // message encoding echelon_[i].
  std::vector<BitVector> echelon_;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint64_t> echelon_messages_;
};

/// Rank over GF(2).
std::size_t gf2_rank(std::vector<BitVector> rows);

/// Code C_f from H_f = [alpha^j ; f(alpha^j)], f(x) = x^exponent, over
/// GF(2^m) with the default modulus and its least primitive element.
/// Length 2^m - 1, dimension 2m. Throws kConstructionFailure (message carries
/// the achieved rank) when the stacked rows are rank deficient.
LinearCode build_apn_code(int m, int exponent);

/// First-order Reed-Muller code RM(1, m): all-ones row plus the m coordinate
/// bit rows; column j carries the bits of j. Length 2^m, dimension m + 1.
LinearCode build_rm1(int m);

struct DualDistance {
  int value = 0;
  bool lower_bound = false;  // true: d >= value (no dependency up to value-1)

  friend bool operator==(const DualDistance&, const DualDistance&) = default;
};

/// Smallest w <= cap such that some w generator columns are linearly
/// dependent, or {cap + 1, lower_bound} if there is none. Supports cap <= 6;
/// weights 5 and 6 require dimension <= 30 and throw kLimitExceeded when the
/// subset search would exceed ~2e9 steps.
DualDistance dual_distance(const LinearCode& code, int cap);

/// Calls visit(message, codeword) for all 2^k messages in counting order
/// 0, 1, ..., 2^k - 1. Throws kLimitExceeded above kMaxEnumerationDimension.
void for_each_codeword(const LinearCode& code,
                       const std::function<void(std::uint64_t, const BitVector&)>& visit);

/// All codewords in the order of for_each_codeword().
std::vector<BitVector> enumerate_codewords(const LinearCode& code);

/// A row of +1/-1 entries.
struct SignalRow {
  std::vector<std::int8_t> values;
};

/// Entrywise 0 -> +1, 1 -> -1.
SignalRow psi_map(const BitVector& codeword);

/// Uniform codeword: k message bits from the low bits of one 64-bit draw.
BitVector sample_codeword(const LinearCode& code, RandomStream& rng);

SignalRow sample_signal_row(const LinearCode& code, RandomStream& rng);

/// JSON descriptor {label, n, k, generator_rows_hex}. Each row is hex of its
/// packed words, least significant word first, 16 digits per word.
std::string code_descriptor_json(const LinearCode& code);

}  // namespace mpcode
