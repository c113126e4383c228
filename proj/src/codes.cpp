// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#include "mpcode/codes.hpp"

#include <bit>
#include <cstdio>
#include <unordered_set>
#include <utility>

#include <json.hpp>

#include "mpcode/error.hpp"
#include "mpcode/gf.hpp"

namespace mpcode {
namespace {

constexpr std::uint64_t kSubsetWorkLimit = 500'000'000;

std::uint64_t choose(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// Membership set over k-bit column values: a flat bitmap when it fits in
// 8 MiB, a hash set otherwise.
class ValueSet {
 public:
  explicit ValueSet(std::size_t dimension) {
    if (dimension <= 26) {
      bitmap_.assign((std::size_t{1} << dimension) / 64 + 1, 0);
    }
  }
  bool contains(std::uint64_t v) const {
    if (!bitmap_.empty()) return (bitmap_[v / 64] >> (v % 64)) & 1u;
    return hashed_.count(v) != 0;
  }
  // Returns false if v was already present.
  bool insert(std::uint64_t v) {
    if (!bitmap_.empty()) {
      const std::uint64_t bit = std::uint64_t{1} << (v % 64);
      if (bitmap_[v / 64] & bit) return false;
      bitmap_[v / 64] |= bit;
      return true;
    }
    return hashed_.insert(v).second;
  }

 private:
  std::vector<std::uint64_t> bitmap_;
  std::unordered_set<std::uint64_t> hashed_;
};

}  // namespace

std::size_t gf2_rank(std::vector<BitVector> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

LinearCode::LinearCode(std::string label, std::size_t length, std::vector<BitVector> generator_rows)
    : label_(std::move(label)), length_(length), rows_(std::move(generator_rows)) {
  if (rows_.empty()) throw_invalid("linear code needs at least one generator row");
  if (rows_.size() > 64) throw_invalid("dimension above 64 is not supported");
  if (rows_.size() > length_) throw_invalid("dimension exceeds length");
  for (const auto& row : rows_) {
    if (row.size() != length_) throw_invalid("generator row length mismatch");
  }

  echelon_ = rows_;
  echelon_messages_.resize(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) echelon_messages_[i] = std::uint64_t{1} << i;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < length_ && rank < echelon_.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < echelon_.size() && !echelon_[pivot].get(col)) ++pivot;
    if (pivot == echelon_.size()) continue;
    std::swap(echelon_[rank], echelon_[pivot]);
    std::swap(echelon_messages_[rank], echelon_messages_[pivot]);
    for (std::size_t r = 0; r < echelon_.size(); ++r) {
      if (r != rank && echelon_[r].get(col)) {
        echelon_[r] ^= echelon_[rank];
        echelon_messages_[r] ^= echelon_messages_[rank];
      }
    }
    pivots_.push_back(col);
    ++rank;
  }
  if (rank != rows_.size()) {
    throw Error(ErrorCode::kConstructionFailure,
                "generator of '" + label_ + "' has rank " + std::to_string(rank) + ", expected " +
                    std::to_string(rows_.size()));
  }

  columns_.assign(length_, 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < length_; ++j) {
      if (rows_[i].get(j)) columns_[j] |= std::uint64_t{1} << i;
    }
  }
}

BitVector LinearCode::encode(std::uint64_t message) const {
  BitVector word(length_);
  while (message != 0) {
    const int i = std::countr_zero(message);
    word ^= rows_[static_cast<std::size_t>(i)];
    message &= message - 1;
  }
  return word;
}

std::optional<std::uint64_t> LinearCode::message_of(const BitVector& word) const {
  if (word.size() != length_) return std::nullopt;
  BitVector rest = word;
  std::uint64_t message = 0;
  for (std::size_t i = 0; i < echelon_.size(); ++i) {
    if (rest.get(pivots_[i])) {
      rest ^= echelon_[i];
      message ^= echelon_messages_[i];
    }
  }
  if (!rest.is_zero()) return std::nullopt;
  return message;
}

LinearCode build_apn_code(int m, int exponent) {
  if (exponent < 2) throw_invalid("APN exponent must be at least 2");
  const FieldSpec field = default_field(m);
  const GfElement alpha = find_primitive(field);
  const std::size_t n = field.mask();
  const std::size_t k = 2 * static_cast<std::size_t>(m);

  std::vector<BitVector> rows(k, BitVector(n));
  GfElement point = 1;
  for (std::size_t j = 0; j < n; ++j) {
    const GfElement image = ff_pow(point, static_cast<std::uint64_t>(exponent), field);
    for (int b = 0; b < m; ++b) {
      if ((point >> b) & 1u) rows[static_cast<std::size_t>(b)].set(j, true);
      if ((image >> b) & 1u) rows[static_cast<std::size_t>(m + b)].set(j, true);
    }
    point = ff_mul(point, alpha, field);
  }

  std::string label = "apn-x" + std::to_string(exponent) + "-m" + std::to_string(m);
  if (exponent == 3) label = "apn-cube-m" + std::to_string(m);
  const std::size_t rank = gf2_rank(rows);
  if (rank != k) {
    throw Error(ErrorCode::kConstructionFailure,
                "H_f for " + label + " has rank " + std::to_string(rank) + " < " +
                    std::to_string(k));
  }
  return LinearCode(std::move(label), n, std::move(rows));
}

LinearCode build_rm1(int m) {
  if (m < kMinFieldDegree || m > kMaxFieldDegree) {
    throw_invalid("RM(1,m) supports 2 <= m <= 16");
  }
  const std::size_t n = std::size_t{1} << m;
  std::vector<BitVector> rows(static_cast<std::size_t>(m) + 1, BitVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    rows[0].set(j, true);
    for (int b = 0; b < m; ++b) {
      if ((j >> b) & 1u) rows[static_cast<std::size_t>(b) + 1].set(j, true);
    }
  }
  return LinearCode("rm1-m" + std::to_string(m), n, std::move(rows));
}

DualDistance dual_distance(const LinearCode& code, int cap) {
  if (cap < 1) throw_invalid("dual distance cap must be at least 1");
  if (cap > 6) throw_invalid("dual distance cap above 6 is not supported");
  const auto& cols = code.columns();
  const std::size_t n = cols.size();

  // w = 1: zero column.
  for (std::uint64_t c : cols) {
    if (c == 0) return {1, false};
  }
  if (cap < 2) return {2, true};

  // w = 2: repeated column.
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(n * 2);
  for (std::uint64_t c : cols) {
    if (!seen.insert(c).second) return {2, false};
  }
  if (cap < 3) return {3, true};

  // w = 3: a column equals the XOR of two others. Columns are distinct and
  // nonzero here, so c_i ^ c_j differs from both c_i and c_j.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (seen.count(cols[i] ^ cols[j]) != 0) return {3, false};
    }
  }
  if (cap < 4) return {4, true};

  // w = 4: two pairs with equal XOR. Sharing an index would force two equal
  // columns, already excluded, so any collision is index-disjoint.
  if (code.dimension() > 30 && choose(n, 2) > kSubsetWorkLimit / 10) {
    throw Error(ErrorCode::kLimitExceeded, "pairwise dual distance search too large");
  }
  ValueSet pairs(code.dimension());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!pairs.insert(cols[i] ^ cols[j])) return {4, false};
    }
  }
  if (cap < 5) return {5, true};

  if (code.dimension() > 30) {
    throw Error(ErrorCode::kLimitExceeded, "dual distance beyond 4 needs dimension <= 30");
  }
  if (choose(n, 3) > kSubsetWorkLimit) {
    throw Error(ErrorCode::kLimitExceeded, "dual distance beyond 4 is too expensive for length " +
                                               std::to_string(n));
  }

  // w = 5: a triple XOR equals a pair XOR. Any index overlap would reduce to
  // a dependency of weight <= 3.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t ij = cols[i] ^ cols[j];
      for (std::size_t l = j + 1; l < n; ++l) {
        if (pairs.contains(ij ^ cols[l])) return {5, false};
      }
    }
  }
  if (cap < 6) return {6, true};

  // w = 6: two triples with equal XOR; overlaps reduce to weight <= 4.
  ValueSet triples(code.dimension());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t ij = cols[i] ^ cols[j];
      for (std::size_t l = j + 1; l < n; ++l) {
        if (!triples.insert(ij ^ cols[l])) return {6, false};
      }
    }
  }
  return {7, true};
}

void for_each_codeword(const LinearCode& code,
                       const std::function<void(std::uint64_t, const BitVector&)>& visit) {
  const std::size_t k = code.dimension();
  if (k > kMaxEnumerationDimension) {
    throw Error(ErrorCode::kLimitExceeded,
                "codeword enumeration limited to dimension " + std::to_string(kMaxEnumerationDimension));
  }
  // Going from u to u + 1 flips bits 0..t where t = ctz(u + 1), so the
  // codeword changes by the XOR of generator rows 0..t.
  std::vector<BitVector> prefix_xor;
  BitVector acc(code.length());
  for (const auto& row : code.generator()) {
    acc ^= row;
    prefix_xor.push_back(acc);
  }
  BitVector word(code.length());
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t u = 0; u < total; ++u) {
    visit(u, word);
    if (u + 1 < total) word ^= prefix_xor[static_cast<std::size_t>(std::countr_zero(u + 1))];
  }
}

std::vector<BitVector> enumerate_codewords(const LinearCode& code) {
  std::vector<BitVector> out;
  for_each_codeword(code, [&](std::uint64_t, const BitVector& word) { out.push_back(word); });
  return out;
}

SignalRow psi_map(const BitVector& codeword) {
  SignalRow row;
  row.values.resize(codeword.size());
  for (std::size_t i = 0; i < codeword.size(); ++i) row.values[i] = codeword.get(i) ? -1 : 1;
  return row;
}

BitVector sample_codeword(const LinearCode& code, RandomStream& rng) {
  const std::size_t k = code.dimension();
  std::uint64_t message = rng();
  if (k < 64) message &= (std::uint64_t{1} << k) - 1;
  return code.encode(message);
}

SignalRow sample_signal_row(const LinearCode& code, RandomStream& rng) {
  return psi_map(sample_codeword(code, rng));
}

std::string code_descriptor_json(const LinearCode& code) {
  nlohmann::ordered_json j;
  j["label"] = code.label();
  j["n"] = code.length();
  j["k"] = code.dimension();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : code.generator()) {
    std::string hex;
    char buf[17];
    for (std::uint64_t w : row.words()) {
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(w));
      hex += buf;
    }
    rows.push_back(hex);
  }
  j["generator_rows_hex"] = rows;
  return j.dump(2);
}

}  // namespace mpcode
