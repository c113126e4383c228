// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#include "mpcode/bitvec.hpp"

#include "mpcode/error.hpp"

namespace mpcode {

BitVector BitVector::from_string(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw_invalid("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

std::string BitVector::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

}  // namespace mpcode
