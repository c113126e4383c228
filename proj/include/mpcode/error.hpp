// Copyright 2026 The mpcode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace mpcode {

/// Failure categories. The numeric values are shared with the C API status
/// codes, so they must not be renumbered.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kConstructionFailure = 2,
  kNumericalFailure = 3,
  kLimitExceeded = 4,
  kIoFailure = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, what);
}

}  // namespace mpcode
