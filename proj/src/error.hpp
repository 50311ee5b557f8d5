// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LLSCOND_ERROR_HPP
#define LLSCOND_ERROR_HPP

#include <stdexcept>
#include <string>

namespace llscond {

enum class ErrorCode {
  InvalidArgument,
  Io,
  Parse,
  DimensionMismatch,
  NonFinite,
  RankDeficient,
  ZeroRhs,
  ZeroSolution,
  FactorizationFailure,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code) noexcept;

}  // namespace llscond

#endif  // LLSCOND_ERROR_HPP
