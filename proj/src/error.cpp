// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#include "error.hpp"

namespace llscond {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Io: return "io";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::NonFinite: return "non_finite";
    case ErrorCode::RankDeficient: return "rank_deficient";
    case ErrorCode::ZeroRhs: return "zero_rhs";
    case ErrorCode::ZeroSolution: return "zero_solution";
    case ErrorCode::FactorizationFailure: return "factorization_failure";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace llscond
