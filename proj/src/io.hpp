// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LLSCOND_IO_HPP
#define LLSCOND_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "lls.hpp"

namespace llscond::io {

using linalg::DenseMatrix;
using linalg::DenseVector;

/// Parses a MatrixMarket (array or coordinate, real/integer general) or
/// RFC-4180 CSV matrix. A CSV first record containing a non-numeric field is
/// taken as the header. Errors are Error(Parse) with "source:line:column:".
DenseMatrix parse_matrix(std::string_view text, std::string_view source = "<input>");

/// Parses a right-hand side: one value per line, single-column CSV (header
/// optional) or a one-column MatrixMarket array.
DenseVector parse_vector(std::string_view text, std::string_view source = "<input>");

DenseMatrix read_matrix(const std::string& path);
DenseVector read_vector(const std::string& path);

/// Reads both files and validates the problem.
lls::LlsProblem ingest(const std::string& matrix_path, const std::string& rhs_path);

/// 17 significant digits, so every double reads back bit-identical.
std::string format_double(double v);

void write_matrix_market(std::ostream& out, const DenseMatrix& m);
void write_vector(std::ostream& out, const DenseVector& v);

}  // namespace llscond::io

#endif  // LLSCOND_IO_HPP
