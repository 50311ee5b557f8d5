// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LLSCOND_LINALG_HPP
#define LLSCOND_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace llscond::linalg {

/// Dense real vector. Entries must be finite.
class DenseVector {
 public:
  DenseVector() = default;
  explicit DenseVector(std::size_t len, double fill = 0.0);
  explicit DenseVector(std::vector<double> entries);
  DenseVector(std::initializer_list<double> entries);

  std::size_t size() const noexcept { return data_.size(); }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  std::span<double> span() noexcept { return data_; }
  std::span<const double> span() const noexcept { return data_; }
  const std::vector<double>& values() const noexcept { return data_; }

  DenseVector& operator+=(const DenseVector& o);
  DenseVector& operator-=(const DenseVector& o);
  DenseVector& operator*=(double c);

 private:
  std::vector<double> data_;
};

DenseVector operator+(DenseVector a, const DenseVector& b);
DenseVector operator-(DenseVector a, const DenseVector& b);
DenseVector operator-(DenseVector a);
DenseVector operator*(double c, DenseVector a);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
inline double dot(const DenseVector& a, const DenseVector& b) { return dot(a.span(), b.span()); }
inline double norm2(const DenseVector& a) { return norm2(a.span()); }

/// Dense real matrix in column-major order, so vec(M) is the storage order.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of `col_major` (rows*cols entries, all finite).
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> col_major);

  static DenseMatrix identity(std::size_t n);
  /// "Identity" of shape rows x cols: ones on the leading diagonal.
  static DenseMatrix eye(std::size_t rows, std::size_t cols);
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static DenseMatrix outer(const DenseVector& u, const DenseVector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

  std::span<double> column(std::size_t j) { return {data_.data() + j * rows_, rows_}; }
  std::span<const double> column(std::size_t j) const { return {data_.data() + j * rows_, rows_}; }
  DenseVector column_vector(std::size_t j) const;

  std::span<const double> vec() const noexcept { return data_; }

  DenseMatrix transpose() const;
  double frobenius_norm() const;

  DenseMatrix& operator+=(const DenseMatrix& o);
  DenseMatrix& operator-=(const DenseMatrix& o);
  DenseMatrix& operator*=(double c);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator*(double c, DenseMatrix a);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseVector operator*(const DenseMatrix& a, const DenseVector& x);

/// a^t * y without forming the transpose.
DenseVector transpose_times(const DenseMatrix& a, const DenseVector& y);
/// tr(a^t b), the canonical pairing of two same-shape matrices.
double trace_inner(const DenseMatrix& a, const DenseMatrix& b);

struct SvdResult {
  DenseMatrix left_vectors;    // m x m, orthogonal
  DenseVector singular_values; // min(m, n), nonincreasing
  DenseMatrix right_vectors;   // n x n, orthogonal
};

/// Full singular value decomposition by one-sided Jacobi rotations.
///
/// Signs are normalized so that the largest-magnitude entry of every right
/// singular vector is positive (lowest index wins ties); the matching left
/// vector follows. Left vectors beyond min(m, n) are normalized the same way
/// on their own. Throws Error(FactorizationFailure) if the sweeps do not
/// converge.
SvdResult svd(const DenseMatrix& m);

/// Singular values only; same algorithm as svd().
DenseVector singular_values(const DenseMatrix& m);

double nuclear_norm_oracle(const DenseMatrix& m);
double spectral_norm(const DenseMatrix& m);

/// Threshold below which sigma_min / sigma_max counts as rank deficient.
inline constexpr double kRankTolerance = 1e-12;

/// Householder QR least-squares solve. Rejects rank-deficient A.
DenseVector qr_least_squares(const DenseMatrix& a, const DenseVector& b);

/// Same Householder solve without the rank check, for callers that already
/// hold the singular values of `a`.
DenseVector householder_least_squares(const DenseMatrix& a, const DenseVector& b);

}  // namespace llscond::linalg

#endif  // LLSCOND_LINALG_HPP
