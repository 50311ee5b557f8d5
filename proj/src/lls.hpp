// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LLSCOND_LLS_HPP
#define LLSCOND_LLS_HPP

#include "linalg.hpp"

namespace llscond::lls {

using linalg::DenseMatrix;
using linalg::DenseVector;

/// A full-column-rank least-squares problem min ||b - A u||_2 with the SVD of
/// A cached. Construct through build_problem().
class LlsProblem {
 public:
  const DenseMatrix& matrix() const noexcept { return a_; }
  const DenseVector& rhs() const noexcept { return b_; }
  const linalg::SvdResult& factorization() const noexcept { return svd_; }

  std::size_t rows() const noexcept { return a_.rows(); }
  std::size_t cols() const noexcept { return a_.cols(); }
  double sigma_max() const noexcept { return svd_.singular_values[0]; }
  double sigma_min() const noexcept { return svd_.singular_values[cols() - 1]; }
  double norm_b() const noexcept { return norm_b_; }

  /// (A^t A)^{-1} d through the cached SVD, V diag(1/sigma^2) V^t d.
  DenseVector gram_inverse_apply(const DenseVector& d) const;
  /// A (A^t A)^{-1} d = U diag(1/sigma) V^t d.
  DenseVector pseudo_transpose_apply(const DenseVector& d) const;
  /// (A^t A)^{-1} A^t y = V diag(1/sigma) U^t y, the Jacobian of x w.r.t. b.
  DenseVector pseudo_inverse_apply(const DenseVector& y) const;

  /// Right singular vector for sigma_min.
  DenseVector min_right_singular_vector() const;
  /// Left singular vector for sigma_min.
  DenseVector min_left_singular_vector() const;

 private:
  friend LlsProblem build_problem(DenseMatrix a, DenseVector b);
  LlsProblem(DenseMatrix a, DenseVector b, linalg::SvdResult svd, double norm_b)
      : a_(std::move(a)), b_(std::move(b)), svd_(std::move(svd)), norm_b_(norm_b) {}

  DenseMatrix a_;
  DenseVector b_;
  linalg::SvdResult svd_;
  double norm_b_ = 0.0;
};

struct LlsSolution {
  DenseVector x;
  DenseVector r;           // b - A x
  DenseVector projection;  // A x
};

/// Quantities governing the conditioning of x. The residual angle is kept as
/// tan and sec only.
struct Geometry {
  double kappa = 0.0;
  double nu = 0.0;
  double tan_theta = 0.0;
  double sec_theta = 0.0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double norm_x = 0.0;
  double norm_r = 0.0;
  double norm_b = 0.0;
  double norm_projection = 0.0;
};

/// Validates (A, b) and caches the SVD. Throws Error with DimensionMismatch
/// (m < n or len(b) != m), RankDeficient, ZeroRhs or NonFinite.
LlsProblem build_problem(DenseMatrix a, DenseVector b);

/// Householder QR solve. Throws ZeroSolution when ||x||_2 <= 1e-300.
LlsSolution solve(const LlsProblem& p);

Geometry geometry(const LlsProblem& p, const LlsSolution& s);

}  // namespace llscond::lls

#endif  // LLSCOND_LLS_HPP
