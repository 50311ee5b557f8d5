// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LLSCOND_RANK2_HPP
#define LLSCOND_RANK2_HPP

#include <array>
#include <optional>

#include "linalg.hpp"

namespace llscond::rank2 {

using linalg::DenseMatrix;
using linalg::DenseVector;

/// The matrix u1 v1^t + u2 v2^t, kept as its four factors.
struct Rank2Outer {
  DenseVector u1;
  DenseVector v1;
  DenseVector u2;
  DenseVector v2;

  /// Throws DimensionMismatch unless len(u1) == len(u2) and len(v1) == len(v2).
  void validate() const;
  DenseMatrix materialize() const;
};

/// Coordinates of the rank-2 matrix in orthonormal bases (w1, w2) of the
/// u-span and (x1, x2) of the v-span:
///   u1 = alpha1 w1,  u2 = alpha2 w1 + beta w2,
///   v1 = gamma1 x1,  v2 = gamma2 x1 + delta x2,
/// with alpha1, beta, gamma1, delta >= 0. `core` is the 2x2 matrix C with
/// G = [w1 w2] C [x1 x2]^t and `gram` is M = C^t C, the representation of
/// G^t G in the (x1, x2) basis.
struct GramRepresentation {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double beta = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double delta = 0.0;
  std::array<std::array<double, 2>, 2> core{};
  std::array<std::array<double, 2>, 2> gram{};
  DenseVector w1, w2, x1, x2;  // w2 / x2 are zero when beta / delta vanish

  double trace() const noexcept { return gram[0][0] + gram[1][1]; }
  /// sqrt(det M) = |det C| = alpha1 gamma1 beta delta.
  double sqrt_det() const noexcept { return alpha1 * gamma1 * beta * delta; }
};

/// Gram-Schmidt reduction to the 2x2 representation. Returns nullopt when u1
/// or v1 is zero; callers then fall back to rank-1 formulas.
std::optional<GramRepresentation> gram_reduce(const Rank2Outer& t);

/// Sum of the singular values of u1 v1^t + u2 v2^t, via sqrt(tr M + 2 sqrt(det M)).
double rank2_nuclear_norm(const Rank2Outer& t);

/// Frobenius norm of u1 v1^t + u2 v2^t, via sqrt(tr M).
double rank2_frobenius_norm(const Rank2Outer& t);

/// The angle form of the nuclear norm,
///   sqrt(a^2 + b^2 + 2ab cos(theta_u - theta_v)),  a = |u1||v1|, b = |u2||v2|,
/// with the angles in [0, pi]. Agrees with rank2_nuclear_norm.
double rank2_nuclear_norm_angles(const Rank2Outer& t);

/// Cosine and sine of the angle in [0, pi] between two nonzero vectors. The
/// sine comes from the Gram-Schmidt remainder rather than sqrt(1 - cos^2).
struct AngleCosSin {
  double cos = 1.0;
  double sin = 0.0;
};
AngleCosSin angle_between(const DenseVector& a, const DenseVector& b);

/// The polar factor B of G = u1 v1^t + u2 v2^t (||B||_2 = 1 when G != 0,
/// tr(G^t B) = nuclear norm), in factored form B = P Q^t with P m x k and
/// Q n x k, k <= 2.
struct PolarFactor {
  std::vector<DenseVector> left;
  std::vector<DenseVector> right;

  DenseMatrix materialize(std::size_t m, std::size_t n) const;
  /// B^t y.
  DenseVector transpose_apply(const DenseVector& y) const;
  /// B z.
  DenseVector apply(const DenseVector& z) const;
};
PolarFactor polar_factor(const Rank2Outer& t);

}  // namespace llscond::rank2

#endif  // LLSCOND_RANK2_HPP
