// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#include "lls.hpp"

#include <string>

#include "error.hpp"

namespace llscond::lls {

namespace {

// V^t d, restricted to the n right singular vectors.
DenseVector right_coordinates(const linalg::SvdResult& f, const DenseVector& d) {
  return linalg::transpose_times(f.right_vectors, d);
}

DenseVector combine_right(const linalg::SvdResult& f, const DenseVector& coeffs) {
  return f.right_vectors * coeffs;
}

DenseVector combine_left(const linalg::SvdResult& f, const DenseVector& coeffs) {
  const std::size_t m = f.left_vectors.rows();
  DenseVector out(m);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    auto col = f.left_vectors.column(k);
    for (std::size_t i = 0; i < m; ++i) out[i] += coeffs[k] * col[i];
  }
  return out;
}

}  // namespace

DenseVector LlsProblem::gram_inverse_apply(const DenseVector& d) const {
  DenseVector c = right_coordinates(svd_, d);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double s = svd_.singular_values[k];
    c[k] /= s * s;
  }
  return combine_right(svd_, c);
}

DenseVector LlsProblem::pseudo_transpose_apply(const DenseVector& d) const {
  DenseVector c = right_coordinates(svd_, d);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] /= svd_.singular_values[k];
  return combine_left(svd_, c);
}

DenseVector LlsProblem::pseudo_inverse_apply(const DenseVector& y) const {
  if (y.size() != rows()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length must equal the row count");
  }
  DenseVector c(cols());
  for (std::size_t k = 0; k < cols(); ++k) {
    c[k] = linalg::dot(svd_.left_vectors.column(k), y.span()) / svd_.singular_values[k];
  }
  return combine_right(svd_, c);
}

DenseVector LlsProblem::min_right_singular_vector() const {
  return svd_.right_vectors.column_vector(cols() - 1);
}

DenseVector LlsProblem::min_left_singular_vector() const {
  return svd_.left_vectors.column_vector(cols() - 1);
}

LlsProblem build_problem(DenseMatrix a, DenseVector b) {
  if (a.rows() == 0 || a.cols() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "matrix must have at least one row and column");
  }
  if (a.rows() < a.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    "; an overdetermined problem needs rows >= cols");
  }
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "right-hand side has length " + std::to_string(b.size()) + " but the matrix has " +
                    std::to_string(a.rows()) + " rows");
  }
  const double norm_b = linalg::norm2(b);
  if (norm_b == 0.0) {
    throw Error(ErrorCode::ZeroRhs, "right-hand side is the zero vector, so the solution is zero");
  }
  linalg::SvdResult f = linalg::svd(a);
  const double smax = f.singular_values[0];
  const double smin = f.singular_values[a.cols() - 1];
  if (!(smin > linalg::kRankTolerance * smax)) {
    throw Error(ErrorCode::RankDeficient,
                "matrix does not have full column rank (sigma_min/sigma_max <= 1e-12); the "
                "least-squares solution is then not unique and small changes to the matrix can "
                "change it arbitrarily, so no finite condition number exists");
  }
  return LlsProblem(std::move(a), std::move(b), std::move(f), norm_b);
}

LlsSolution solve(const LlsProblem& p) {
  DenseVector x = linalg::householder_least_squares(p.matrix(), p.rhs());
  if (!(linalg::norm2(x) > 1e-300)) {
    throw Error(ErrorCode::ZeroSolution,
                "least-squares solution is zero; norms relative to x are undefined");
  }
  DenseVector ax = p.matrix() * x;
  DenseVector r = p.rhs() - ax;
  return LlsSolution{std::move(x), std::move(r), std::move(ax)};
}

Geometry geometry(const LlsProblem& p, const LlsSolution& s) {
  Geometry g;
  g.sigma_max = p.sigma_max();
  g.sigma_min = p.sigma_min();
  g.norm_x = linalg::norm2(s.x);
  g.norm_r = linalg::norm2(s.r);
  g.norm_b = p.norm_b();
  g.norm_projection = linalg::norm2(s.projection);
  g.kappa = g.sigma_max / g.sigma_min;
  g.nu = g.norm_projection / (g.norm_x * g.sigma_min);
  g.tan_theta = g.norm_r / g.norm_projection;
  g.sec_theta = g.norm_b / g.norm_projection;
  return g;
}

}  // namespace llscond::lls
