// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0
//
// Random problem generators and reference computations for the tests. The
// references deliberately avoid the library's own algorithms: eigenvalues by
// two-sided Jacobi on Gram matrices, solves through Cholesky on the normal
// equations, spectral norms by power iteration.

#ifndef LLSCOND_TESTS_SUPPORT_HPP
#define LLSCOND_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "lls.hpp"

namespace llscond::testing {

using linalg::DenseMatrix;
using linalg::DenseVector;

inline double rel_err(double got, double want) {
  const double d = std::abs(got - want);
  return want == 0.0 ? d : d / std::abs(want);
}

inline DenseVector normal_vector(std::size_t n, std::mt19937_64& gen) {
  std::normal_distribution<double> nd(0.0, 1.0);
  DenseVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = nd(gen);
  return v;
}

inline DenseVector unit_vector(std::size_t n, std::mt19937_64& gen) {
  DenseVector v = normal_vector(n, gen);
  const double nrm = linalg::norm2(v);
  return (1.0 / nrm) * std::move(v);
}

inline DenseMatrix normal_matrix(std::size_t m, std::size_t n, std::mt19937_64& gen) {
  std::normal_distribution<double> nd(0.0, 1.0);
  DenseMatrix a(m, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) a(i, j) = nd(gen);
  return a;
}

// First k columns of a random orthogonal matrix, by modified Gram-Schmidt
// applied twice.
inline DenseMatrix random_orthonormal(std::size_t m, std::size_t k, std::mt19937_64& gen) {
  DenseMatrix q = normal_matrix(m, k, gen);
  for (std::size_t j = 0; j < k; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        const double d = linalg::dot(q.column(i), q.column(j));
        for (std::size_t t = 0; t < m; ++t) q(t, j) -= d * q(t, i);
      }
    }
    const double nrm = linalg::norm2(q.column(j));
    for (std::size_t t = 0; t < m; ++t) q(t, j) /= nrm;
  }
  return q;
}

// A = U diag(s) V^t with singular values log-spaced from 1 down to 1/kappa.
inline DenseMatrix matrix_with_condition(std::size_t m, std::size_t n, double kappa,
                                         std::mt19937_64& gen) {
  const DenseMatrix u = random_orthonormal(m, n, gen);
  const DenseMatrix v = random_orthonormal(n, n, gen);
  DenseMatrix us = u;
  for (std::size_t j = 0; j < n; ++j) {
    const double t = n == 1 ? 0.0 : static_cast<double>(j) / static_cast<double>(n - 1);
    const double s = std::pow(kappa, -t);
    for (std::size_t i = 0; i < m; ++i) us(i, j) *= s;
  }
  return us * v.transpose();
}

// Right-hand side A x0 + rho * (unit vector orthogonal to range(A)) * |A x0|.
inline DenseVector rhs_with_residual(const DenseMatrix& a, double rho, std::mt19937_64& gen) {
  const std::size_t m = a.rows();
  DenseVector x0 = normal_vector(a.cols(), gen);
  DenseVector ax = a * x0;
  if (m == a.cols() || rho == 0.0) return ax;
  // Component of a random vector orthogonal to range(A).
  DenseVector z = normal_vector(m, gen);
  for (int pass = 0; pass < 2; ++pass) {
    const DenseVector c = linalg::householder_least_squares(a, z);
    z -= a * c;
  }
  const double nz = linalg::norm2(z);
  const double c = rho * linalg::norm2(ax) / nz;
  return ax + c * std::move(z);
}

struct RandomProblem {
  DenseMatrix a;
  DenseVector b;
  double kappa = 1.0;
};

// m in [n, max_m], n in [1, max_n], log10 kappa uniform in [0, log10 max_kappa],
// residual ratio log-uniform in [1e-3, 1e1] or zero with probability 0.1.
inline RandomProblem random_problem(std::mt19937_64& gen, std::size_t max_m, std::size_t max_n,
                                    double max_kappa) {
  std::uniform_int_distribution<std::size_t> nd(1, max_n);
  const std::size_t n = nd(gen);
  std::uniform_int_distribution<std::size_t> md(n, std::max(n, max_m));
  const std::size_t m = md(gen);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double kappa = std::pow(max_kappa, u01(gen));
  const double rho = u01(gen) < 0.1 ? 0.0 : std::pow(10.0, -3.0 + 4.0 * u01(gen));
  RandomProblem p;
  p.kappa = n == 1 ? 1.0 : kappa;
  p.a = matrix_with_condition(m, n, kappa, gen);
  p.b = rhs_with_residual(p.a, rho, gen);
  return p;
}

// Eigenvalues of a symmetric matrix, cyclic two-sided Jacobi, descending.
inline std::vector<double> symmetric_eigenvalues(DenseMatrix s) {
  const std::size_t n = s.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += s(p, q) * s(p, q);
    if (off < 1e-30 * std::max(1.0, s.frobenius_norm() * s.frobenius_norm())) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (s(p, q) == 0.0) continue;
        const double theta = (s(q, q) - s(p, p)) / (2.0 * s(p, q));
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double skp = s(k, p), skq = s(k, q);
          s(k, p) = c * skp - sn * skq;
          s(k, q) = sn * skp + c * skq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double spk = s(p, k), sqk = s(q, k);
          s(p, k) = c * spk - sn * sqk;
          s(q, k) = sn * spk + c * sqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = s(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

// Singular values from the eigenvalues of the smaller Gram matrix.
inline std::vector<double> gram_singular_values(const DenseMatrix& a) {
  const DenseMatrix g = a.rows() >= a.cols() ? a.transpose() * a : a * a.transpose();
  std::vector<double> ev = symmetric_eigenvalues(g);
  for (double& e : ev) e = std::sqrt(std::max(e, 0.0));
  return ev;
}

inline double power_spectral_norm(const DenseMatrix& a, int iterations = 2000) {
  std::mt19937_64 gen(12345);
  DenseVector v = unit_vector(a.cols(), gen);
  double sigma = 0.0;
  for (int k = 0; k < iterations; ++k) {
    DenseVector w = linalg::transpose_times(a, a * v);
    const double nw = linalg::norm2(w);
    if (nw == 0.0) return 0.0;
    v = (1.0 / nw) * std::move(w);
    sigma = linalg::norm2(a * v);
  }
  return sigma;
}

// Solves the SPD system g y = rhs by Cholesky.
inline DenseVector cholesky_solve(const DenseMatrix& g, const DenseVector& rhs) {
  const std::size_t n = g.rows();
  DenseMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = g(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = g(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  DenseVector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = rhs[i];
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y[k];
    y[i] = s / l(i, i);
  }
  DenseVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = y[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= l(k, i) * x[k];
    x[i] = s / l(i, i);
  }
  return x;
}

inline DenseVector normal_equations_solve(const DenseMatrix& a, const DenseVector& b) {
  return cholesky_solve(a.transpose() * a, linalg::transpose_times(a, b));
}

// The transposed Jacobian applied to dx, as an explicit m x n matrix:
//   r z^t - A z x^t,  z = (A^tA)^{-1} dx.
inline DenseMatrix explicit_jacobian_transpose(const DenseMatrix& a, const DenseVector& x,
                                               const DenseVector& r, const DenseVector& dx) {
  const DenseVector z = cholesky_solve(a.transpose() * a, dx);
  return DenseMatrix::outer(r, z) - DenseMatrix::outer(a * z, x);
}

}  // namespace llscond::testing

#endif  // LLSCOND_TESTS_SUPPORT_HPP
