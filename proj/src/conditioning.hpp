// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LLSCOND_CONDITIONING_HPP
#define LLSCOND_CONDITIONING_HPP

#include <cstdint>
#include <optional>

#include "lls.hpp"
#include "rank2.hpp"

namespace llscond::conditioning {

using linalg::DenseMatrix;
using linalg::DenseVector;
using lls::Geometry;
using lls::LlsProblem;
using lls::LlsSolution;

/// Scale factors of the perturbation norms ||dA||_2/phi_A, ||db||_2/phi_B,
/// ||dx||_2/phi_X.
struct ScaleFactors {
  double phi_A = 1.0;
  double phi_B = 1.0;
  double phi_X = 1.0;

  /// Throws InvalidArgument unless all three are finite and positive.
  void validate() const;
};

/// (||A||_2, ||b||_2, ||x||_2): the relative-change norms.
ScaleFactors default_scales(const Geometry& g);

struct OptimizerConfig {
  std::size_t restarts = 8;
  std::size_t max_iterations = 500;
  double step_tolerance = 1e-12;
  double value_tolerance = 1e-10;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Condition number of x with respect to b: phi_B / (phi_X sigma_min).
double chi_b(const LlsProblem& p, const LlsSolution& s, const Geometry& g,
             const ScaleFactors& sc);

/// The transposed Jacobian J_x(A)^t applied to dx, reshaped to an m x n
/// matrix: u1 v1^t + u2 v2^t with u1 = r, v1 = (A^tA)^{-1} dx,
/// u2 = -A (A^tA)^{-1} dx, v2 = x.
rank2::Rank2Outer rank2_map(const LlsProblem& p, const LlsSolution& s, const DenseVector& dx);

/// Unscaled objective dx -> nuclear norm of rank2_map(dx).
double sphere_objective(const LlsProblem& p, const LlsSolution& s, const DenseVector& dx);

/// First-order change of x for a change dA of the matrix:
/// (A^tA)^{-1} (dA^t r - A^t dA x).
DenseVector jacobian_A_apply(const LlsProblem& p, const LlsSolution& s, const DenseMatrix& dA);

struct ChiABounds {
  double lower = 0.0;  // Malyshev
  double upper = 0.0;  // Bjorck
};

ChiABounds chi_A_bounds(const LlsProblem& p, const LlsSolution& s, const Geometry& g,
                        const ScaleFactors& sc);

struct SphereMaximum {
  double value = 0.0;      // scaled condition number
  DenseVector maximizer;   // unit n-vector
  bool certified = false;  // best restart converged and value lies within the bounds
  std::size_t restart = 0;
  std::size_t iterations = 0;
};

/// Exact chi_x(A): (phi_A/phi_X) max over unit dx of the rank-2 nuclear
/// norm. Multi-start ascent; the first start is the sigma_min right singular
/// vector, the rest are drawn from cfg.seed.
SphereMaximum chi_A_exact(const LlsProblem& p, const LlsSolution& s, const ScaleFactors& sc,
                          const OptimizerConfig& cfg);

/// Joint condition number for the norm max(||dA||_2/phi_A, ||db||_2/phi_B).
/// By duality it is (1/phi_X) max over unit dx of
///   phi_A ||J_x(A)^t dx||_* + phi_B ||A (A^tA)^{-1} dx||_2.
SphereMaximum chi_joint_estimate(const LlsProblem& p, const LlsSolution& s,
                                 const ScaleFactors& sc, const OptimizerConfig& cfg);

struct DualCertificate {
  DenseMatrix b;  // ||b||_2 = 1
  double value = 0.0;  // tr(A^t b) = nuclear norm of A
};

/// B = U D V^t from the full SVD of `a`, D the rectangular identity.
DualCertificate dual_norm_certificate(const DenseMatrix& a);

struct ConditionReport {
  double chi_b = 0.0;
  double chi_A_lower = 0.0;
  double chi_A_upper = 0.0;
  std::optional<SphereMaximum> chi_A_exact;
  ScaleFactors scales;
};

ConditionReport condition_report(const LlsProblem& p, const LlsSolution& s, const Geometry& g,
                                 const ScaleFactors& sc, const OptimizerConfig& cfg,
                                 bool compute_exact);

}  // namespace llscond::conditioning

#endif  // LLSCOND_CONDITIONING_HPP
