// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#include "conditioning.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "error.hpp"

namespace llscond::conditioning {

void ScaleFactors::validate() const {
  for (double v : {phi_A, phi_B, phi_X}) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "scale factors must be finite and positive");
    }
  }
}

ScaleFactors default_scales(const Geometry& g) {
  return ScaleFactors{g.sigma_max, g.norm_b, g.norm_x};
}

void OptimizerConfig::validate() const {
  if (restarts < 1) throw Error(ErrorCode::InvalidArgument, "optimizer needs at least one restart");
  if (max_iterations < 1) {
    throw Error(ErrorCode::InvalidArgument, "optimizer needs at least one iteration");
  }
  if (!(step_tolerance > 0.0) || !(value_tolerance > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "optimizer tolerances must be positive");
  }
}

double chi_b(const LlsProblem& p, const LlsSolution&, const Geometry&, const ScaleFactors& sc) {
  sc.validate();
  return sc.phi_B / (sc.phi_X * p.sigma_min());
}

rank2::Rank2Outer rank2_map(const LlsProblem& p, const LlsSolution& s, const DenseVector& dx) {
  if (dx.size() != p.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "direction length must equal the column count");
  }
  return rank2::Rank2Outer{s.r, p.gram_inverse_apply(dx), -p.pseudo_transpose_apply(dx), s.x};
}

double sphere_objective(const LlsProblem& p, const LlsSolution& s, const DenseVector& dx) {
  return rank2::rank2_nuclear_norm(rank2_map(p, s, dx));
}

DenseVector jacobian_A_apply(const LlsProblem& p, const LlsSolution& s, const DenseMatrix& dA) {
  if (dA.rows() != p.rows() || dA.cols() != p.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "perturbation must have the shape of A");
  }
  DenseVector rhs = linalg::transpose_times(dA, s.r);
  rhs -= linalg::transpose_times(p.matrix(), dA * s.x);
  return p.gram_inverse_apply(rhs);
}

ChiABounds chi_A_bounds(const LlsProblem& p, const LlsSolution&, const Geometry& g,
                        const ScaleFactors& sc) {
  sc.validate();
  const double smin = p.sigma_min();
  const double coeff = sc.phi_A / (sc.phi_X * smin);
  const double residual_term = g.norm_r / smin;
  ChiABounds out;
  out.lower = coeff * std::hypot(residual_term, g.norm_x);
  out.upper = coeff * (residual_term + g.norm_x);
  return out;
}

namespace {

// One objective/ascent pair on the unit sphere. `step` returns the
// (unnormalized) next direction; the objective never decreases along it.
struct SphereProblem {
  std::function<double(const DenseVector&)> objective;
  std::function<DenseVector(const DenseVector&)> step;
};

DenseVector normalized(DenseVector v) {
  const double n = linalg::norm2(v);
  if (!(n > 0.0)) throw Error(ErrorCode::Internal, "ascent produced a zero direction");
  return (1.0 / n) * std::move(v);
}

struct LocalResult {
  double value = 0.0;
  DenseVector point;
  bool converged = false;
  std::size_t iterations = 0;
};

LocalResult ascend(const SphereProblem& sp, DenseVector start, const OptimizerConfig& cfg) {
  LocalResult res;
  res.point = normalized(std::move(start));
  res.value = sp.objective(res.point);
  for (std::size_t it = 0; it < cfg.max_iterations; ++it) {
    res.iterations = it + 1;
    DenseVector next = normalized(sp.step(res.point));
    const double f = sp.objective(next);
    if (f <= res.value) {
      // No further progress in floating point.
      res.converged = true;
      break;
    }
    const double moved = linalg::norm2(next - res.point);
    const double gain = f - res.value;
    res.point = std::move(next);
    res.value = f;
    if (moved <= cfg.step_tolerance || gain <= cfg.value_tolerance * f) {
      res.converged = true;
      break;
    }
  }
  return res;
}

std::vector<DenseVector> starting_points(const LlsProblem& p, const OptimizerConfig& cfg) {
  std::vector<DenseVector> starts;
  starts.push_back(p.min_right_singular_vector());
  std::mt19937_64 gen(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  while (starts.size() < cfg.restarts) {
    DenseVector v(p.cols());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = normal(gen);
    if (linalg::norm2(v) > 0.0) starts.push_back(normalized(std::move(v)));
  }
  return starts;
}

SphereMaximum multistart(const SphereProblem& sp, const LlsProblem& p, const OptimizerConfig& cfg,
                         double scale) {
  cfg.validate();
  SphereMaximum best;
  double best_raw = 0.0;
  bool have = false;
  bool best_converged = false;
  const auto starts = starting_points(p, cfg);
  for (std::size_t k = 0; k < starts.size(); ++k) {
    LocalResult r = ascend(sp, starts[k], cfg);
    // Strict comparison: ties go to the lowest restart index.
    if (!have || r.value > best_raw) {
      best_raw = r.value;
      best.value = r.value * scale;
      best.maximizer = std::move(r.point);
      best.restart = k;
      best.iterations = r.iterations;
      best_converged = r.converged;
      have = true;
    }
  }
  best.certified = best_converged;
  return best;
}

// Ascent direction for the chi_x(A) objective: with B the polar factor of
// G(dx), the pairing tr(G(d)^t B) is linear in d with gradient
// (A^tA)^{-1}(B^t r - A^t B x). Maximizing it over the sphere cannot decrease
// the nuclear norm.
DenseVector chi_A_step(const LlsProblem& p, const LlsSolution& s, const DenseVector& dx) {
  const rank2::PolarFactor b = rank2::polar_factor(rank2_map(p, s, dx));
  DenseVector g = b.transpose_apply(s.r);
  g -= linalg::transpose_times(p.matrix(), b.apply(s.x));
  return p.gram_inverse_apply(g);
}

}  // namespace

SphereMaximum chi_A_exact(const LlsProblem& p, const LlsSolution& s, const ScaleFactors& sc,
                          const OptimizerConfig& cfg) {
  sc.validate();
  SphereProblem sp{
      [&](const DenseVector& dx) { return sphere_objective(p, s, dx); },
      [&](const DenseVector& dx) { return chi_A_step(p, s, dx); },
  };
  SphereMaximum best = multistart(sp, p, cfg, sc.phi_A / sc.phi_X);

  const ChiABounds bounds = chi_A_bounds(p, s, lls::geometry(p, s), sc);
  constexpr double kSlack = 1e-10;
  if (best.value < bounds.lower * (1.0 - kSlack) || best.value > bounds.upper * (1.0 + kSlack)) {
    best.certified = false;
  }
  return best;
}

SphereMaximum chi_joint_estimate(const LlsProblem& p, const LlsSolution& s,
                                 const ScaleFactors& sc, const OptimizerConfig& cfg) {
  sc.validate();
  const double wa = sc.phi_A;
  const double wb = sc.phi_B;
  SphereProblem sp{
      [&](const DenseVector& dx) {
        return wa * sphere_objective(p, s, dx) + wb * linalg::norm2(p.pseudo_transpose_apply(dx));
      },
      [&](const DenseVector& dx) {
        DenseVector g = wa * chi_A_step(p, s, dx);
        const DenseVector d = normalized(p.pseudo_transpose_apply(dx));
        g += wb * p.pseudo_inverse_apply(d);
        return g;
      },
  };
  return multistart(sp, p, cfg, 1.0 / sc.phi_X);
}

DualCertificate dual_norm_certificate(const DenseMatrix& a) {
  const linalg::SvdResult f = linalg::svd(a);
  DenseMatrix d = DenseMatrix::eye(a.rows(), a.cols());
  DualCertificate out;
  out.b = f.left_vectors * d * f.right_vectors.transpose();
  out.value = linalg::trace_inner(a, out.b);
  return out;
}

ConditionReport condition_report(const LlsProblem& p, const LlsSolution& s, const Geometry& g,
                                 const ScaleFactors& sc, const OptimizerConfig& cfg,
                                 bool compute_exact) {
  ConditionReport rep;
  rep.scales = sc;
  rep.chi_b = chi_b(p, s, g, sc);
  const ChiABounds b = chi_A_bounds(p, s, g, sc);
  rep.chi_A_lower = b.lower;
  rep.chi_A_upper = b.upper;
  if (compute_exact) rep.chi_A_exact = chi_A_exact(p, s, sc, cfg);
  return rep;
}

}  // namespace llscond::conditioning
