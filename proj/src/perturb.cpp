// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#include "perturb.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "error.hpp"

namespace llscond::perturb {

DenseVector perturbed_solve(const lls::LlsProblem& p, const DenseMatrix& dA,
                            const DenseVector& db) {
  if (dA.rows() != p.rows() || dA.cols() != p.cols() || db.size() != p.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "perturbation shapes must match the problem");
  }
  const DenseVector x = linalg::householder_least_squares(p.matrix(), p.rhs());
  const DenseVector xp = linalg::qr_least_squares(p.matrix() + dA, p.rhs() + db);
  return xp - x;
}

namespace {

DenseVector random_unit(std::size_t n, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  DenseVector v(n);
  double nrm = 0.0;
  while (nrm == 0.0) {
    for (std::size_t i = 0; i < n; ++i) v[i] = normal(gen);
    nrm = linalg::norm2(v);
  }
  return (1.0 / nrm) * std::move(v);
}

DenseMatrix random_spectral(std::size_t m, std::size_t n, double target, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  DenseMatrix d(m, n);
  double nrm = 0.0;
  while (nrm == 0.0) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < m; ++i) d(i, j) = normal(gen);
    nrm = linalg::spectral_norm(d);
  }
  return (target / nrm) * std::move(d);
}

}  // namespace

double finite_difference_chi_b(const lls::LlsProblem& p, const conditioning::ScaleFactors& sc,
                               double eps, std::size_t random_probes, std::uint64_t seed) {
  sc.validate();
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  const DenseMatrix zero(p.rows(), p.cols());
  const double step = eps * p.norm_b();

  std::vector<DenseVector> probes;
  for (std::size_t k = 0; k < p.cols(); ++k) {
    probes.push_back(p.factorization().left_vectors.column_vector(k));
  }
  std::mt19937_64 gen(seed);
  for (std::size_t k = 0; k < random_probes; ++k) probes.push_back(random_unit(p.rows(), gen));

  double best = 0.0;
  for (const auto& dir : probes) {
    const DenseVector dx = perturbed_solve(p, zero, step * dir);
    const double ratio = (linalg::norm2(dx) / sc.phi_X) / (step / sc.phi_B);
    best = std::max(best, ratio);
  }
  return best;
}

WorstCase worst_case_perturbation(const lls::LlsProblem& p, const lls::LlsSolution& s, double eps,
                                  const std::optional<DenseVector>& direction) {
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  const DenseVector dir = direction ? *direction : p.min_right_singular_vector();
  const rank2::PolarFactor b = rank2::polar_factor(conditioning::rank2_map(p, s, dir));
  WorstCase out;
  out.dA = (eps * p.sigma_max()) * b.materialize(p.rows(), p.cols());
  const DenseVector dx = perturbed_solve(p, out.dA, DenseVector(p.rows()));
  out.achieved_ratio = linalg::norm2(dx) / linalg::norm2(s.x) / eps;
  return out;
}

PerturbationTrial evaluate_trial(const lls::LlsProblem& p, const lls::LlsSolution& s,
                                 const conditioning::ScaleFactors& sc, DenseMatrix dA,
                                 DenseVector db) {
  const lls::Geometry g = lls::geometry(p, s);
  const double chi_A = conditioning::chi_A_bounds(p, s, g, sc).upper;
  const double chi_b = conditioning::chi_b(p, s, g, sc);

  PerturbationTrial t;
  const double rel_A = linalg::spectral_norm(dA) / sc.phi_A;
  const double rel_b = linalg::norm2(db) / sc.phi_B;
  t.eps = std::max(rel_A, rel_b);
  t.dx_observed = perturbed_solve(p, dA, db);
  t.bound_predicted = chi_A * rel_A + chi_b * rel_b;
  const double observed = linalg::norm2(t.dx_observed) / sc.phi_X;
  t.ratio = t.bound_predicted > 0.0 ? observed / t.bound_predicted : 0.0;
  t.dA = std::move(dA);
  t.db = std::move(db);
  return t;
}

TrialSummary run_trials(const lls::LlsProblem& p, const lls::LlsSolution& s,
                        const conditioning::ScaleFactors& sc, const TrialConfig& cfg) {
  sc.validate();
  if (cfg.trials < 1) throw Error(ErrorCode::InvalidArgument, "at least one trial is required");
  if (!std::isfinite(cfg.eps) || !(cfg.eps > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "eps must be finite and positive");
  }
  if (!(cfg.slack >= 0.0)) throw Error(ErrorCode::InvalidArgument, "slack must be nonnegative");

  const lls::Geometry g = lls::geometry(p, s);
  const double chi_A = conditioning::chi_A_bounds(p, s, g, sc).upper;
  const double chi_b = conditioning::chi_b(p, s, g, sc);

  TrialSummary sum;
  sum.eps_used = cfg.eps;
  sum.slack = cfg.slack;
  std::mt19937_64 gen(cfg.seed);
  double total = 0.0;
  std::size_t solved = 0;
  for (std::size_t k = 0; k < cfg.trials; ++k) {
    const DenseMatrix dA = random_spectral(p.rows(), p.cols(), cfg.eps * sc.phi_A, gen);
    const DenseVector db = (cfg.eps * sc.phi_B) * random_unit(p.rows(), gen);
    ++sum.trials;
    try {
      const DenseVector dx = perturbed_solve(p, dA, db);
      const double bound = (chi_A + chi_b) * cfg.eps;
      const double ratio = (linalg::norm2(dx) / sc.phi_X) / bound;
      sum.max_ratio = std::max(sum.max_ratio, ratio);
      total += ratio;
      ++solved;
      if (ratio > 1.0 + cfg.slack) ++sum.violations;
    } catch (const Error&) {
      ++sum.failures;
    }
  }
  sum.mean_ratio = solved > 0 ? total / static_cast<double>(solved) : 0.0;
  sum.first_order_regime = sum.max_ratio <= 1.0 + cfg.slack && sum.failures == 0;
  return sum;
}

}  // namespace llscond::perturb
