// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LLSCOND_PERTURB_HPP
#define LLSCOND_PERTURB_HPP

#include <cstdint>
#include <optional>

#include "conditioning.hpp"

namespace llscond::perturb {

using linalg::DenseMatrix;
using linalg::DenseVector;

/// Change of the least-squares solution when (A, b) becomes (A + dA, b + db).
/// Throws RankDeficient when A + dA loses full column rank.
DenseVector perturbed_solve(const lls::LlsProblem& p, const DenseMatrix& dA, const DenseVector& db);

/// Empirical chi_x(b): the largest (||dx||/phi_X) / (||db||/phi_B) over
/// probes along every left singular vector of A and `random_probes` random
/// directions, each of size eps * ||b||_2.
double finite_difference_chi_b(const lls::LlsProblem& p, const conditioning::ScaleFactors& sc,
                               double eps = 1e-7, std::size_t random_probes = 128,
                               std::uint64_t seed = 0);

struct WorstCase {
  DenseMatrix dA;
  double achieved_ratio = 0.0;  // (||dx||_2/||x||_2) / eps
};

/// Builds dA = eps ||A||_2 B, where B is the polar factor of the rank-2
/// matrix at `direction` (default: the sigma_min right singular vector).
/// To first order it changes x by ||A||_2 J_x(A) vec(B) eps.
WorstCase worst_case_perturbation(const lls::LlsProblem& p, const lls::LlsSolution& s, double eps,
                                  const std::optional<DenseVector>& direction = std::nullopt);

struct PerturbationTrial {
  DenseMatrix dA;
  DenseVector db;
  double eps = 0.0;
  DenseVector dx_observed;
  double bound_predicted = 0.0;  // chi_A_upper ||dA||/phi_A + chi_b ||db||/phi_B
  double ratio = 0.0;            // (||dx||/phi_X) / bound_predicted
};

/// Evaluates one trial against the first-order bound.
PerturbationTrial evaluate_trial(const lls::LlsProblem& p, const lls::LlsSolution& s,
                                 const conditioning::ScaleFactors& sc, DenseMatrix dA,
                                 DenseVector db);

struct TrialSummary {
  std::size_t trials = 0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  double eps_used = 0.0;
  double slack = 0.0;
  std::size_t violations = 0;   // ratio > 1 + slack
  std::size_t failures = 0;     // trials whose perturbed problem could not be solved
  bool first_order_regime = true;  // max_ratio <= 1 + slack
};

struct TrialConfig {
  std::size_t trials = 1000;
  double eps = 1e-8;
  std::uint64_t seed = 0;
  double slack = 1e-3;
};

/// Random dA, db with ||dA||_2/phi_A = ||db||_2/phi_B = eps, re-solved and
/// compared with the first-order bound. Deterministic in cfg.seed.
TrialSummary run_trials(const lls::LlsProblem& p, const lls::LlsSolution& s,
                        const conditioning::ScaleFactors& sc, const TrialConfig& cfg);

}  // namespace llscond::perturb

#endif  // LLSCOND_PERTURB_HPP
