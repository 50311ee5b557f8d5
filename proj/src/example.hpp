// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LLSCOND_EXAMPLE_HPP
#define LLSCOND_EXAMPLE_HPP

#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "lls.hpp"

namespace llscond::example {

using linalg::DenseMatrix;
using linalg::DenseVector;

/// The three-parameter family
///   A = [1 0; 0 alpha; 0 0],  b = (beta cos phi, beta sin phi, 1),
///   dA = epsilon in entry (3, 2),
/// whose kappa, nu and tan(theta) can be set independently.
struct ExampleSpec {
  double alpha = 0.1;
  double beta = 1.0;
  double phi = std::numbers::pi / 10.0;
  double epsilon = 1e-8;

  /// Human-readable warnings for parameters outside 0 < alpha < 1, beta > 0,
  /// 0 < epsilon << alpha. The views point at static strings.
  std::vector<std::string_view> warnings() const;
};

struct ClosedForms {
  double kappa = 0.0;              // 1/alpha
  double nu = 0.0;                 // 1/sqrt((alpha cos phi)^2 + sin^2 phi)
  double tan_theta = 0.0;          // 1/beta
  double sec_theta = 0.0;          // sqrt(1 + 1/beta^2)
  DenseVector x;                   // (beta cos phi, beta sin phi / alpha)
  DenseVector r;                   // (0, 0, 1)
  double bjorck_upper = 0.0;       // kappa (nu tan + 1)
  double malyshev_lower = 0.0;     // kappa sqrt((nu tan)^2 + 1)
  double chi_b = 0.0;              // nu sec
  double perturbed_x2 = 0.0;       // (eps + alpha beta sin phi)/(alpha^2 + eps^2)
  double predicted_relative_change = 0.0;  // eps/(alpha beta sqrt(...)), first order
};

struct Example {
  lls::LlsProblem problem;
  DenseMatrix perturbation;
  ClosedForms expected;
};

DenseMatrix example_matrix(const ExampleSpec& spec);
DenseVector example_rhs(const ExampleSpec& spec);
DenseMatrix example_perturbation(const ExampleSpec& spec);
ClosedForms closed_forms(const ExampleSpec& spec);
Example paper_example(const ExampleSpec& spec);

/// Parses an angle: a decimal literal, or a rational multiple of pi written
/// as "pi", "pi/10", "3pi/4", "3*pi/4", "-pi/2", "0.5*pi".
double parse_angle(std::string_view text);

/// Parses "alpha=0.1,beta=1,phi=pi/10[,eps=1e-8]"; unnamed keys keep their
/// values from `base`.
ExampleSpec parse_example_spec(std::string_view text, ExampleSpec base = {});

}  // namespace llscond::example

#endif  // LLSCOND_EXAMPLE_HPP
