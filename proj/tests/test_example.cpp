// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "error.hpp"
#include "example.hpp"

namespace llscond {
namespace {

using example::ExampleSpec;

TEST(Example, ClosedFormsAtDefaultPoint) {
  const auto f = example::closed_forms(ExampleSpec{0.1, 1.0, std::numbers::pi / 10, 1e-8});
  EXPECT_DOUBLE_EQ(f.kappa, 10.0);
  EXPECT_DOUBLE_EQ(f.tan_theta, 1.0);
  EXPECT_NEAR(f.bjorck_upper, 40.928, 2e-3);
  EXPECT_NEAR(f.malyshev_lower, 32.505, 2e-3);
  EXPECT_NEAR(f.chi_b, 4.374, 1e-3);
}

TEST(Example, FlatAngleCollapsesRadical) {
  const auto f = example::closed_forms(ExampleSpec{0.5, 1.0, 0.0, 1e-8});
  EXPECT_DOUBLE_EQ(f.nu, 2.0);
  EXPECT_DOUBLE_EQ(f.x[0], 1.0);
  EXPECT_DOUBLE_EQ(f.x[1], 0.0);
}

TEST(Example, ProblemMatchesDisplayedData) {
  const ExampleSpec spec{0.2, 3.0, 0.7, 1e-9};
  const auto ex = example::paper_example(spec);
  const auto& a = ex.problem.matrix();
  EXPECT_EQ(a(1, 1), 0.2);
  EXPECT_EQ(a(2, 0), 0.0);
  EXPECT_EQ(ex.problem.rhs()[2], 1.0);
  EXPECT_NEAR(ex.problem.rhs()[0], 3.0 * std::cos(0.7), 1e-15);
  EXPECT_EQ(ex.perturbation(2, 1), 1e-9);
  EXPECT_EQ(ex.perturbation.frobenius_norm(), 1e-9);
}

TEST(Example, WarningsNotErrors) {
  EXPECT_TRUE((ExampleSpec{0.1, 1.0, 0.3, 1e-8}.warnings().empty()));
  EXPECT_EQ((ExampleSpec{1.5, 1.0, 0.3, 1e-8}.warnings().size()), 1u);
  EXPECT_EQ((ExampleSpec{0.1, -1.0, 0.3, 1e-8}.warnings().size()), 1u);
  EXPECT_EQ((ExampleSpec{0.1, 1.0, 0.3, 0.05}.warnings().size()), 1u);
  EXPECT_EQ((ExampleSpec{0.1, 1.0, 0.3, 0.0}.warnings().size()), 1u);
}

TEST(Example, ParseAngle) {
  const double pi = std::numbers::pi;
  EXPECT_DOUBLE_EQ(example::parse_angle("pi"), pi);
  EXPECT_DOUBLE_EQ(example::parse_angle("pi/10"), pi / 10);
  EXPECT_DOUBLE_EQ(example::parse_angle("3pi/4"), 3 * pi / 4);
  EXPECT_DOUBLE_EQ(example::parse_angle("3*pi/4"), 3 * pi / 4);
  EXPECT_DOUBLE_EQ(example::parse_angle("-pi/2"), -pi / 2);
  EXPECT_DOUBLE_EQ(example::parse_angle("0.25"), 0.25);
  EXPECT_THROW(example::parse_angle("pi*2"), Error);
  EXPECT_THROW(example::parse_angle("pi/0"), Error);
  EXPECT_THROW(example::parse_angle("sin(1)"), Error);
}

TEST(Example, ParseSpec) {
  const auto s = example::parse_example_spec("alpha=0.01, beta=2,phi=pi/2,eps=1e-9");
  EXPECT_EQ(s.alpha, 0.01);
  EXPECT_EQ(s.beta, 2.0);
  EXPECT_DOUBLE_EQ(s.phi, std::numbers::pi / 2);
  EXPECT_EQ(s.epsilon, 1e-9);
  const auto partial = example::parse_example_spec("beta=3", ExampleSpec{0.2, 1, 0.5, 1e-7});
  EXPECT_EQ(partial.alpha, 0.2);
  EXPECT_EQ(partial.beta, 3.0);
  EXPECT_THROW(example::parse_example_spec("gamma=1"), Error);
  EXPECT_THROW(example::parse_example_spec("alpha"), Error);
  EXPECT_THROW(example::parse_example_spec("alpha=x"), Error);
}

}  // namespace
}  // namespace llscond
