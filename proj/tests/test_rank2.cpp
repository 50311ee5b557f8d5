// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "error.hpp"
#include "rank2.hpp"
#include "support.hpp"

namespace llscond {
namespace {

using linalg::DenseMatrix;
using linalg::DenseVector;
using rank2::Rank2Outer;
using testing::rel_err;

Rank2Outer random_outer(std::mt19937_64& gen, std::size_t m, std::size_t n) {
  return Rank2Outer{testing::normal_vector(m, gen), testing::normal_vector(n, gen),
                    testing::normal_vector(m, gen), testing::normal_vector(n, gen)};
}

// u2 within `angle` of +-u1.
DenseVector nearly_parallel(const DenseVector& u, double angle, bool flip, std::mt19937_64& gen) {
  DenseVector w = testing::normal_vector(u.size(), gen);
  w -= (linalg::dot(w, u) / linalg::dot(u, u)) * u;
  const double c = linalg::norm2(u) / linalg::norm2(w);
  w = c * std::move(w);
  DenseVector out = std::cos(angle) * u + std::sin(angle) * w;
  return flip ? -out : out;
}

TEST(Rank2, ValidateShapes) {
  Rank2Outer t{DenseVector{1, 2}, DenseVector{1}, DenseVector{1, 2, 3}, DenseVector{1}};
  EXPECT_THROW(t.validate(), Error);
}

TEST(Rank2, KnownOrthogonalCase) {
  // e1 e1^t * 3 + e2 e2^t * 4: singular values 3 and 4.
  Rank2Outer t{DenseVector{3, 0, 0}, DenseVector{1, 0}, DenseVector{0, 4, 0}, DenseVector{0, 1}};
  EXPECT_DOUBLE_EQ(rank2::rank2_nuclear_norm(t), 7.0);
  EXPECT_DOUBLE_EQ(rank2::rank2_frobenius_norm(t), 5.0);
}

TEST(Rank2, ZeroTermsFallBack) {
  Rank2Outer t{DenseVector(3), DenseVector{1, 2}, DenseVector{1, 0, 0}, DenseVector{0, 2}};
  EXPECT_DOUBLE_EQ(rank2::rank2_nuclear_norm(t), 2.0);
  Rank2Outer z{DenseVector(3), DenseVector(2), DenseVector(3), DenseVector(2)};
  EXPECT_EQ(rank2::rank2_nuclear_norm(z), 0.0);
}

TEST(Rank2, MatchesExplicitOracles) {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 400; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    const Rank2Outer t = random_outer(gen, dim(gen), dim(gen));
    const DenseMatrix g = t.materialize();
    EXPECT_LT(rel_err(rank2::rank2_nuclear_norm(t), linalg::nuclear_norm_oracle(g)), 1e-12);
    EXPECT_LT(rel_err(rank2::rank2_frobenius_norm(t), g.frobenius_norm()), 1e-13);
    EXPECT_LT(rel_err(rank2::rank2_nuclear_norm_angles(t), rank2::rank2_nuclear_norm(t)), 1e-12);
  }
}

TEST(Rank2, NearDegenerateAngles) {
  std::mt19937_64 gen(22);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 4, n = 3;
    Rank2Outer t = random_outer(gen, m, n);
    std::uniform_real_distribution<double> tiny(0.0, 1e-8);
    const bool flip = trial % 2 == 1;
    if (trial % 4 < 2) {
      t.u2 = 2.5 * nearly_parallel(t.u1, tiny(gen), flip, gen);
    } else {
      t.v2 = 0.7 * nearly_parallel(t.v1, tiny(gen), flip, gen);
    }
    const DenseMatrix g = t.materialize();
    EXPECT_LT(rel_err(rank2::rank2_nuclear_norm(t), linalg::nuclear_norm_oracle(g)), 1e-11);
    EXPECT_LT(rel_err(rank2::rank2_frobenius_norm(t), g.frobenius_norm()), 1e-11);
  }
}

TEST(Rank2, AngleUsesRemainder) {
  const DenseVector a{1.0, 0.0};
  const DenseVector b{1.0, 1e-12};
  const auto cs = rank2::angle_between(a, b);
  EXPECT_NEAR(cs.sin, 1e-12, 1e-24);
  EXPECT_DOUBLE_EQ(cs.cos, 1.0);
  const auto opp = rank2::angle_between(a, DenseVector{-2.0, 0.0});
  EXPECT_DOUBLE_EQ(opp.cos, -1.0);
  EXPECT_EQ(opp.sin, 0.0);
}

TEST(Rank2, PolarFactorIsDualCertificate) {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Rank2Outer t = random_outer(gen, 5, 3);
    const auto pf = rank2::polar_factor(t);
    const DenseMatrix b = pf.materialize(5, 3);
    const DenseMatrix g = t.materialize();
    EXPECT_LT(rel_err(linalg::spectral_norm(b), 1.0), 1e-12);
    EXPECT_LT(rel_err(linalg::trace_inner(g, b), rank2::rank2_nuclear_norm(t)), 1e-12);
    const DenseVector y = testing::normal_vector(5, gen);
    EXPECT_LT(linalg::norm2(pf.transpose_apply(y) - linalg::transpose_times(b, y)), 1e-12);
    const DenseVector z = testing::normal_vector(3, gen);
    EXPECT_LT(linalg::norm2(pf.apply(z) - b * z), 1e-12);
  }
}

}  // namespace
}  // namespace llscond
