// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#include "rank2.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace llscond::rank2 {

namespace {

struct PairBasis {
  double lead = 0.0;    // |p1|
  double along = 0.0;   // component of p2 along p1
  double across = 0.0;  // length of p2's remainder
  DenseVector first;
  DenseVector second;
};

// Orthonormalizes (p1, p2) with one re-orthogonalization pass. p1 != 0.
PairBasis orthonormalize(const DenseVector& p1, const DenseVector& p2) {
  PairBasis b;
  b.lead = linalg::norm2(p1);
  b.first = (1.0 / b.lead) * p1;
  DenseVector rem = p2;
  for (int pass = 0; pass < 2; ++pass) {
    const double c = linalg::dot(b.first, rem);
    b.along += c;
    rem -= c * b.first;
  }
  b.across = linalg::norm2(rem);
  b.second = b.across > 0.0 ? (1.0 / b.across) * rem : DenseVector(p2.size());
  return b;
}

bool is_zero(const DenseVector& v) {
  return std::all_of(v.values().begin(), v.values().end(), [](double x) { return x == 0.0; });
}

}  // namespace

void Rank2Outer::validate() const {
  if (u1.size() != u2.size() || v1.size() != v2.size()) {
    throw Error(ErrorCode::DimensionMismatch, "rank-2 factors have inconsistent lengths");
  }
}

DenseMatrix Rank2Outer::materialize() const {
  validate();
  return DenseMatrix::outer(u1, v1) + DenseMatrix::outer(u2, v2);
}

std::optional<GramRepresentation> gram_reduce(const Rank2Outer& t) {
  t.validate();
  if (is_zero(t.u1) || is_zero(t.v1)) return std::nullopt;

  const PairBasis u = orthonormalize(t.u1, t.u2);
  const PairBasis v = orthonormalize(t.v1, t.v2);

  GramRepresentation g;
  g.alpha1 = u.lead;
  g.alpha2 = u.along;
  g.beta = u.across;
  g.gamma1 = v.lead;
  g.gamma2 = v.along;
  g.delta = v.across;
  g.w1 = u.first;
  g.w2 = u.second;
  g.x1 = v.first;
  g.x2 = v.second;

  const double c11 = g.alpha1 * g.gamma1 + g.alpha2 * g.gamma2;
  g.core = {{{c11, g.alpha2 * g.delta}, {g.beta * g.gamma2, g.beta * g.delta}}};
  const auto& c = g.core;
  g.gram[0][0] = c[0][0] * c[0][0] + c[1][0] * c[1][0];
  g.gram[0][1] = c[0][0] * c[0][1] + c[1][0] * c[1][1];
  g.gram[1][0] = g.gram[0][1];
  g.gram[1][1] = c[0][1] * c[0][1] + c[1][1] * c[1][1];
  return g;
}

double rank2_nuclear_norm(const Rank2Outer& t) {
  const auto g = gram_reduce(t);
  if (!g) return linalg::norm2(t.u2) * linalg::norm2(t.v2);
  const auto& c = g->core;
  const double fro = linalg::norm2(std::array{c[0][0], c[0][1], c[1][0], c[1][1]});
  return std::sqrt(fro * fro + 2.0 * g->sqrt_det());
}

double rank2_frobenius_norm(const Rank2Outer& t) {
  const auto g = gram_reduce(t);
  if (!g) return linalg::norm2(t.u2) * linalg::norm2(t.v2);
  const auto& c = g->core;
  return linalg::norm2(std::array{c[0][0], c[0][1], c[1][0], c[1][1]});
}

AngleCosSin angle_between(const DenseVector& a, const DenseVector& b) {
  const PairBasis p = orthonormalize(a, b);
  const double nb = linalg::norm2(b);
  AngleCosSin out;
  out.cos = std::clamp(p.along / nb, -1.0, 1.0);
  out.sin = std::clamp(p.across / nb, 0.0, 1.0);
  return out;
}

double rank2_nuclear_norm_angles(const Rank2Outer& t) {
  t.validate();
  const double nu1 = linalg::norm2(t.u1), nv1 = linalg::norm2(t.v1);
  const double nu2 = linalg::norm2(t.u2), nv2 = linalg::norm2(t.v2);
  const double a = nu1 * nv1;
  const double b = nu2 * nv2;
  if (a == 0.0 || b == 0.0) return a + b;
  const AngleCosSin tu = angle_between(t.u1, t.u2);
  const AngleCosSin tv = angle_between(t.v1, t.v2);
  const double cos_diff = tu.cos * tv.cos + tu.sin * tv.sin;
  return std::sqrt(std::max(0.0, a * a + b * b + 2.0 * a * b * cos_diff));
}

// ---------------------------------------------------------------------------

DenseMatrix PolarFactor::materialize(std::size_t m, std::size_t n) const {
  DenseMatrix b(m, n);
  for (std::size_t k = 0; k < left.size(); ++k) b += DenseMatrix::outer(left[k], right[k]);
  return b;
}

DenseVector PolarFactor::transpose_apply(const DenseVector& y) const {
  DenseVector out(right.empty() ? 0 : right[0].size());
  for (std::size_t k = 0; k < left.size(); ++k) out += linalg::dot(left[k], y) * right[k];
  return out;
}

DenseVector PolarFactor::apply(const DenseVector& z) const {
  DenseVector out(left.empty() ? 0 : left[0].size());
  for (std::size_t k = 0; k < left.size(); ++k) out += linalg::dot(right[k], z) * left[k];
  return out;
}

PolarFactor polar_factor(const Rank2Outer& t) {
  PolarFactor pf;
  const auto g = gram_reduce(t);
  if (!g) {
    const double nu = linalg::norm2(t.u2);
    const double nv = linalg::norm2(t.v2);
    if (nu > 0.0 && nv > 0.0) {
      pf.left.push_back((1.0 / nu) * t.u2);
      pf.right.push_back((1.0 / nv) * t.v2);
    }
    return pf;
  }
  const auto& c = g->core;
  const linalg::SvdResult f =
      linalg::svd(DenseMatrix::from_rows({{c[0][0], c[0][1]}, {c[1][0], c[1][1]}}));
  if (f.singular_values[0] == 0.0) return pf;
  const bool full_rank = g->beta > 0.0 && g->delta > 0.0 && f.singular_values[1] > 0.0;
  const std::size_t k_max = full_rank ? 2 : 1;
  for (std::size_t k = 0; k < k_max; ++k) {
    const double p0 = f.left_vectors(0, k), p1 = f.left_vectors(1, k);
    const double q0 = f.right_vectors(0, k), q1 = f.right_vectors(1, k);
    pf.left.push_back(p0 * g->w1 + p1 * g->w2);
    pf.right.push_back(q0 * g->x1 + q1 * g->x2);
  }
  return pf;
}

}  // namespace llscond::rank2
