// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#include "catalog.hpp"

#include <cmath>

#include "error.hpp"

namespace llscond::catalog {

std::string_view name_of(BoundName n) noexcept {
  switch (n) {
    case BoundName::BjorckUpper: return "bjorck_upper";
    case BoundName::MalyshevLower: return "malyshev_lower";
    case BoundName::GeurtsFrobenius: return "geurts_frobenius";
    case BoundName::GrattonJoint: return "gratton_joint";
    case BoundName::Higham2002: return "higham_2002";
    case BoundName::GvlTextbook: return "gvl_textbook";
    case BoundName::AttainableReference: return "attainable_reference";
  }
  return "unknown";
}

std::string_view name_of(NormRegime r) noexcept {
  switch (r) {
    case NormRegime::Spectral: return "spectral";
    case NormRegime::Frobenius: return "frobenius";
    case NormRegime::JointFrobenius: return "joint-frobenius";
  }
  return "unknown";
}

std::string_view name_of(BoundStatus s) noexcept {
  switch (s) {
    case BoundStatus::Exact: return "exact";
    case BoundStatus::Approx: return "approx";
    case BoundStatus::Overestimate: return "overestimate";
  }
  return "unknown";
}

void GrattonWeights::validate() const {
  if (!std::isfinite(alpha_w) || !std::isfinite(beta_w) || !(alpha_w > 0.0) || !(beta_w > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "Gratton weights must be finite and positive");
  }
}

const BoundCatalogEntry& Catalog::at(BoundName n) const {
  for (const auto& e : entries)
    if (e.name == n) return e;
  throw Error(ErrorCode::Internal, "catalog entry missing");
}

namespace {

double gvl_coefficient(const lls::Geometry& g) {
  return 2.0 * g.sec_theta * g.kappa + g.tan_theta * g.kappa * g.kappa;
}

double attainable_coefficient(const lls::Geometry& g) {
  return g.kappa * (g.nu * g.tan_theta + 1.0) + g.nu * g.sec_theta;
}

}  // namespace

Catalog evaluate_catalog(const lls::LlsProblem& p, const lls::LlsSolution& s,
                         const lls::Geometry& g, const conditioning::ScaleFactors& sc,
                         const GrattonWeights& w, double eps) {
  w.validate();
  if (!std::isfinite(eps) || !(eps > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "eps must be finite and positive");
  }
  const double smin = g.sigma_min;
  const double rel_residual = g.norm_r / (smin * g.norm_x);
  const double shared_radical = std::hypot(rel_residual, 1.0);
  const conditioning::ChiABounds b = conditioning::chi_A_bounds(p, s, g, sc);

  Catalog c;
  c.eps = eps;
  auto add = [&](BoundName n, double v, NormRegime r, BoundStatus st) {
    c.entries.push_back(BoundCatalogEntry{n, v, r, st});
  };
  add(BoundName::BjorckUpper, b.upper, NormRegime::Spectral, BoundStatus::Approx);
  add(BoundName::MalyshevLower, b.lower, NormRegime::Spectral, BoundStatus::Approx);
  add(BoundName::GeurtsFrobenius, p.matrix().frobenius_norm() / smin * shared_radical,
      NormRegime::Frobenius, BoundStatus::Exact);
  {
    const double a2 = w.alpha_w * w.alpha_w;
    const double t = g.norm_r * g.norm_r / (a2 * smin * smin) + g.norm_x * g.norm_x / a2 +
                     1.0 / (w.beta_w * w.beta_w);
    add(BoundName::GrattonJoint, std::sqrt(t) / smin, NormRegime::JointFrobenius,
        BoundStatus::Exact);
  }
  add(BoundName::Higham2002,
      g.kappa * (2.0 + (g.kappa + 1.0) * g.norm_r / (g.sigma_max * g.norm_x)),
      NormRegime::Spectral, BoundStatus::Overestimate);
  add(BoundName::GvlTextbook, gvl_coefficient(g), NormRegime::Spectral,
      BoundStatus::Overestimate);
  add(BoundName::AttainableReference, attainable_coefficient(g), NormRegime::Spectral,
      BoundStatus::Approx);
  return c;
}

double overestimate_ratio(const lls::LlsProblem&, const lls::LlsSolution&,
                          const lls::Geometry& g) {
  return gvl_coefficient(g) / attainable_coefficient(g);
}

}  // namespace llscond::catalog
