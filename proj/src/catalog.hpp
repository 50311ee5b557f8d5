// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LLSCOND_CATALOG_HPP
#define LLSCOND_CATALOG_HPP

#include <string_view>
#include <vector>

#include "conditioning.hpp"

namespace llscond::catalog {

enum class BoundName {
  BjorckUpper,
  MalyshevLower,
  GeurtsFrobenius,
  GrattonJoint,
  Higham2002,
  GvlTextbook,
  AttainableReference,
};

enum class NormRegime { Spectral, Frobenius, JointFrobenius };
enum class BoundStatus { Exact, Approx, Overestimate };

std::string_view name_of(BoundName n) noexcept;
std::string_view name_of(NormRegime r) noexcept;
std::string_view name_of(BoundStatus s) noexcept;

struct BoundCatalogEntry {
  BoundName name;
  double value = 0.0;
  NormRegime norm_regime = NormRegime::Spectral;
  BoundStatus status = BoundStatus::Approx;
};

/// Weights of the joint Frobenius norm ||[alpha_w dA, beta_w db]||_F.
struct GrattonWeights {
  double alpha_w = 1.0;
  double beta_w = 1.0;

  void validate() const;
};

struct Catalog {
  std::vector<BoundCatalogEntry> entries;
  double eps = 0.0;  // perturbation level the overestimate coefficients multiply

  const BoundCatalogEntry& at(BoundName n) const;
};

/// Literature condition numbers and bound coefficients for one problem.
/// Values are coefficients of eps; no entry is pre-multiplied by eps.
/// The Malyshev row for Frobenius data with a spectral scale shares its
/// radical with Geurts and is reported through geurts_frobenius.
Catalog evaluate_catalog(const lls::LlsProblem& p, const lls::LlsSolution& s,
                         const lls::Geometry& g, const conditioning::ScaleFactors& sc,
                         const GrattonWeights& w, double eps);

/// gvl_textbook / attainable_reference.
double overestimate_ratio(const lls::LlsProblem& p, const lls::LlsSolution& s,
                          const lls::Geometry& g);

}  // namespace llscond::catalog

#endif  // LLSCOND_CATALOG_HPP
