#pragma once

#include <map>
#include <string>
#include <string_view>

#include "heis/curve.hpp"

namespace heis {

enum class ClassLabel {
  pansu_sphere,
  cylinder,
  cmc_band,
  minimal_catenoid_like,
  minimal_plane,
  infeasible,
};

std::string_view to_string(ClassLabel label);

struct ClassReport {
  ClassLabel label = ClassLabel::infeasible;
  // Named evidence: lambda, energy, bound, waist_radius, axis_contact, ...
  std::map<std::string, double> witnesses;
  std::string notes;
};

// Band for the "E = 0" and "E = bound" tests: 1e-9 (1 + |bound|).
double classification_band(double bound);

/// Label of the parameter triple. For c > 0: E below the bound is
/// infeasible, E at the bound the cylinder, E = 0 the Pansu sphere, anything
/// else a band; c < 0 mirrors this against the upper bound; c = 0 separates
/// the horizontal plane (E = 0) from catenoid-like minimal surfaces.
/// `band` overrides classification_band() when positive.
ClassReport classify_params(const CmcParams& params, double band = 0.0);

/// Recomputes the invariants of a sampled curve, checks that
/// H = l + (2n-2)k is constant away from the axis and fits E as the mean of
/// (lambda - k) x^{2n}. Non-constant H yields `infeasible` with the maximal
/// deviation as witness.
ClassReport classify_curve(const GeneratingCurve& curve, GroupDims dims);

}  // namespace heis
