#include "heis/classify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "heis/cmc_solver.hpp"
#include "heis/curve_core.hpp"
#include "heis/errors.hpp"

namespace heis {

namespace {

constexpr double kHConstancyTol = 1e-6;

}  // namespace

std::string_view to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::pansu_sphere: return "pansu_sphere";
    case ClassLabel::cylinder: return "cylinder";
    case ClassLabel::cmc_band: return "cmc_band";
    case ClassLabel::minimal_catenoid_like: return "minimal_catenoid_like";
    case ClassLabel::minimal_plane: return "minimal_plane";
    case ClassLabel::infeasible: return "infeasible";
  }
  return "unknown";
}

double classification_band(double bound) { return 1e-9 * (1.0 + std::abs(bound)); }

ClassReport classify_params(const CmcParams& params, double band) {
  ClassReport report;
  const double c = params.c();
  const double e = params.energy();
  report.witnesses["n"] = params.n();
  report.witnesses["c"] = c;
  report.witnesses["lambda"] = params.lambda();
  report.witnesses["energy"] = e;

  if (c == 0.0) {
    const double tol = band > 0.0 ? band : classification_band(0.0);
    const double waist = std::pow(std::abs(e), 1.0 / (params.dims().two_n() - 1));
    report.witnesses["waist_radius"] = waist;
    if (std::abs(e) <= tol) {
      report.label = ClassLabel::minimal_plane;
      report.witnesses["axis_contact"] = 1.0;
      report.notes = "horizontal hyperplane";
    } else {
      report.label = ClassLabel::minimal_catenoid_like;
      report.witnesses["axis_contact"] = 0.0;
    }
    return report;
  }

  // c < 0 is the t-mirror of (|c|, -E); the labels coincide.
  const double sign = c > 0.0 ? 1.0 : -1.0;
  const double bound = c > 0.0 ? energy_lower_bound(params.dims(), c)
                               : energy_upper_bound(params.dims(), c);
  const double tol = band > 0.0 ? band : classification_band(bound);
  const double e_dual = sign * e;
  const double bound_dual = sign * bound;
  report.witnesses["bound"] = bound;
  report.witnesses["axis_contact"] = 0.0;

  if (e_dual < bound_dual - tol) {
    report.label = ClassLabel::infeasible;
    report.notes = c > 0.0 ? "energy below the optimal lower bound"
                           : "energy above the optimal upper bound";
  } else if (std::abs(e_dual - bound_dual) <= tol) {
    report.label = ClassLabel::cylinder;
    report.witnesses["radius"] = (params.dims().two_n() - 1) / std::abs(c);
  } else if (std::abs(e) <= tol) {
    report.label = ClassLabel::pansu_sphere;
    report.witnesses["axis_contact"] = 1.0;
  } else {
    report.label = ClassLabel::cmc_band;
  }
  return report;
}

ClassReport classify_curve(const GeneratingCurve& curve, GroupDims dims) {
  if (curve.size() < 3) throw DomainError("classification needs at least 3 samples");
  const auto profile = invariants_from_curve(curve);
  const auto mask = interior_mask(curve, profile);
  const auto h = pmean_profile(dims, profile);

  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (mask[i] && std::isfinite(h[i])) used.push_back(i);
  }
  if (used.empty()) throw DomainError("no interior samples away from the axis to classify");

  double h_mean = 0.0;
  for (auto i : used) h_mean += h[i];
  h_mean /= static_cast<double>(used.size());
  double h_dev = 0.0;
  for (auto i : used) h_dev = std::max(h_dev, std::abs(h[i] - h_mean));

  const double h_tol = kHConstancyTol * (1.0 + std::abs(h_mean));
  if (h_dev > h_tol) {
    ClassReport report;
    report.label = ClassLabel::infeasible;
    report.witnesses["h_mean"] = h_mean;
    report.witnesses["h_max_deviation"] = h_dev;
    report.notes = "p-mean curvature is not constant along the curve";
    return report;
  }

  const double c = std::abs(h_mean) <= h_tol ? 0.0 : h_mean;
  const CmcParams fit(dims, c);
  const auto x = curve.x();
  double e_sum = 0.0;
  for (auto i : used) e_sum += (fit.lambda() - profile.k[i]) * std::pow(x[i], dims.two_n());
  const double e_fit = e_sum / static_cast<double>(used.size());
  double e_dev = 0.0;
  for (auto i : used) {
    e_dev = std::max(
        e_dev, std::abs((fit.lambda() - profile.k[i]) * std::pow(x[i], dims.two_n()) - e_fit));
  }

  // The fitted E carries discretization error; widen the band by its spread.
  double bound = 0.0;
  if (c > 0.0) bound = energy_lower_bound(dims, c);
  if (c < 0.0) bound = energy_upper_bound(dims, c);
  const double band = std::max(classification_band(bound), 2.0 * e_dev);

  auto report = classify_params(fit.with_energy(e_fit), band);
  report.witnesses["h_mean"] = h_mean;
  report.witnesses["h_max_deviation"] = h_dev;
  report.witnesses["energy_fit_residual"] = e_dev;
  return report;
}

}  // namespace heis
