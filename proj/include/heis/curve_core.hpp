#pragma once

#include <span>
#include <vector>

#include "heis/curve.hpp"

namespace heis {

// Height g(rho) of the upper graph of the Pansu sphere S_lambda over radius rho.
// Throws DomainError unless lambda > 0 and 0 <= rho <= 1/lambda.
double pansu_height(double lambda, double rho);

/// Invariants alpha, k, l of a generating curve in an arbitrary parameter s:
///
///   alpha = x' / w,   k = -t' / (x w),   l = (-(t')^3 - x^3 (x' t'' - x'' t')) / (x w^3),
///
/// with w = sqrt((x x')^2 + (t')^2) and derivatives by finite differences.
/// Samples where x = 0 (axis contact, ends only) are reported as NaN.
/// Needs at least 3 samples.
InvariantProfile invariants_from_curve(const GeneratingCurve& curve);

// l = k + (alpha k' - k alpha') x^2, valid when s is horizontal arc-length.
std::vector<double> l_from_alpha_k(const GeneratingCurve& curve, std::span<const double> alpha,
                                   std::span<const double> k);

// p-mean curvature H = l + (2n - 2) k at an umbilic point.
double pmean_from_kl(GroupDims dims, double k, double l);
std::vector<double> pmean_profile(GroupDims dims, const InvariantProfile& profile);

// E = (lambda - k) x^{2n}; params.energy() is ignored. Throws unless x > 0.
double energy_from_state(const CmcParams& params, double x, double k);

// Samplewise energy along a curve. Axis-contact ends (x = 0) yield NaN.
std::vector<double> energy_profile(const GeneratingCurve& curve, const InvariantProfile& profile,
                                   const CmcParams& params);

struct CodazziResiduals {
  std::vector<double> k_equation;      // dk/ds - (l - 2k) alpha
  std::vector<double> alpha_equation;  // dalpha/ds - (k^2 - k l - alpha^2)
};

// Residuals of the two structure equations along a horizontal arc-length grid.
CodazziResiduals codazzi_residuals(const GeneratingCurve& curve,
                                   const InvariantProfile& profile);

// ((x x')^2 + (t')^2) / x^2 - 1 per sample; zero when s is horizontal arc-length.
std::vector<double> arclength_defect(const GeneratingCurve& curve);

// x^2 (alpha^2 + k^2) - 1 per sample.
std::vector<double> integrability_defect(const GeneratingCurve& curve,
                                         const InvariantProfile& profile);

/// Samples where finite-difference identities are meaningful: finite profile
/// values, full five-point stencil available, and x at least
/// `axis_band * max(x)` so the 1/x singularity of alpha at the axis is kept
/// out of the difference stencils.
std::vector<bool> interior_mask(const GeneratingCurve& curve, const InvariantProfile& profile,
                                double axis_band = 0.1);

// max |v[i]| over masked, finite entries (0 if none).
double masked_max_abs(std::span<const double> v, const std::vector<bool>& mask);

}  // namespace heis
