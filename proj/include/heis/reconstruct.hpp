#pragma once

#include <span>
#include <vector>

#include "heis/curve.hpp"

namespace heis {

// Invariant functions prescribed on a parameter grid.
struct PrescribedProfile {
  std::vector<double> s;
  std::vector<double> alpha;
  std::vector<double> k;
};

/// Builds the generating curve with the prescribed alpha and k, s becoming its
/// horizontal arc-length:
///
///   x(s) = x0 exp(int alpha ds),   t(s) = t0 - int k x^2 ds,   theta(s) = int k ds.
///
/// The dilation gauge x0 is fixed from the first sample by
/// x0^2 (alpha^2 + k^2)(s_0) = 1, after which x^2 (alpha^2 + k^2) = 1 must hold
/// on the whole grid to `tol`; otherwise InfeasibleError.
GeneratingCurve reconstruct_from_alpha_k(const PrescribedProfile& profile, double t0 = 0.0,
                                         double tol = kAlgebraicTol);

/// k = sign * sqrt(1/x^2 - alpha^2) with x = x0 exp(int alpha ds) and x(s_0) = x0.
/// Values of x^2 (1/x^2 - alpha^2) in [-clamp, 0) are treated as 0; anything
/// lower throws InfeasibleError.
std::vector<double> k_from_alpha(std::span<const double> s, std::span<const double> alpha,
                                 double x0, int sign, double clamp = 1e-12);

// theta(s) = -int t'/x^2 ds with theta(s_0) = 0, t' by finite differences.
std::vector<double> theta_from_curve(const GeneratingCurve& curve);

// theta(s) = int k ds with theta(s_0) = 0, for horizontal arc-length grids.
std::vector<double> theta_from_profile(const GeneratingCurve& curve, std::span<const double> k);

/// Mirror t -> -t combined with reversal of the parameter (s -> -s), which
/// maps the Sigma+ half of a reflective surface onto the Sigma- half:
/// alpha -> -alpha, k -> k, l -> l. An exact involution.
GeneratingCurve reflect_curve(const GeneratingCurve& curve);
InvariantProfile reflect_profile(const InvariantProfile& profile);

/// Plain mirror t -> -t keeping the parameter: alpha -> alpha, k -> -k,
/// l -> -l, so H -> -H. Relates the c < 0 problems to the c > 0 ones.
GeneratingCurve mirror_curve(const GeneratingCurve& curve);
InvariantProfile mirror_profile(const InvariantProfile& profile);

}  // namespace heis
