#pragma once

#include <vector>

#include "heis/cmc_solver.hpp"
#include "heis/curve.hpp"

namespace heis {

/// Horizontal arc-length of a constant p-mean curvature generating curve
/// expressed through a phase variable u in which the integrand is smooth.
///
/// Writing N(x) = (P_hi(x) - E)(E - P_lo(x)) with P_lo/hi = (c/2n) x^{2n} -/+ x^{2n-1},
/// ds/dx = x^{2n-1} / sqrt(N). The turning-point roots are divided out of N
/// (N = (x - a)(b - x) W or (x - a) W) and the remaining square-root zeros are
/// absorbed by
///
///   bounded   x = m + h sin u,  u in [-pi/2, 3pi/2]   (m, h mid-point and half-width)
///   unbounded x = a + u^2,      u in R
///
/// so that ds/du = x^{2n-1}/sqrt(W) (times 2 when unbounded) is smooth and
/// positive. Both halves of the reflective curve are covered by one phase
/// interval: the + branch (x' > 0) is u in [-pi/2, pi/2] (bounded) or u >= 0
/// (unbounded). The anchor phase, where s = 0, is the outer turning point
/// u = pi/2 or the waist u = 0.
///
/// Requires c >= 0 and a non-collapsed interval. All members are const and
/// safe to call concurrently.
class PhaseMap {
 public:
  PhaseMap(const CmcParams& params, const AdmissibleInterval& interval);

  bool bounded() const { return bounded_; }
  const AdmissibleInterval& interval() const { return interval_; }
  const CmcParams& params() const { return params_; }

  double anchor() const;
  // Full phase domain of the reflective curve.
  double phase_lo() const;
  double phase_hi() const;
  // Arc-length of one branch between the two turning points (bounded only).
  double half_period() const { return half_period_; }

  double radius(double u) const;
  double speed(double u) const;            // ds/du
  double radial_velocity(double u) const;  // dx/ds, signed
  double k_of_radius(double x) const;      // c/2n - E/x^{2n}

  // int_{u0}^{u1} ds
  double arclength(double u0, double u1) const;
  // Phase on the + branch with the given radius; throws outside [a, b].
  double phase_of_radius(double x) const;

  // Phase u with arclength(anchor(), u) == s; throws if s lies outside the curve.
  double solve_phase(double s) const;
  // Phase u >= u0 with arclength(u0, u) == ds (ds >= 0).
  double solve_phase_from(double u0, double ds) const;
  // Phase on the + branch with arclength(u_ref, u) == s.
  double solve_plus_branch(double u_ref, double s) const;

 private:
  double w_factor(double x) const;
  double x_pow_odd(double x) const;  // x^{2n-1}, or sqrt(x) once the axis root is divided out
  double solve_between(double u_ref, double s, double lo, double hi) const;
  double grow_unbounded(double u_ref, double s) const;

  CmcParams params_;
  AdmissibleInterval interval_;
  bool bounded_ = true;
  bool axis_root_ = false;
  double mid_ = 0.0;
  double half_ = 0.0;
  std::vector<double> factor_a_;
  std::vector<double> factor_b_;
  double half_period_ = 0.0;
};

}  // namespace heis
