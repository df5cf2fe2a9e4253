#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string_view>

#include "heis/curve.hpp"
#include "heis/kernels.hpp"

namespace heis {

enum class EndpointType { axis, turning_point, unbounded, collapsed };
std::string_view to_string(EndpointType type);

/// Maximal x-range on which 1 - x^2 (E/x^{2n} - c/(2n))^2 > 0, i.e.
/// (c/2n) x^{2n} - x^{2n-1} < E < (c/2n) x^{2n} + x^{2n-1}.
struct AdmissibleInterval {
  double a = 0.0;
  double b = std::numeric_limits<double>::infinity();
  EndpointType a_type = EndpointType::turning_point;
  EndpointType b_type = EndpointType::turning_point;

  bool collapsed() const { return a_type == EndpointType::collapsed; }
  bool bounded() const { return b_type != EndpointType::unbounded; }
};

// Branch of a reflective generating curve: sign of x' (Sigma+ / Sigma-), or both halves.
enum class Branch { plus = 1, minus = -1, both = 0 };
std::string_view to_string(Branch branch);

/// Sampling grid in horizontal arc-length. Either `samples` points or spacing
/// `step` over the branch range; `s_begin`/`s_end` restrict the range (it
/// must stay inside the branch). Unbounded branches (minimal surfaces,
/// cylinders) extend `unbounded_extent` from the waist.
struct GridSpec {
  std::size_t samples = 2001;
  std::optional<double> step;
  std::optional<double> s_begin;
  std::optional<double> s_end;
  double unbounded_extent = 3.0;
};

// -(1/2n) ((2n-1)/c)^{2n-1}; requires c > 0.
double energy_lower_bound(GroupDims dims, double c);
// +(1/2n) ((2n-1)/|c|)^{2n-1}; requires c < 0.
double energy_upper_bound(GroupDims dims, double c);

// |E - bound| below which the interval is treated as collapsed (the cylinder).
double collapse_tolerance(double bound);

/// Admissible interval of params. c > 0: E below the bound (beyond the
/// collapse band) throws InfeasibleError; E at the bound collapses to
/// x = (2n-1)/c. c < 0 uses the dual problem (|c|, -E), which has the same
/// x-range. c = 0: x > |E|^{1/(2n-1)}.
AdmissibleInterval admissible_interval(const CmcParams& params);

/// Horizontal arc-length G_E(x) - G_E(x_ref) along the + branch:
/// int_{x_ref}^{x} u^{2n-1} du / sqrt(u^{4n-2} - (E - (c/2n) u^{2n})^2).
/// Both arguments must lie in the closed admissible interval.
double arclength_of_radius(const CmcParams& params, double x, double x_ref);

// Inverse F_E of arclength_of_radius: the radius x on the + branch with G(x) - G(x_ref) = s.
double radius_of_arclength(const CmcParams& params, double s, double x_ref);

/// Generating curve and invariants of the reflective hypersurface with
/// p-mean curvature c != 0 and energy E:
///
///   x = F_E(s),  k = c/2n - E/x^{2n},  alpha = x'/x,  l = c - (2n-2) k,
///   t = t0 - int k x^2 ds,  theta = int k ds.
///
/// The outer turning point sits at s = 0 with t(0) = t0; the + branch
/// occupies s <= 0. E at the optimal bound yields the exact cylinder.
/// c < 0 is delegated to negative_c_dual().
CurveWithProfile cmc_generating_curve(const CmcParams& params, Branch branch,
                                      const GridSpec& grid = {}, double t0 = 0.0,
                                      kernels::Exec exec = kernels::Exec::parallel);

/// p-minimal (c = 0) counterpart; every E is admissible, waist at s = 0 with
/// radius |E|^{1/(2n-1)}, k = -E/x^{2n}, t = t0 + int E/x^{2n-2} ds. When the
/// waist is on the axis (E = 0) the two halves coincide and only the + branch
/// is produced.
CurveWithProfile minimal_generating_curve(GroupDims dims, double energy, Branch branch,
                                          const GridSpec& grid = {}, double t0 = 0.0,
                                          kernels::Exec exec = kernels::Exec::parallel);

// c < 0: the (|c|, -E) curve mirrored by t -> -t.
CurveWithProfile negative_c_dual(const CmcParams& params, Branch branch,
                                 const GridSpec& grid = {}, double t0 = 0.0,
                                 kernels::Exec exec = kernels::Exec::parallel);

// Dispatch on the sign of c.
CurveWithProfile generate_curve(const CmcParams& params, Branch branch,
                                const GridSpec& grid = {}, double t0 = 0.0,
                                kernels::Exec exec = kernels::Exec::parallel);

// n = 1, c > 0: x^2 = (2 sqrt(2cE+1)/c^2) sin(c s + phase) + (2cE+2)/c^2.
double closed_form_n1_cmc(double c, double energy, double s, double phase);

// n = 1, c = 0: x^2 = (s + c1)^2 + E^2.
double closed_form_n1_minimal(double energy, double s, double c1);

}  // namespace heis
