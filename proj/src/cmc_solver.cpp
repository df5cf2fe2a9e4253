#include "heis/cmc_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "heis/errors.hpp"
#include "heis/numerics.hpp"
#include "heis/phase_map.hpp"
#include "heis/reconstruct.hpp"

namespace heis {

std::string_view to_string(EndpointType type) {
  switch (type) {
    case EndpointType::axis: return "axis";
    case EndpointType::turning_point: return "turning_point";
    case EndpointType::unbounded: return "unbounded";
    case EndpointType::collapsed: return "collapsed";
  }
  return "unknown";
}

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::plus: return "plus";
    case Branch::minus: return "minus";
    case Branch::both: return "both";
  }
  return "unknown";
}

double energy_lower_bound(GroupDims dims, double c) {
  if (!(c > 0.0)) throw DomainError("the energy lower bound exists only for c > 0");
  const int two_n = dims.two_n();
  return -std::pow((two_n - 1) / c, two_n - 1) / two_n;
}

double energy_upper_bound(GroupDims dims, double c) {
  if (!(c < 0.0)) throw DomainError("the energy upper bound exists only for c < 0");
  return -energy_lower_bound(dims, -c);
}

double collapse_tolerance(double bound) { return 1e-12 * (1.0 + std::abs(bound)); }

namespace {

// Root of p on a sign-change bracket found by scanning `points` (sorted).
double bracketed_root(const std::vector<double>& poly, const std::vector<double>& points,
                      double lo_limit, double hi_limit) {
  auto f = [&](double x) { return numerics::polyval(poly, x); };
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double x0 = points[i - 1];
    const double x1 = points[i];
    if (x0 < lo_limit || x1 > hi_limit) continue;
    const double f0 = f(x0);
    const double f1 = f(x1);
    if (f0 == 0.0) return x0;
    if ((f0 < 0.0) != (f1 < 0.0)) return numerics::find_root(f, x0, x1, f0, f1);
  }
  throw DomainError("no root of the bounding polynomial found in the scan range");
}

AdmissibleInterval positive_c_interval(const CmcParams& params) {
  const int n = params.n();
  const int two_n = 2 * n;
  const double c = params.c();
  const double lambda = params.lambda();
  const double e = params.energy();
  const double bound = energy_lower_bound(params.dims(), c);
  const double critical = (two_n - 1) / c;

  if (e < bound - collapse_tolerance(bound)) {
    throw InfeasibleError("energy " + std::to_string(e) + " lies below the optimal lower bound " +
                          std::to_string(bound) + " for n = " + std::to_string(n) +
                          ", c = " + std::to_string(c));
  }
  if (std::abs(e - bound) <= collapse_tolerance(bound)) {
    return {critical, critical, EndpointType::collapsed, EndpointType::collapsed};
  }

  std::vector<double> lo_me(two_n + 1, 0.0), hi_me(two_n + 1, 0.0);
  lo_me[two_n] = hi_me[two_n] = lambda;
  lo_me[two_n - 1] = -1.0;
  hi_me[two_n - 1] = 1.0;
  lo_me[0] = hi_me[0] = -e;

  // Upper end of the scan: P_lo grows like lambda x^{2n} and must exceed E there.
  double x_max = std::max(2.0 * two_n / c, 1.0);
  while (numerics::polyval(lo_me, x_max) <= 0.0) x_max *= 2.0;

  std::vector<double> points{0.0, critical, x_max};
  constexpr int kScan = 400;
  const double log_lo = std::log(1e-9);
  const double log_hi = std::log(x_max);
  for (int i = 0; i <= kScan; ++i) {
    points.push_back(std::exp(log_lo + (log_hi - log_lo) * i / kScan));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  AdmissibleInterval iv;
  iv.b = bracketed_root(lo_me, points, critical, x_max);
  iv.b_type = EndpointType::turning_point;
  if (e == 0.0) {
    iv.a = 0.0;
    iv.a_type = EndpointType::axis;
    iv.b = 1.0 / lambda;  // P_lo = x^{2n-1} (lambda x - 1)
  } else if (e > 0.0) {
    iv.a = bracketed_root(hi_me, points, 0.0, x_max);
    iv.a_type = EndpointType::turning_point;
  } else {
    iv.a = bracketed_root(lo_me, points, 0.0, critical);
    iv.a_type = EndpointType::turning_point;
  }
  return iv;
}

CmcParams dual_params(const CmcParams& params) {
  return CmcParams(params.dims(), -params.c(), -params.energy());
}

std::vector<double> make_grid(double lo, double hi, const GridSpec& grid) {
  const double slack = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
  if (grid.s_begin) {
    if (*grid.s_begin < lo - slack) throw DomainError("grid start lies outside the branch");
    lo = std::max(*grid.s_begin, lo);
  }
  if (grid.s_end) {
    if (*grid.s_end > hi + slack) throw DomainError("grid end lies outside the branch");
    hi = std::min(*grid.s_end, hi);
  }
  if (!(hi > lo)) throw DomainError("grid range is empty");
  if (grid.step) {
    const double step = *grid.step;
    if (!(step > 0.0)) throw DomainError("grid step must be positive");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    if (count < 3) throw DomainError("grid step leaves fewer than 3 samples");
    std::vector<double> s(count);
    for (std::size_t i = 0; i < count; ++i) s[i] = lo + step * static_cast<double>(i);
    return s;
  }
  if (grid.samples < 3) throw DomainError("grid needs at least 3 samples");
  return numerics::linspace(lo, hi, grid.samples);
}

CurveWithProfile sample_phase_curve(const PhaseMap& map, const std::vector<double>& s,
                                    double t0, kernels::Exec exec) {
  const auto& params = map.params();
  const double c = params.c();
  const double h_coeff = params.dims().two_n() - 2;
  const std::size_t count = s.size();

  const auto u = kernels::invert_arclength(map, s, exec);
  std::vector<double> x(count), t(count), theta(count);
  InvariantProfile p{std::vector<double>(count), std::vector<double>(count),
                     std::vector<double>(count)};
  for (std::size_t i = 0; i < count; ++i) {
    x[i] = map.radius(u[i]);
    const double xp = map.radial_velocity(u[i]);
    p.alpha[i] = xp / x[i];  // +-inf at axis contact
    p.k[i] = map.k_of_radius(x[i]);
    p.l[i] = c - h_coeff * p.k[i];
  }

  const auto cells = kernels::integrate_cells(map, u, exec);
  // t is anchored at the turning point / waist (s = 0), theta at the first sample.
  const double lead = numerics::integrate(
      [&](double v) {
        const double r = map.radius(v);
        return map.k_of_radius(r) * r * r * map.speed(v);
      },
      map.anchor(), u.front());
  double acc_t = lead;
  double acc_theta = 0.0;
  t[0] = t0 - acc_t;
  theta[0] = 0.0;
  for (std::size_t i = 0; i + 1 < count; ++i) {
    acc_t += cells.kx2_ds[i];
    acc_theta += cells.k_ds[i];
    t[i + 1] = t0 - acc_t;
    theta[i + 1] = acc_theta;
  }
  return {GeneratingCurve(s, std::move(x), std::move(t), std::move(theta)), std::move(p)};
}

std::pair<double, double> branch_range(double half, Branch branch) {
  switch (branch) {
    case Branch::plus: return {-half, 0.0};
    case Branch::minus: return {0.0, half};
    case Branch::both: break;
  }
  return {-half, half};
}

CurveWithProfile cylinder_curve(const CmcParams& params, Branch branch, const GridSpec& grid,
                                double t0) {
  const double radius = (params.dims().two_n() - 1) / params.c();
  const double k = 1.0 / radius;
  const auto [lo, hi] = branch_range(grid.unbounded_extent, branch);
  const auto s = make_grid(lo, hi, grid);
  const std::size_t count = s.size();
  std::vector<double> x(count, radius), t(count), theta(count);
  for (std::size_t i = 0; i < count; ++i) {
    t[i] = t0 - k * radius * radius * s[i];
    theta[i] = k * (s[i] - s.front());
  }
  InvariantProfile p{std::vector<double>(count, 0.0), std::vector<double>(count, k),
                     std::vector<double>(count, k)};
  return {GeneratingCurve(s, std::move(x), std::move(t), std::move(theta)), std::move(p)};
}

}  // namespace

AdmissibleInterval admissible_interval(const CmcParams& params) {
  if (params.c() > 0.0) return positive_c_interval(params);
  if (params.c() < 0.0) {
    const double upper = energy_upper_bound(params.dims(), params.c());
    if (params.energy() > upper + collapse_tolerance(upper)) {
      throw InfeasibleError("energy " + std::to_string(params.energy()) +
                            " exceeds the optimal upper bound " + std::to_string(upper) +
                            " for c = " + std::to_string(params.c()));
    }
    return positive_c_interval(dual_params(params));
  }
  const double e = params.energy();
  AdmissibleInterval iv;
  iv.b = std::numeric_limits<double>::infinity();
  iv.b_type = EndpointType::unbounded;
  if (e == 0.0) {
    iv.a = 0.0;
    iv.a_type = EndpointType::axis;
  } else {
    iv.a = std::pow(std::abs(e), 1.0 / (params.dims().two_n() - 1));
    iv.a_type = EndpointType::turning_point;
  }
  return iv;
}

double arclength_of_radius(const CmcParams& params, double x, double x_ref) {
  const CmcParams p = params.c() < 0.0 ? dual_params(params) : params;
  const auto iv = admissible_interval(p);
  if (iv.collapsed()) throw DomainError("arclength is undefined on a collapsed interval");
  const PhaseMap map(p, iv);
  return map.arclength(map.phase_of_radius(x_ref), map.phase_of_radius(x));
}

double radius_of_arclength(const CmcParams& params, double s, double x_ref) {
  const CmcParams p = params.c() < 0.0 ? dual_params(params) : params;
  const auto iv = admissible_interval(p);
  if (iv.collapsed()) throw DomainError("arclength is undefined on a collapsed interval");
  const PhaseMap map(p, iv);
  return map.radius(map.solve_plus_branch(map.phase_of_radius(x_ref), s));
}

CurveWithProfile cmc_generating_curve(const CmcParams& params, Branch branch,
                                      const GridSpec& grid, double t0, kernels::Exec exec) {
  if (params.c() == 0.0) {
    throw DomainError("c = 0 is the p-minimal case; use minimal_generating_curve");
  }
  if (params.c() < 0.0) return negative_c_dual(params, branch, grid, t0, exec);

  const auto iv = admissible_interval(params);
  if (iv.collapsed()) return cylinder_curve(params, branch, grid, t0);
  const PhaseMap map(params, iv);
  const auto [lo, hi] = branch_range(map.half_period(), branch);
  return sample_phase_curve(map, make_grid(lo, hi, grid), t0, exec);
}

CurveWithProfile minimal_generating_curve(GroupDims dims, double energy, Branch branch,
                                          const GridSpec& grid, double t0, kernels::Exec exec) {
  const CmcParams params(dims, 0.0, energy);
  const auto iv = admissible_interval(params);
  const PhaseMap map(params, iv);
  // With the waist on the axis both halves are the same plane.
  if (iv.a_type == EndpointType::axis && branch == Branch::both) branch = Branch::plus;
  const double extent = grid.unbounded_extent;
  double lo = -extent, hi = extent;
  if (branch == Branch::plus) lo = 0.0;
  if (branch == Branch::minus) hi = 0.0;
  return sample_phase_curve(map, make_grid(lo, hi, grid), t0, exec);
}

CurveWithProfile negative_c_dual(const CmcParams& params, Branch branch, const GridSpec& grid,
                                 double t0, kernels::Exec exec) {
  if (!(params.c() < 0.0)) throw DomainError("the dual description needs c < 0");
  // Validates E against the upper bound.
  (void)admissible_interval(params);
  auto dual = cmc_generating_curve(dual_params(params), branch, grid, -t0, exec);
  return {mirror_curve(dual.curve), mirror_profile(dual.profile)};
}

CurveWithProfile generate_curve(const CmcParams& params, Branch branch, const GridSpec& grid,
                                double t0, kernels::Exec exec) {
  if (params.c() == 0.0) {
    return minimal_generating_curve(params.dims(), params.energy(), branch, grid, t0, exec);
  }
  return cmc_generating_curve(params, branch, grid, t0, exec);
}

double closed_form_n1_cmc(double c, double energy, double s, double phase) {
  if (!(c > 0.0)) throw DomainError("closed form needs c > 0");
  const double disc = 2.0 * c * energy + 1.0;
  if (disc < 0.0) throw DomainError("closed form needs 2cE + 1 >= 0");
  return 2.0 * std::sqrt(disc) / (c * c) * std::sin(c * s + phase) +
         (2.0 * c * energy + 2.0) / (c * c);
}

double closed_form_n1_minimal(double energy, double s, double c1) {
  return (s + c1) * (s + c1) + energy * energy;
}

}  // namespace heis
