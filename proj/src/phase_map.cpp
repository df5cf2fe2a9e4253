#include "heis/phase_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "heis/errors.hpp"
#include "heis/numerics.hpp"

namespace heis {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kPi = std::numbers::pi;

// Relative slack when a target arclength sits exactly on a branch end.
constexpr double kEndSlack = 1e-12;

std::vector<double> shifted_poly(int n, double lambda, double odd_sign, double energy) {
  std::vector<double> p(2 * n + 1, 0.0);
  p[2 * n] = lambda;
  p[2 * n - 1] = odd_sign;
  p[0] -= energy;
  return p;
}

std::vector<double> negated(std::vector<double> p) {
  for (auto& v : p) v = -v;
  return p;
}

}  // namespace

PhaseMap::PhaseMap(const CmcParams& params, const AdmissibleInterval& interval)
    : params_(params), interval_(interval) {
  if (params.c() < 0.0) throw DomainError("phase map needs c >= 0; use the dual problem");
  if (interval.collapsed()) throw DomainError("collapsed interval has no phase map");
  const int n = params.n();
  const double lambda = params.lambda();
  const double e = params.energy();
  bounded_ = interval.bounded();

  // P - E for the two bounding polynomials.
  const auto lo_me = shifted_poly(n, lambda, -1.0, e);
  const auto hi_me = shifted_poly(n, lambda, +1.0, e);
  // The lower end is a root of P_hi - E for E >= 0 (the axis when E = 0), of P_lo - E otherwise.
  const bool a_from_hi = e >= 0.0;
  const double a = interval.a;

  if (e == 0.0) {
    // N = x^{4n-2} (1 + lambda x)(1 - lambda x): the axis root has multiplicity
    // 4n - 2, so divide it out exactly and keep sqrt(x) as the numerator.
    axis_root_ = true;
    factor_a_ = {1.0, lambda};
    factor_b_ = bounded_ ? std::vector<double>{lambda} : std::vector<double>{1.0};
    if (bounded_) {
      mid_ = 0.5 * (a + interval.b);
      half_ = 0.5 * (interval.b - a);
      half_period_ = arclength(-kHalfPi, kHalfPi);
    }
    return;
  }

  if (bounded_) {
    const double b = interval.b;
    mid_ = 0.5 * (a + b);
    half_ = 0.5 * (b - a);
    if (a_from_hi) {
      factor_a_ = numerics::deflate(hi_me, a);
      factor_b_ = numerics::deflate(lo_me, b);
    } else {
      factor_a_ = hi_me;
      factor_b_ = numerics::deflate(numerics::deflate(lo_me, a), b);
    }
    half_period_ = arclength(-kHalfPi, kHalfPi);
  } else {
    if (a_from_hi) {
      factor_a_ = numerics::deflate(hi_me, a);
      factor_b_ = negated(lo_me);
    } else {
      factor_a_ = hi_me;
      factor_b_ = negated(numerics::deflate(lo_me, a));
    }
  }
}

double PhaseMap::anchor() const { return bounded_ ? kHalfPi : 0.0; }

double PhaseMap::phase_lo() const {
  return bounded_ ? -kHalfPi : -std::numeric_limits<double>::infinity();
}

double PhaseMap::phase_hi() const {
  return bounded_ ? 3.0 * kHalfPi : std::numeric_limits<double>::infinity();
}

double PhaseMap::w_factor(double x) const {
  const double w = numerics::polyval(factor_a_, x) * numerics::polyval(factor_b_, x);
  return std::max(w, 0.0);
}

double PhaseMap::x_pow_odd(double x) const {
  return axis_root_ ? std::sqrt(x) : std::pow(x, params_.dims().two_n() - 1);
}

double PhaseMap::radius(double u) const {
  if (bounded_) {
    if (u <= -kHalfPi || u >= 3.0 * kHalfPi) return interval_.a;
    if (u == kHalfPi) return interval_.b;
    return std::clamp(mid_ + half_ * std::sin(u), interval_.a, interval_.b);
  }
  return interval_.a + u * u;
}

double PhaseMap::speed(double u) const {
  const double x = radius(u);
  if (x == 0.0) return 0.0;
  const double w = w_factor(x);
  const double v = x_pow_odd(x) / std::sqrt(w);
  return bounded_ ? v : 2.0 * v;
}

double PhaseMap::radial_velocity(double u) const {
  const double x = radius(u);
  if (x == 0.0) {
    // Axis contact only occurs for E = 0, where 1 - x^2 (E/x^{2n} - c/2n)^2 -> 1.
    return u < anchor() ? 1.0 : -1.0;
  }
  const double root_w = std::sqrt(w_factor(x));
  const double dxdu_factor = bounded_ ? half_ * std::cos(u) : u;
  return dxdu_factor * root_w / x_pow_odd(x);
}

double PhaseMap::k_of_radius(double x) const {
  const double e = params_.energy();
  if (e == 0.0) return params_.lambda();
  return params_.lambda() - e / std::pow(x, params_.dims().two_n());
}

double PhaseMap::arclength(double u0, double u1) const {
  return numerics::integrate([this](double u) { return speed(u); }, u0, u1);
}

double PhaseMap::phase_of_radius(double x) const {
  const double a = interval_.a;
  const double b = interval_.b;
  const double slack = kEndSlack * std::max(1.0, bounded_ ? b : a);
  if (!(x >= a - slack) || (bounded_ && !(x <= b + slack))) {
    throw DomainError("radius " + std::to_string(x) + " lies outside the admissible interval");
  }
  if (bounded_) return std::asin(std::clamp((x - mid_) / half_, -1.0, 1.0));
  return std::sqrt(std::max(0.0, x - a));
}

double PhaseMap::solve_between(double u_ref, double s, double lo, double hi) const {
  auto f = [&](double u) { return arclength(u_ref, u) - s; };
  double f_lo = f(lo);
  double f_hi = f(hi);
  const double slack = kEndSlack * (1.0 + std::abs(s));
  if (f_lo > 0.0) {
    if (f_lo <= slack) return lo;
    throw DomainError("arclength " + std::to_string(s) + " lies before the branch start");
  }
  if (f_hi < 0.0) {
    if (-f_hi <= slack) return hi;
    throw DomainError("arclength " + std::to_string(s) + " lies past the branch end");
  }
  return numerics::find_root(f, lo, hi, f_lo, f_hi);
}

double PhaseMap::grow_unbounded(double u_ref, double s) const {
  double width = std::max(1.0, std::sqrt(std::abs(s)));
  while (arclength(u_ref, u_ref + width) < s) width *= 2.0;
  return u_ref + width;
}

double PhaseMap::solve_phase(double s) const {
  if (bounded_) {
    const double len = half_period_;
    if (std::abs(s) > len * (1.0 + kEndSlack)) {
      throw DomainError("arclength " + std::to_string(s) + " lies outside [-" +
                        std::to_string(len) + ", " + std::to_string(len) + "]");
    }
    // The integrand is symmetric about the anchor, so the - branch mirrors the + branch.
    const double target = -std::abs(s);
    auto f = [&](double u) { return arclength(kHalfPi, u) - target; };
    double u;
    if (target <= -len) {
      u = -kHalfPi;
    } else if (target == 0.0) {
      u = kHalfPi;
    } else {
      u = numerics::find_root(f, -kHalfPi, kHalfPi, -len - target, -target);
    }
    return s > 0.0 ? kPi - u : u;
  }
  const double target = std::abs(s);
  if (target == 0.0) return 0.0;
  const double hi = grow_unbounded(0.0, target);
  const double u = solve_between(0.0, target, 0.0, hi);
  return s < 0.0 ? -u : u;
}

double PhaseMap::solve_phase_from(double u0, double ds) const {
  if (ds < 0.0) throw DomainError("phase march needs a non-negative step");
  if (ds == 0.0) return u0;
  auto f = [&](double u) { return arclength(u0, u) - ds; };
  const double limit = phase_hi();
  const double sp = speed(u0);
  double width = sp > 0.0 ? 2.0 * ds / sp : 0.1;
  double hi = std::min(u0 + width, limit);
  double f_hi = f(hi);
  while (f_hi < 0.0) {
    if (hi == limit) {
      if (-f_hi <= kEndSlack * (1.0 + ds)) return hi;
      throw DomainError("phase march ran past the end of the curve");
    }
    width *= 2.0;
    hi = std::min(u0 + width, limit);
    f_hi = f(hi);
  }
  return numerics::find_root(f, u0, hi, -ds, f_hi);
}

double PhaseMap::solve_plus_branch(double u_ref, double s) const {
  if (bounded_) return solve_between(u_ref, s, -kHalfPi, kHalfPi);
  const double hi = s > 0.0 ? grow_unbounded(u_ref, s) : u_ref;
  return solve_between(u_ref, s, 0.0, std::max(hi, u_ref));
}

}  // namespace heis
