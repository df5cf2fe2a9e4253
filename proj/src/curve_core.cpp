#include "heis/curve_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "heis/errors.hpp"
#include "heis/numerics.hpp"

namespace heis {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_paired(const GeneratingCurve& curve, const InvariantProfile& profile) {
  if (profile.alpha.size() != curve.size() || profile.k.size() != curve.size() ||
      profile.l.size() != curve.size()) {
    throw DomainError("invariant profile is not paired with the curve grid");
  }
}

}  // namespace

double pansu_height(double lambda, double rho) {
  if (!(lambda > 0.0)) throw DomainError("Pansu sphere needs lambda > 0");
  if (rho < 0.0) throw DomainError("Pansu height needs rho >= 0");
  const double lr = lambda * rho;
  if (lr > 1.0) throw DomainError("rho lies beyond the Pansu sphere equator 1/lambda");
  return (lr * std::sqrt(1.0 - lr * lr) + std::acos(lr)) / (2.0 * lambda * lambda);
}

InvariantProfile invariants_from_curve(const GeneratingCurve& curve) {
  if (curve.size() < 3) throw DomainError("invariants need at least 3 samples");
  const auto s = curve.s();
  const auto x = curve.x();
  const auto t = curve.t();
  const auto dx = numerics::derivative(s, x);
  const auto dt = numerics::derivative(s, t);
  const auto ddx = numerics::second_derivative(s, x);
  const auto ddt = numerics::second_derivative(s, t);

  const std::size_t n = curve.size();
  InvariantProfile p{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0.0) {
      p.alpha[i] = p.k[i] = p.l[i] = kNaN;
      continue;
    }
    const double xx = x[i] * dx[i];
    const double w = std::sqrt(xx * xx + dt[i] * dt[i]);
    if (w == 0.0) throw DomainError("curve is stationary at index " + std::to_string(i));
    p.alpha[i] = dx[i] / w;
    p.k[i] = -dt[i] / (x[i] * w);
    const double x3 = x[i] * x[i] * x[i];
    p.l[i] = (-(dt[i] * dt[i] * dt[i]) - x3 * (dx[i] * ddt[i] - ddx[i] * dt[i])) /
             (x[i] * w * w * w);
  }
  return p;
}

std::vector<double> l_from_alpha_k(const GeneratingCurve& curve, std::span<const double> alpha,
                                   std::span<const double> k) {
  if (alpha.size() != curve.size() || k.size() != curve.size()) {
    throw DomainError("alpha/k are not sampled on the curve grid");
  }
  const auto s = curve.s();
  const auto x = curve.x();
  const auto dk = numerics::derivative(s, k);
  const auto dalpha = numerics::derivative(s, alpha);
  std::vector<double> l(curve.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    l[i] = k[i] + (alpha[i] * dk[i] - k[i] * dalpha[i]) * x[i] * x[i];
  }
  return l;
}

double pmean_from_kl(GroupDims dims, double k, double l) {
  return l + static_cast<double>(dims.two_n() - 2) * k;
}

std::vector<double> pmean_profile(GroupDims dims, const InvariantProfile& profile) {
  std::vector<double> h(profile.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = pmean_from_kl(dims, profile.k[i], profile.l[i]);
  return h;
}

double energy_from_state(const CmcParams& params, double x, double k) {
  if (!(x > 0.0)) throw DomainError("energy needs x > 0");
  return (params.lambda() - k) * std::pow(x, params.dims().two_n());
}

std::vector<double> energy_profile(const GeneratingCurve& curve, const InvariantProfile& profile,
                                   const CmcParams& params) {
  if (profile.k.size() != curve.size()) {
    throw DomainError("invariant profile is not paired with the curve grid");
  }
  const auto x = curve.x();
  std::vector<double> e(curve.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = (x[i] == 0.0) ? kNaN : energy_from_state(params, x[i], profile.k[i]);
  }
  return e;
}

CodazziResiduals codazzi_residuals(const GeneratingCurve& curve,
                                   const InvariantProfile& profile) {
  require_paired(curve, profile);
  if (curve.size() < 3) throw DomainError("Codazzi residuals need at least 3 samples");
  const auto dk = numerics::derivative(curve.s(), profile.k);
  const auto dalpha = numerics::derivative(curve.s(), profile.alpha);
  CodazziResiduals r{std::vector<double>(curve.size()), std::vector<double>(curve.size())};
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double a = profile.alpha[i];
    const double k = profile.k[i];
    const double l = profile.l[i];
    r.k_equation[i] = dk[i] - (l - 2.0 * k) * a;
    r.alpha_equation[i] = dalpha[i] - (k * k - k * l - a * a);
  }
  return r;
}

std::vector<double> arclength_defect(const GeneratingCurve& curve) {
  if (curve.size() < 3) throw DomainError("arclength check needs at least 3 samples");
  const auto x = curve.x();
  const auto dx = numerics::derivative(curve.s(), x);
  const auto dt = numerics::derivative(curve.s(), curve.t());
  std::vector<double> d(curve.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (x[i] == 0.0) {
      d[i] = kNaN;
      continue;
    }
    const double xx = x[i] * dx[i];
    d[i] = (xx * xx + dt[i] * dt[i]) / (x[i] * x[i]) - 1.0;
  }
  return d;
}

std::vector<double> integrability_defect(const GeneratingCurve& curve,
                                         const InvariantProfile& profile) {
  require_paired(curve, profile);
  const auto x = curve.x();
  std::vector<double> d(curve.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double a = profile.alpha[i];
    const double k = profile.k[i];
    d[i] = x[i] * x[i] * (a * a + k * k) - 1.0;
  }
  return d;
}

std::vector<bool> interior_mask(const GeneratingCurve& curve, const InvariantProfile& profile,
                                double axis_band) {
  require_paired(curve, profile);
  const auto x = curve.x();
  const double x_max = *std::max_element(x.begin(), x.end());
  const std::size_t n = curve.size();
  std::vector<bool> mask(n, false);
  for (std::size_t i = 2; i + 2 < n; ++i) {
    bool ok = x[i] >= axis_band * x_max;
    for (std::size_t j = i - 2; ok && j <= i + 2; ++j) {
      ok = std::isfinite(profile.alpha[j]) && std::isfinite(profile.k[j]) &&
           std::isfinite(profile.l[j]);
    }
    mask[i] = ok;
  }
  return mask;
}

double masked_max_abs(std::span<const double> v, const std::vector<bool>& mask) {
  double m = 0.0;
  for (std::size_t i = 0; i < v.size() && i < mask.size(); ++i) {
    if (mask[i] && std::isfinite(v[i])) m = std::max(m, std::abs(v[i]));
  }
  return m;
}

}  // namespace heis
