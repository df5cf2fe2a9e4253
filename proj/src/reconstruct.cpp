#include "heis/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "heis/errors.hpp"
#include "heis/numerics.hpp"

namespace heis {

namespace {

void check_grid(std::span<const double> s) {
  if (s.size() < 2) throw DomainError("prescribed profile needs at least 2 samples");
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!(s[i] > s[i - 1])) throw DomainError("prescribed grid must be strictly increasing");
  }
}

std::vector<double> radius_from_alpha(std::span<const double> s, std::span<const double> alpha,
                                      double x0) {
  const auto integral = numerics::cumulative_integral(s, alpha);
  std::vector<double> x(s.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = x0 * std::exp(integral[i]);
  return x;
}

}  // namespace

GeneratingCurve reconstruct_from_alpha_k(const PrescribedProfile& profile, double t0, double tol) {
  const auto& s = profile.s;
  check_grid(s);
  if (profile.alpha.size() != s.size() || profile.k.size() != s.size()) {
    throw DomainError("alpha and k must be sampled on the prescribed grid");
  }
  const double a0 = profile.alpha.front();
  const double k0 = profile.k.front();
  const double norm0 = a0 * a0 + k0 * k0;
  if (!(norm0 > 0.0) || !std::isfinite(norm0)) {
    throw InfeasibleError("alpha^2 + k^2 must be positive at the first sample");
  }
  const double x0 = 1.0 / std::sqrt(norm0);
  const auto x = radius_from_alpha(s, profile.alpha, x0);

  std::vector<double> kx2(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double a = profile.alpha[i];
    const double k = profile.k[i];
    const double defect = x[i] * x[i] * (a * a + k * k) - 1.0;
    if (!(std::abs(defect) <= tol)) {
      throw InfeasibleError("integrability condition x^2 (alpha^2 + k^2) = 1 fails at s = " +
                            std::to_string(s[i]) + " (defect " + std::to_string(defect) + ")");
    }
    kx2[i] = k * x[i] * x[i];
  }

  const auto tk = numerics::cumulative_integral(s, kx2);
  std::vector<double> t(s.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = t0 - tk[i];
  auto theta = numerics::cumulative_integral(s, profile.k);
  return GeneratingCurve(s, x, std::move(t), std::move(theta));
}

std::vector<double> k_from_alpha(std::span<const double> s, std::span<const double> alpha,
                                 double x0, int sign, double clamp) {
  check_grid(s);
  if (alpha.size() != s.size()) throw DomainError("alpha must be sampled on the grid");
  if (!(x0 > 0.0)) throw DomainError("gauge radius x0 must be positive");
  if (sign != 1 && sign != -1) throw DomainError("k sign must be +1 or -1");

  const auto x = radius_from_alpha(s, alpha, x0);
  std::vector<double> k(s.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    // x^2 (1/x^2 - alpha^2), dimensionless
    double v = 1.0 - x[i] * x[i] * alpha[i] * alpha[i];
    if (v < -clamp) {
      throw InfeasibleError("1/x^2 - alpha^2 < 0 at s = " + std::to_string(s[i]) +
                            "; no real k exists for this gauge");
    }
    v = std::max(v, 0.0);
    k[i] = sign * std::sqrt(v) / x[i];
  }
  return k;
}

std::vector<double> theta_from_curve(const GeneratingCurve& curve) {
  if (curve.size() < 3) throw DomainError("theta needs at least 3 samples");
  const auto x = curve.x();
  const auto dt = numerics::derivative(curve.s(), curve.t());
  const std::size_t n = curve.size();
  std::vector<double> rate(n);
  for (std::size_t i = 0; i < n; ++i) {
    rate[i] = (x[i] == 0.0) ? 0.0 : -dt[i] / (x[i] * x[i]);
  }
  // Axis-contact ends: the rate is a 0/0 limit, extrapolate it from the neighbours.
  if (n >= 4) {
    if (x[0] == 0.0) rate[0] = 3.0 * rate[1] - 3.0 * rate[2] + rate[3];
    if (x[n - 1] == 0.0) rate[n - 1] = 3.0 * rate[n - 2] - 3.0 * rate[n - 3] + rate[n - 4];
  } else if (x[0] == 0.0 || x[n - 1] == 0.0) {
    throw DomainError("theta at an axis contact needs at least 4 samples");
  }
  return numerics::cumulative_integral(curve.s(), rate);
}

std::vector<double> theta_from_profile(const GeneratingCurve& curve, std::span<const double> k) {
  if (k.size() != curve.size()) throw DomainError("k must be sampled on the curve grid");
  return numerics::cumulative_integral(curve.s(), k);
}

GeneratingCurve reflect_curve(const GeneratingCurve& curve) {
  const std::size_t n = curve.size();
  std::vector<double> s(n), x(n), t(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = n - 1 - i;
    s[i] = -curve.s()[j];
    x[i] = curve.x()[j];
    t[i] = -curve.t()[j];
  }
  std::optional<std::vector<double>> theta;
  if (curve.has_theta()) {
    const auto th = curve.theta();
    theta.emplace(n);
    for (std::size_t i = 0; i < n; ++i) (*theta)[i] = th[n - 1] - th[n - 1 - i];
  }
  return GeneratingCurve(std::move(s), std::move(x), std::move(t), std::move(theta));
}

InvariantProfile reflect_profile(const InvariantProfile& p) {
  InvariantProfile r{{p.alpha.rbegin(), p.alpha.rend()},
                     {p.k.rbegin(), p.k.rend()},
                     {p.l.rbegin(), p.l.rend()}};
  for (auto& a : r.alpha) a = -a;
  return r;
}

GeneratingCurve mirror_curve(const GeneratingCurve& curve) {
  std::vector<double> t(curve.t().begin(), curve.t().end());
  for (auto& v : t) v = -v;
  std::optional<std::vector<double>> theta;
  if (curve.has_theta()) {
    theta.emplace(curve.theta().begin(), curve.theta().end());
    for (auto& v : *theta) v = -v;
  }
  return GeneratingCurve({curve.s().begin(), curve.s().end()},
                         {curve.x().begin(), curve.x().end()}, std::move(t), std::move(theta));
}

InvariantProfile mirror_profile(const InvariantProfile& p) {
  InvariantProfile r = p;
  for (auto& v : r.k) v = -v;
  for (auto& v : r.l) v = -v;
  return r;
}

}  // namespace heis
