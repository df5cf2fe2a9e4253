#include "heis/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "heis/errors.hpp"

namespace heis::numerics {

namespace {

void require_same_size(std::span<const double> s, std::span<const double> f, std::size_t min) {
  if (s.size() != f.size()) {
    throw DomainError("grid and samples differ in length");
  }
  if (s.size() < min) {
    throw DomainError("grid needs at least " + std::to_string(min) + " samples");
  }
}

double mean_step(std::span<const double> s) {
  return (s.back() - s.front()) / static_cast<double>(s.size() - 1);
}

}  // namespace

bool is_uniform(std::span<const double> s, double rel_tol) {
  if (s.size() < 3) return true;
  const double h = mean_step(s);
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (std::abs((s[i] - s[i - 1]) - h) > rel_tol * std::abs(h)) return false;
  }
  return true;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count < 2) throw DomainError("linspace needs at least 2 samples");
  std::vector<double> out(count);
  const double span = hi - lo;
  const double last = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = lo + span * (static_cast<double>(i) / last);
  }
  out.back() = hi;
  return out;
}

std::vector<double> derivative(std::span<const double> s, std::span<const double> f) {
  require_same_size(s, f, 3);
  const std::size_t n = f.size();
  std::vector<double> d(n);

  if (is_uniform(s)) {
    const double h = mean_step(s);
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (i >= 2 && i + 2 < n) {
        d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
      } else {
        d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
      }
    }
    if (n >= 5) {
      // Fourth-order one-sided stencils for the two samples at each end.
      const auto at = [&](std::size_t j, bool back) { return back ? f[n - 1 - j] : f[j]; };
      for (bool back : {false, true}) {
        const double sign = back ? -1.0 : 1.0;
        const double e0 = (-25.0 * at(0, back) + 48.0 * at(1, back) - 36.0 * at(2, back) +
                           16.0 * at(3, back) - 3.0 * at(4, back)) / (12.0 * h);
        const double e1 = (-3.0 * at(0, back) - 10.0 * at(1, back) + 18.0 * at(2, back) -
                           6.0 * at(3, back) + at(4, back)) / (12.0 * h);
        d[back ? n - 1 : 0] = sign * e0;
        d[back ? n - 2 : 1] = sign * e1;
      }
    }
    return d;
  }

  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h1 = s[i] - s[i - 1];
    const double h2 = s[i + 1] - s[i];
    d[i] = -h2 / (h1 * (h1 + h2)) * f[i - 1] + (h2 - h1) / (h1 * h2) * f[i] +
           h1 / (h2 * (h1 + h2)) * f[i + 1];
  }
  {
    const double h1 = s[1] - s[0];
    const double h2 = s[2] - s[1];
    d[0] = -(2.0 * h1 + h2) / (h1 * (h1 + h2)) * f[0] + (h1 + h2) / (h1 * h2) * f[1] -
           h1 / (h2 * (h1 + h2)) * f[2];
  }
  {
    const double h1 = s[n - 2] - s[n - 3];
    const double h2 = s[n - 1] - s[n - 2];
    d[n - 1] = h2 / (h1 * (h1 + h2)) * f[n - 3] - (h1 + h2) / (h1 * h2) * f[n - 2] +
               (h1 + 2.0 * h2) / (h2 * (h1 + h2)) * f[n - 1];
  }
  return d;
}

std::vector<double> second_derivative(std::span<const double> s, std::span<const double> f) {
  require_same_size(s, f, 3);
  const std::size_t n = f.size();
  std::vector<double> d(n);

  if (is_uniform(s)) {
    const double h = mean_step(s);
    const double h2 = h * h;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (i >= 2 && i + 2 < n) {
        d[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) /
               (12.0 * h2);
      } else {
        d[i] = (f[i - 1] - 2.0 * f[i] + f[i + 1]) / h2;
      }
    }
    if (n >= 6) {
      const auto at = [&](std::size_t j, bool back) { return back ? f[n - 1 - j] : f[j]; };
      for (bool back : {false, true}) {
        d[back ? n - 1 : 0] = (45.0 * at(0, back) - 154.0 * at(1, back) + 214.0 * at(2, back) -
                               156.0 * at(3, back) + 61.0 * at(4, back) - 10.0 * at(5, back)) /
                              (12.0 * h2);
        d[back ? n - 2 : 1] = (10.0 * at(0, back) - 15.0 * at(1, back) - 4.0 * at(2, back) +
                               14.0 * at(3, back) - 6.0 * at(4, back) + at(5, back)) /
                              (12.0 * h2);
      }
    } else if (n >= 4) {
      d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
      d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
    } else {
      d[0] = d[1];
      d[n - 1] = d[n - 2];
    }
    return d;
  }

  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h1 = s[i] - s[i - 1];
    const double h2 = s[i + 1] - s[i];
    d[i] = 2.0 * (f[i - 1] / (h1 * (h1 + h2)) - f[i] / (h1 * h2) + f[i + 1] / (h2 * (h1 + h2)));
  }
  d[0] = d[1];
  d[n - 1] = d[n - 2];
  return d;
}

std::vector<double> cumulative_integral(std::span<const double> s, std::span<const double> f) {
  require_same_size(s, f, 2);
  const std::size_t n = f.size();
  std::vector<double> out(n, 0.0);

  if (n >= 4 && is_uniform(s)) {
    const double h = mean_step(s);
    out[1] = h / 24.0 * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]);
    for (std::size_t i = 1; i + 2 < n; ++i) {
      out[i + 1] = out[i] + h / 24.0 * (-f[i - 1] + 13.0 * f[i] + 13.0 * f[i + 1] - f[i + 2]);
    }
    out[n - 1] = out[n - 2] +
                 h / 24.0 * (f[n - 4] - 5.0 * f[n - 3] + 19.0 * f[n - 2] + 9.0 * f[n - 1]);
    return out;
  }
  if (n == 3 && is_uniform(s)) {
    const double h = mean_step(s);
    out[1] = h / 12.0 * (5.0 * f[0] + 8.0 * f[1] - f[2]);
    out[2] = out[1] + h / 12.0 * (-f[0] + 8.0 * f[1] + 5.0 * f[2]);
    return out;
  }
  for (std::size_t i = 1; i < n; ++i) {
    out[i] = out[i - 1] + 0.5 * (s[i] - s[i - 1]) * (f[i] + f[i - 1]);
  }
  return out;
}

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  if (a == b) return 0.0;
  using boost::math::quadrature::gauss_kronrod;
  // Boost compares the error of the unscaled [-1, 1] rule against a width-scaled
  // tolerance, so short intervals never terminate. Integrate on [-1, 1] instead.
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const auto g = [&](double v) { return f(mid + half * v) * half; };
  return gauss_kronrod<double, 15>::integrate(g, -1.0, 1.0, 8, rel_tol);
}

double find_root(const std::function<double(double)>& f, double lo, double hi) {
  return find_root(f, lo, hi, f(lo), f(hi));
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double f_lo,
                 double f_hi) {
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw DomainError("root bracket does not enclose a sign change");
  }
  std::uintmax_t max_iter = 200;
  const auto bracket = boost::math::tools::toms748_solve(
      f, lo, hi, f_lo, f_hi, boost::math::tools::eps_tolerance<double>(52), max_iter);
  // Prefer the endpoint with the smaller residual over the bracket midpoint.
  const double r0 = std::abs(f(bracket.first));
  const double r1 = std::abs(f(bracket.second));
  return r0 <= r1 ? bracket.first : bracket.second;
}

double polyval(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<double> deflate(std::span<const double> coeffs, double root) {
  if (coeffs.size() < 2) throw DomainError("cannot deflate a constant polynomial");
  const std::size_t m = coeffs.size() - 1;
  std::vector<double> q(m);
  q[m - 1] = coeffs[m];
  for (std::size_t j = m - 1; j >= 1; --j) q[j - 1] = coeffs[j] + root * q[j];
  return q;
}

}  // namespace heis::numerics
