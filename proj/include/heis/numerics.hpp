#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace heis::numerics {

// True when the spacing of `s` is constant to `rel_tol` of the mean step.
bool is_uniform(std::span<const double> s, double rel_tol = 1e-9);

// Evenly spaced samples, first == lo and last == hi exactly.
std::vector<double> linspace(double lo, double hi, std::size_t count);

/// Discrete first derivative of f with respect to s.
///
/// Uniform grids: fourth-order central differences where the five-point
/// stencil fits and fourth-order one-sided stencils for the two samples at
/// each end (second order when the grid is too short for them). Non-uniform
/// grids fall back to three-point Lagrange formulas. Requires at least 3 samples.
std::vector<double> derivative(std::span<const double> s, std::span<const double> f);

// Discrete second derivative; same stencil layout as derivative() (six-point ends).
std::vector<double> second_derivative(std::span<const double> s, std::span<const double> f);

/// Running integral F[i] = int_{s[0]}^{s[i]} f ds, F[0] = 0.
///
/// Uniform grids with >= 4 samples integrate each cell with the cubic
/// through the four nearest samples (Simpson order, O(h^4)); 3 samples use
/// the quadratic rule; otherwise the trapezoid rule.
std::vector<double> cumulative_integral(std::span<const double> s, std::span<const double> f);

// Adaptive Gauss-Kronrod (15 point) quadrature of a smooth integrand.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-13);

// Bracketed root of f on [lo, hi]; f(lo) and f(hi) must not share a sign.
double find_root(const std::function<double(double)>& f, double lo, double hi);
double find_root(const std::function<double(double)>& f, double lo, double hi, double f_lo,
                 double f_hi);

// Horner evaluation, coefficients in ascending degree.
double polyval(std::span<const double> coeffs, double x);

// Quotient of p(x) / (x - root), remainder discarded.
std::vector<double> deflate(std::span<const double> coeffs, double root);

}  // namespace heis::numerics
