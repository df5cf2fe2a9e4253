#include "heis/kernels.hpp"

#include <cmath>
#include <cstddef>
#include <exception>
#include <numbers>

#include "heis/errors.hpp"
#include "heis/numerics.hpp"
#include "heis/phase_map.hpp"

namespace heis::kernels {

namespace {

std::ptrdiff_t signed_size(std::size_t n) { return static_cast<std::ptrdiff_t>(n); }

// Exceptions must not escape an OpenMP region; keep the first one and rethrow after the loop.
class FirstError {
 public:
  template <class Fn>
  void run(Fn&& fn) {
    try {
      fn();
    } catch (...) {
#pragma omp critical(heis_kernel_error)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

void cell(const PhaseMap& map, double u0, double u1, double& k_ds, double& kx2_ds) {
  k_ds = numerics::integrate(
      [&](double u) { return map.k_of_radius(map.radius(u)) * map.speed(u); }, u0, u1);
  kx2_ds = numerics::integrate(
      [&](double u) {
        const double x = map.radius(u);
        return map.k_of_radius(x) * x * x * map.speed(u);
      },
      u0, u1);
}

}  // namespace

std::vector<double> invert_arclength(const PhaseMap& map, std::span<const double> s, Exec exec) {
  const std::size_t n = s.size();
  std::vector<double> u(n);
  if (n == 0) return u;

  if (exec == Exec::serial) {
    u[0] = map.solve_phase(s[0]);
    for (std::size_t i = 1; i < n; ++i) {
      if (!(s[i] >= s[i - 1])) throw DomainError("arclength targets must be increasing");
      u[i] = map.solve_phase_from(u[i - 1], s[i] - s[i - 1]);
    }
    return u;
  }

  FirstError error;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < signed_size(n); ++i) {
    error.run([&] { u[i] = map.solve_phase(s[i]); });
  }
  error.rethrow();
  return u;
}

CellIntegrals integrate_cells(const PhaseMap& map, std::span<const double> u, Exec exec) {
  const std::size_t cells = u.empty() ? 0 : u.size() - 1;
  CellIntegrals out{std::vector<double>(cells), std::vector<double>(cells)};

  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < cells; ++i) cell(map, u[i], u[i + 1], out.k_ds[i], out.kx2_ds[i]);
    return out;
  }

  FirstError error;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < signed_size(cells); ++i) {
    error.run([&] { cell(map, u[i], u[i + 1], out.k_ds[i], out.kx2_ds[i]); });
  }
  error.rethrow();
  return out;
}

std::vector<double> revolve_vertices(std::span<const double> x, std::span<const double> t,
                                     std::span<const double> theta, int segments, Exec exec) {
  const std::size_t rows = x.size();
  const std::size_t cols = static_cast<std::size_t>(segments);
  std::vector<double> v(rows * cols * 3);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(segments);

  auto fill_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double angle = step * static_cast<double>(j) + theta[i];
      double* p = &v[(i * cols + j) * 3];
      p[0] = x[i] * std::cos(angle);
      p[1] = x[i] * std::sin(angle);
      p[2] = t[i];
    }
  };

  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < rows; ++i) fill_row(i);
    return v;
  }

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < signed_size(rows); ++i) fill_row(static_cast<std::size_t>(i));
  return v;
}

}  // namespace heis::kernels
