#include "heis/curve.hpp"

#include <cmath>
#include <string>

#include "heis/errors.hpp"

namespace heis {

GroupDims::GroupDims(int n) : n_(n) {
  if (n < 1) throw DomainError("CR dimension n must be >= 1, got " + std::to_string(n));
}

GeneratingCurve::GeneratingCurve(std::vector<double> s, std::vector<double> x,
                                 std::vector<double> t, std::optional<std::vector<double>> theta)
    : s_(std::move(s)), x_(std::move(x)), t_(std::move(t)), theta_(std::move(theta)) {
  const std::size_t n = s_.size();
  if (n < 2) throw DomainError("generating curve needs at least 2 samples");
  if (x_.size() != n || t_.size() != n || (theta_ && theta_->size() != n)) {
    throw DomainError("generating curve columns differ in length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(s_[i]) || !std::isfinite(x_[i]) || !std::isfinite(t_[i]) ||
        (theta_ && !std::isfinite((*theta_)[i]))) {
      throw DomainError("generating curve has a non-finite sample at index " +
                        std::to_string(i));
    }
    if (i > 0 && !(s_[i] > s_[i - 1])) {
      throw DomainError("curve parameter must be strictly increasing");
    }
    const bool end = (i == 0 || i + 1 == n);
    if (x_[i] < 0.0 || (!end && x_[i] == 0.0)) {
      throw DomainError("x must be positive away from the curve ends (index " +
                        std::to_string(i) + ")");
    }
  }
}

std::span<const double> GeneratingCurve::theta() const {
  if (!theta_) throw DomainError("curve carries no theta column");
  return *theta_;
}

GeneratingCurve GeneratingCurve::with_theta(std::vector<double> theta) const {
  return GeneratingCurve(s_, x_, t_, std::move(theta));
}

CmcParams::CmcParams(GroupDims dims, double c, double energy)
    : dims_(dims), c_(c), lambda_(c / static_cast<double>(dims.two_n())), energy_(energy) {
  if (!std::isfinite(c) || !std::isfinite(energy)) {
    throw DomainError("p-mean curvature and energy must be finite");
  }
}

}  // namespace heis
