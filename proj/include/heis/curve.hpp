#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace heis {

// Default validation tolerances; every operation that uses them takes an override.
inline constexpr double kAlgebraicTol = 1e-8;
inline constexpr double kFiniteDifferenceTol = 1e-4;

// CR dimension n of the Heisenberg group H_n.
class GroupDims {
 public:
  explicit GroupDims(int n);

  int n() const { return n_; }
  // 2n, the exponent in the energy E = (lambda - k) x^{2n}.
  int two_n() const { return 2 * n_; }

  friend bool operator==(GroupDims, GroupDims) = default;

 private:
  int n_;
};

/// Sampled generating curve (x(s), t(s)) in the x_n t-plane, with the
/// optional angle theta(s) of its horizontal lift (x cos theta, x sin theta, t).
///
/// Construction enforces the structural invariants: equal lengths >= 2,
/// strictly increasing s, finite samples, x > 0 in the interior and x >= 0
/// at the two ends (axis contact). Whether s is horizontal arc-length is a
/// separate check, see arclength_defect().
class GeneratingCurve {
 public:
  GeneratingCurve(std::vector<double> s, std::vector<double> x, std::vector<double> t,
                  std::optional<std::vector<double>> theta = std::nullopt);

  std::size_t size() const { return s_.size(); }
  std::span<const double> s() const { return s_; }
  std::span<const double> x() const { return x_; }
  std::span<const double> t() const { return t_; }
  bool has_theta() const { return theta_.has_value(); }
  std::span<const double> theta() const;

  GeneratingCurve with_theta(std::vector<double> theta) const;

  // True if x vanishes at the first/last sample.
  bool touches_axis_front() const { return x_.front() == 0.0; }
  bool touches_axis_back() const { return x_.back() == 0.0; }

 private:
  std::vector<double> s_, x_, t_;
  std::optional<std::vector<double>> theta_;
};

// Invariant functions alpha, k, l sampled on the grid of an associated curve.
// Non-finite entries mark axis-contact endpoints where alpha and k diverge.
struct InvariantProfile {
  std::vector<double> alpha;
  std::vector<double> k;
  std::vector<double> l;

  std::size_t size() const { return alpha.size(); }
};

// Constant p-mean curvature problem data. lambda = c / (2n).
class CmcParams {
 public:
  CmcParams(GroupDims dims, double c, double energy = 0.0);

  GroupDims dims() const { return dims_; }
  int n() const { return dims_.n(); }
  double c() const { return c_; }
  double lambda() const { return lambda_; }
  double energy() const { return energy_; }

  CmcParams with_energy(double energy) const { return CmcParams(dims_, c_, energy); }

 private:
  GroupDims dims_;
  double c_;
  double lambda_;
  double energy_;
};

struct CurveWithProfile {
  GeneratingCurve curve;
  InvariantProfile profile;
};

}  // namespace heis
