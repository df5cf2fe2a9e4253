#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "heis/curve_core.hpp"
#include "heis/errors.hpp"
#include "heis/numerics.hpp"
#include "heis/reconstruct.hpp"

namespace heis {
namespace {

const double kSqrt3 = std::sqrt(3.0);

PrescribedProfile example_profile(double k_sign, std::size_t n = 1001) {
  PrescribedProfile p;
  p.s = numerics::linspace(1.0, 2.0, n);
  for (double s : p.s) {
    p.alpha.push_back(1.0 / s);
    p.k.push_back(k_sign * kSqrt3 / s);
  }
  return p;
}

TEST(Reconstruct, Cylinder) {
  PrescribedProfile p;
  p.s = numerics::linspace(0.0, 3.0, 301);
  p.alpha.assign(p.s.size(), 0.0);
  p.k.assign(p.s.size(), 1.0);
  const auto c = reconstruct_from_alpha_k(p);
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_NEAR(c.x()[i], 1.0, 1e-15);
    EXPECT_NEAR(c.t()[i], -c.s()[i], 1e-13);
    EXPECT_NEAR(c.theta()[i], c.s()[i], 1e-13);
  }
}

TEST(Reconstruct, Example310BothSigns) {
  for (double sign : {-1.0, 1.0}) {
    const auto c = reconstruct_from_alpha_k(example_profile(sign));
    const double shift = c.t()[0] + sign * kSqrt3 / 8.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const double s = c.s()[i];
      EXPECT_NEAR(c.x()[i], s / 2.0, 1e-8);
      EXPECT_NEAR(c.t()[i] - shift, -sign * kSqrt3 / 8.0 * s * s, 1e-8);
    }
  }
}

TEST(Reconstruct, InfeasibleProfileThrows) {
  auto p = example_profile(-1.0);
  p.k.back() *= 1.1;
  EXPECT_THROW(reconstruct_from_alpha_k(p), InfeasibleError);
}

TEST(Reconstruct, TranslationInT0) {
  const auto p = example_profile(-1.0);
  const auto a = reconstruct_from_alpha_k(p, 0.0);
  const auto b = reconstruct_from_alpha_k(p, 2.5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(b.t()[i] - a.t()[i], 2.5, 1e-12);
    EXPECT_EQ(b.x()[i], a.x()[i]);
  }
}

TEST(KFromAlpha, Values) {
  const auto s = numerics::linspace(1.0, 2.0, 101);
  std::vector<double> zero(s.size(), 0.0), inv(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) inv[i] = 1.0 / s[i];

  for (double k : k_from_alpha(s, zero, 1.0, 1)) EXPECT_DOUBLE_EQ(k, 1.0);
  for (double k : k_from_alpha(s, zero, 1.0, -1)) EXPECT_DOUBLE_EQ(k, -1.0);

  const auto half = k_from_alpha(s, inv, 0.5, 1);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(half[i], kSqrt3 / s[i], 1e-9);

  const auto edge = k_from_alpha(s, inv, 1.0, 1, 1e-8);
  // The square root magnifies the quadrature defect near the degenerate gauge.
  for (double k : edge) EXPECT_NEAR(k, 0.0, 1e-4);

  EXPECT_THROW(k_from_alpha(s, inv, 1.5, 1), InfeasibleError);
  EXPECT_THROW(k_from_alpha(s, inv, 0.5, 0), DomainError);
}

TEST(KFromAlpha, SignsDifferByReflection) {
  const auto s = numerics::linspace(0.0, 1.0, 801);
  std::vector<double> alpha(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) alpha[i] = 0.3 * std::sin(2.0 * s[i]);
  PrescribedProfile plus{s, alpha, k_from_alpha(s, alpha, 1.0, 1)};
  PrescribedProfile minus{s, alpha, k_from_alpha(s, alpha, 1.0, -1)};
  const auto a = reconstruct_from_alpha_k(plus);
  const auto b = reconstruct_from_alpha_k(minus);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(a.x()[i], b.x()[i], 1e-15);
    EXPECT_NEAR(a.t()[i], -b.t()[i], 1e-13);
  }
}

TEST(Theta, FromCurve) {
  const auto s = numerics::linspace(0.0, 2.0, 201);
  std::vector<double> x(s.size(), 1.0), t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) t[i] = -s[i];
  const auto th = theta_from_curve(GeneratingCurve(s, x, t));
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(th[i], s[i], 1e-12);

  const auto c = reconstruct_from_alpha_k(example_profile(-1.0));
  const auto th2 = theta_from_curve(c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_NEAR(th2[i], -kSqrt3 * (std::log(c.x()[i]) - std::log(c.x()[0])), 1e-8);
  }
  const auto k = invariants_from_curve(c).k;
  const auto dth = numerics::derivative(c.s(), th2);
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_NEAR(dth[i], k[i], 1e-6);
}

TEST(Reflect, InvariantsAndInvolution) {
  const auto c = reconstruct_from_alpha_k(example_profile(-1.0));
  const auto r = reflect_curve(c);
  const auto pc = invariants_from_curve(c);
  const auto pr = invariants_from_curve(r);
  const auto expected = reflect_profile(pc);
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_NEAR(pr.k[i], expected.k[i], 1e-10);
    EXPECT_NEAR(pr.alpha[i], expected.alpha[i], 1e-10);
    EXPECT_NEAR(pr.l[i], expected.l[i], 1e-8);
  }
  const auto rr = reflect_curve(r);
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(rr.s()[i], c.s()[i]);
    EXPECT_EQ(rr.x()[i], c.x()[i]);
    EXPECT_EQ(rr.t()[i], c.t()[i]);
    EXPECT_NEAR(rr.theta()[i], c.theta()[i], 1e-14);
  }
}

TEST(Mirror, FlipsCurvatureSigns) {
  const auto c = reconstruct_from_alpha_k(example_profile(-1.0));
  const auto m = mirror_curve(c);
  const auto pc = invariants_from_curve(c);
  const auto pm = invariants_from_curve(m);
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_NEAR(pm.alpha[i], pc.alpha[i], 1e-12);
    EXPECT_NEAR(pm.k[i], -pc.k[i], 1e-12);
  }
}

}  // namespace
}  // namespace heis
