#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "slant/errors.hpp"
#include "slant/jet.hpp"
#include "test_support.hpp"

namespace slant {
namespace {

using testing::dist;
constexpr double kPi = std::numbers::pi;

TEST(FdJet, ConstantCurve) {
  const Jet3 j = fd_jet([](double) { return Vec3{1, 2, 3}; }, 0.7, 1e-3);
  EXPECT_EQ(j.d0, (Vec3{1, 2, 3}));
  EXPECT_LT(norm(j.d1), 1e-12);
  EXPECT_LT(norm(j.d2), 1e-12);
  EXPECT_LT(norm(j.d3), 1e-12);
  EXPECT_EQ(j.param, Param::u);
}

TEST(FdJet, LinearCurve) {
  const Jet3 j = fd_jet([](double t) { return Vec3{t, 2 * t, 3 * t}; }, 0.5, 1e-3);
  EXPECT_LT(dist(j.d1, {1, 2, 3}), 1e-10);
  EXPECT_LT(norm(j.d2), 1e-6);
  EXPECT_LT(norm(j.d3), 1e-3);
}

TEST(FdJet, UnitCircle) {
  const Jet3 j = fd_jet([](double t) { return Vec3{std::cos(t), std::sin(t), 0}; }, 0.0, 1e-3);
  EXPECT_LT(dist(j.d1, {0, 1, 0}), 1e-8);
  EXPECT_LT(dist(j.d2, {-1, 0, 0}), 1e-8);
  EXPECT_LT(dist(j.d3, {0, -1, 0}), 1e-5);
}

TEST(FdJet, ErrorOrders) {
  // Halving the step shrinks d1 error ~16x and d3 error ~4x on a smooth curve.
  auto curve = [](double t) { return Vec3{std::sin(2 * t), std::exp(t), t * t * t * t}; };
  const Vec3 d1{2 * std::cos(1.0), std::exp(0.5), 4 * 0.125};
  const Vec3 d3{-8 * std::cos(1.0), std::exp(0.5), 24 * 0.5};
  const Jet3 a = fd_jet(curve, 0.5, 0.04);
  const Jet3 b = fd_jet(curve, 0.5, 0.02);
  EXPECT_GT(dist(a.d1, d1) / dist(b.d1, d1), 12.0);
  EXPECT_GT(dist(a.d3, d3) / dist(b.d3, d3), 3.5);
}

TEST(FdJet, NonFiniteSampleThrows) {
  EXPECT_THROW(fd_jet([](double) { return Vec3{std::numeric_limits<double>::quiet_NaN(), 0, 0}; }, 0, 1e-3),
               NonFiniteSample);
  EXPECT_THROW(fd_jet([](double t) { return Vec3{std::log(t), 0, 0}; }, 0.0005, 1e-3), NonFiniteSample);
}

Jet3 circle_jet(double u, double beta) {
  const double c = std::cos(beta), s = std::sin(beta);
  return {{c * std::cos(u), c * std::sin(u), s},
          {-c * std::sin(u), c * std::cos(u), 0},
          {-c * std::cos(u), -c * std::sin(u), 0},
          {c * std::sin(u), -c * std::cos(u), 0},
          Param::u};
}

TEST(S1Derivatives, HelicoidDirector) {
  const S1Derivatives d = s1_derivatives(circle_jet(0.3, 0.0));
  EXPECT_NEAR(d.s1p, 1.0, 1e-15);
  EXPECT_NEAR(d.s1pp, 0.0, 1e-15);
  EXPECT_NEAR(d.s1ppp, 0.0, 1e-15);
}

TEST(S1Derivatives, LatitudeCircle) {
  const S1Derivatives d = s1_derivatives(circle_jet(1.1, kPi / 4));
  EXPECT_NEAR(d.s1p, 0.7071067812, 1e-10);
  EXPECT_NEAR(d.s1pp, 0.0, 1e-15);
}

TEST(S1Derivatives, MatchesFiniteDifferencesOfSpeed) {
  // q(u) = normalized (cos u², sin u², u): non-uniform speed.
  auto q = [](double u) { return normalized(Vec3{std::cos(u * u), std::sin(u * u), u}); };
  const double u0 = 0.8;
  const Jet3 j = fd_jet(q, u0, 1e-3);
  const S1Derivatives d = s1_derivatives(j);
  auto speed = [&](double u) {
    const Jet3 k = fd_jet(q, u, 1e-3);
    return Vec3{norm(k.d1), 0, 0};
  };
  const Jet3 sp = fd_jet(speed, u0, 1e-2);
  EXPECT_NEAR(d.s1p, sp.d0.x, 1e-9);
  EXPECT_NEAR(d.s1pp, sp.d1.x, 1e-5);
  EXPECT_NEAR(d.s1ppp, sp.d2.x, 1e-3);
}

TEST(S1Derivatives, ConstantDirectorIsCylindrical) {
  const Jet3 j{{0, 0, 1}, {}, {}, {}, Param::u};
  EXPECT_THROW(s1_derivatives(j), CylindricalDirector);
}

TEST(S1Derivatives, RejectsS1Tag) {
  Jet3 j = circle_jet(0.0, 0.0);
  j.param = Param::s1;
  EXPECT_THROW(s1_derivatives(j), TagError);
}

TEST(ReparamToS1, IdentityReparametrization) {
  const Jet3 in = circle_jet(0.4, 0.3);
  const Jet3 out = reparam_to_s1(in, {1.0, 0.0, 0.0});
  EXPECT_EQ(out.param, Param::s1);
  EXPECT_EQ(out.d0, in.d0);
  EXPECT_EQ(out.d1, in.d1);
  EXPECT_EQ(out.d2, in.d2);
  EXPECT_EQ(out.d3, in.d3);
}

TEST(ReparamToS1, LatitudeCircleAtZero) {
  const double beta = kPi / 4;
  const Jet3 in = circle_jet(0.0, beta);
  const Jet3 out = reparam_to_s1(in, s1_derivatives(in));
  EXPECT_LT(dist(out.d1, {0, 1, 0}), 1e-15);
}

TEST(ReparamToS1, UniformScaling) {
  const Jet3 in{{1, 2, 3}, {4, 8, 16}, {4, 8, 16}, {8, 16, 32}, Param::u};
  const Jet3 out = reparam_to_s1(in, {2.0, 0.0, 0.0});
  EXPECT_LT(dist(out.d1, in.d1 / 2), 1e-15);
  EXPECT_LT(dist(out.d2, in.d2 / 4), 1e-15);
  EXPECT_LT(dist(out.d3, in.d3 / 8), 1e-15);
}

TEST(ReparamToS1, RejectsS1Tag) {
  Jet3 j = circle_jet(0.0, 0.0);
  j.param = Param::s1;
  EXPECT_THROW(reparam_to_s1(j, {1, 0, 0}), TagError);
}

TEST(ReparamToS1, ChainRuleAgainstArcLengthCurve) {
  // q(u) = circle(φ(u)) with φ = u + u³/3: the s1-jet must be the unit circle jet at φ.
  auto q = [](double u) {
    const double p = u + u * u * u / 3;
    return Vec3{std::cos(p), std::sin(p), 0};
  };
  const double u0 = 0.6, p = u0 + u0 * u0 * u0 / 3;
  const double dp = 1 + u0 * u0, ddp = 2 * u0, dddp = 2;
  const Vec3 t{-std::sin(p), std::cos(p), 0}, n{-std::cos(p), -std::sin(p), 0};
  const Jet3 ju{{std::cos(p), std::sin(p), 0}, dp * t, ddp * t + dp * dp * n,
                dddp * t + 3 * dp * ddp * n - dp * dp * dp * t, Param::u};
  EXPECT_LT(dist(ju.d1, fd_jet(q, u0, 1e-3).d1), 1e-9);
  const Jet3 js = reparam_to_s1(ju, s1_derivatives(ju));
  EXPECT_LT(dist(js.d1, t), 1e-13);
  EXPECT_LT(dist(js.d2, n), 1e-13);
  EXPECT_LT(dist(js.d3, -t), 1e-13);
}

// Random unit directors q(u) = normalized(polynomial curve).
struct RandomDirector {
  Vec3 c0, c1, c2, c3;
  Vec3 raw(double u) const { return c0 + u * (c1 + u * (c2 + u * c3)); }
  Jet3 jet(double u) const {
    return fd_jet([this](double t) { return normalized(raw(t)); }, u, 1e-3);
  }
};

TEST(ReparamToS1Property, UnitDirectorIsArcLengthParametrized) {
  std::mt19937_64 rng(20261019);
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    RandomDirector d{{2 + c(rng), c(rng), c(rng)}, {c(rng), c(rng), c(rng)}, {c(rng), c(rng), c(rng)},
                     {c(rng), c(rng), c(rng)}};
    const Jet3 ju = d.jet(0.3 * c(rng));
    if (norm(ju.d1) < 0.05) continue;
    const Jet3 js = reparam_to_s1(ju, s1_derivatives(ju));
    EXPECT_NEAR(dot(js.d0, js.d1), 0.0, 1e-9);
    EXPECT_NEAR(norm(js.d1), 1.0, 1e-9);
  }
}

TEST(ReparamToS1Property, InverseScalingRecoversJet) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Jet3 in{{c(rng), c(rng), c(rng)}, {c(rng), c(rng), c(rng)}, {c(rng), c(rng), c(rng)},
                  {c(rng), c(rng), c(rng)}, Param::u};
    const double k = scale(rng);
    Jet3 mid = reparam_to_s1(in, {k, 0.0, 0.0});
    mid.param = Param::u;
    const Jet3 back = reparam_to_s1(mid, {1.0 / k, 0.0, 0.0});
    EXPECT_LT(dist(back.d0, in.d0), 1e-12);
    EXPECT_LT(dist(back.d1, in.d1), 1e-12 * (1 + norm(in.d1)));
    EXPECT_LT(dist(back.d2, in.d2), 1e-12 * (1 + norm(in.d2)));
    EXPECT_LT(dist(back.d3, in.d3), 1e-12 * (1 + norm(in.d3)));
  }
}

TEST(Transformed, RotatesEveryDerivative) {
  const Mat3 r = Mat3::rotation({1, 2, 3}, 0.7);
  const Jet3 in = circle_jet(0.2, 0.5);
  const Jet3 out = transformed(in, r);
  EXPECT_LT(dist(out.d0, r * in.d0), 1e-15);
  EXPECT_LT(dist(out.d3, r * in.d3), 1e-15);
  EXPECT_EQ(out.param, in.param);
}

}  // namespace
}  // namespace slant
