#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "curvball/jet.hpp"
#include "curvball/vec3.hpp"
#include "support.hpp"

namespace curvball {
namespace {

using testing::Gen;

TEST(Vec3, BasicAlgebra) {
  const Vec3 a{1, 2, 3};
  const Vec3 b{-2, 0.5, 4};
  EXPECT_DOUBLE_EQ(dot(a, b), -2 + 1 + 12);
  EXPECT_EQ(cross(Vec3{1, 0, 0}, Vec3{0, 1, 0}), (Vec3{0, 0, 1}));
  EXPECT_DOUBLE_EQ(norm(Vec3{3, 4, 12}), 13.0);
  EXPECT_EQ(normalized(Vec3{}), Vec3{});
  EXPECT_NEAR(angleBetween({1, 0, 0}, {0, 0, -2}), M_PI / 2, 1e-15);
}

TEST(Vec3, CrossIsOrthogonalProperty) {
  Gen g(11);
  for (int i = 0; i < 500; ++i) {
    const Vec3 a = 3.0 * g.unitVector();
    const Vec3 b = 2.0 * g.unitVector();
    const Vec3 c = cross(a, b);
    EXPECT_NEAR(dot(c, a), 0.0, 1e-13);
    EXPECT_NEAR(dot(c, b), 0.0, 1e-13);
    // Lagrange identity.
    EXPECT_NEAR(squaredNorm(c), squaredNorm(a) * squaredNorm(b) - dot(a, b) * dot(a, b), 1e-12);
  }
}

TEST(RigidMotion, PreservesDistancesProperty) {
  Gen g(12);
  for (int i = 0; i < 200; ++i) {
    const RigidMotion m = g.motion();
    const Vec3 p = g.unitVector();
    const Vec3 q = 2.5 * g.unitVector();
    EXPECT_NEAR(distance(m.apply(p), m.apply(q)), distance(p, q), 1e-13);
    EXPECT_NEAR(norm(m.rotate(p)), 1.0, 1e-14);
  }
}

TEST(RigidMotion, QuarterTurnAboutZ) {
  const RigidMotion m = RigidMotion::rotationAbout({0, 0, 1}, M_PI / 2);
  const Vec3 r = m.apply({1, 0, 0});
  EXPECT_NEAR(r.x, 0.0, 1e-15);
  EXPECT_NEAR(r.y, 1.0, 1e-15);
}

// Central-difference oracle for the partials of f(u, v).
struct Partials {
  double du, dv, duu, duv, dvv;
};

Partials finiteDifferences(const std::function<double(double, double)>& f, double u, double v) {
  const double h = 1e-4;
  return {(f(u + h, v) - f(u - h, v)) / (2 * h), (f(u, v + h) - f(u, v - h)) / (2 * h),
          (f(u + h, v) - 2 * f(u, v) + f(u - h, v)) / (h * h),
          (f(u + h, v + h) - f(u + h, v - h) - f(u - h, v + h) + f(u - h, v - h)) / (4 * h * h),
          (f(u, v + h) - 2 * f(u, v) + f(u, v - h)) / (h * h)};
}

template <class F>
void expectJetMatches(F f, double u, double v) {
  const Jet2 j = f(Jet2::variableU(u), Jet2::variableV(v));
  const Partials p = finiteDifferences([&](double a, double b) { return valueOf(f(Jet2(a), Jet2(b))); }, u, v);
  EXPECT_NEAR(j.val, valueOf(f(Jet2(u), Jet2(v))), 1e-15);
  EXPECT_NEAR(j.du, p.du, 1e-7 * (1 + std::abs(p.du)));
  EXPECT_NEAR(j.dv, p.dv, 1e-7 * (1 + std::abs(p.dv)));
  EXPECT_NEAR(j.duu, p.duu, 1e-4 * (1 + std::abs(p.duu)));
  EXPECT_NEAR(j.duv, p.duv, 1e-4 * (1 + std::abs(p.duv)));
  EXPECT_NEAR(j.dvv, p.dvv, 1e-4 * (1 + std::abs(p.dvv)));
}

TEST(Jet2, ElementaryFunctionsMatchFiniteDifferences) {
  Gen g(13);
  for (int i = 0; i < 100; ++i) {
    const double u = g.uniform(0.2, 1.2);
    const double v = g.uniform(-0.7, 0.7);
    expectJetMatches([](Jet2 a, Jet2 b) { return sin(a * b) + cos(a) * exp(b); }, u, v);
    expectJetMatches([](Jet2 a, Jet2 b) { return sqrt(a * a + b * b + 0.5) / (1.0 + a); }, u, v);
    expectJetMatches([](Jet2 a, Jet2 b) { return atan(a - 2.0 * b) * tan(0.5 * b); }, u, v);
  }
}

TEST(Jet2, ProductRuleExact) {
  const Jet2 u = Jet2::variableU(2.0);
  const Jet2 v = Jet2::variableV(3.0);
  const Jet2 p = u * u * v;  // u^2 v
  EXPECT_DOUBLE_EQ(p.val, 12.0);
  EXPECT_DOUBLE_EQ(p.du, 12.0);
  EXPECT_DOUBLE_EQ(p.dv, 4.0);
  EXPECT_DOUBLE_EQ(p.duu, 6.0);
  EXPECT_DOUBLE_EQ(p.duv, 4.0);
  EXPECT_DOUBLE_EQ(p.dvv, 0.0);
}

}  // namespace
}  // namespace curvball
