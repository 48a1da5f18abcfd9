#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "curvball/catalog.hpp"
#include "curvball/sampling.hpp"
#include "support.hpp"

namespace curvball {
namespace {

using testing::Gen;

// Independent oracle: the radial graph in spherical coordinates, partials by
// central differences and principal curvatures from the shape operator.
Vec3 radialGraph(const RadialPerturbation& f, double amp, double theta, double phi) {
  const Vec3 d{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
  return (1.0 + amp * f.evaluate(d.x, d.y, d.z)) * d;
}

double oracleMaxCurvature(const RadialPerturbation& f, double amp, int nTheta, int nPhi) {
  const double h = 1e-4;
  double best = 0.0;
  for (int i = 1; i < nTheta; ++i) {
    const double t = M_PI * i / nTheta;
    for (int k = 0; k < nPhi; ++k) {
      const double p = 2 * M_PI * k / nPhi;
      auto r = [&](double a, double b) { return radialGraph(f, amp, a, b); };
      const Vec3 x = r(t, p);
      const Vec3 rt = (r(t + h, p) - r(t - h, p)) / (2 * h);
      const Vec3 rp = (r(t, p + h) - r(t, p - h)) / (2 * h);
      const Vec3 rtt = (r(t + h, p) - 2.0 * x + r(t - h, p)) / (h * h);
      const Vec3 rpp = (r(t, p + h) - 2.0 * x + r(t, p - h)) / (h * h);
      const Vec3 rtp = (r(t + h, p + h) - r(t + h, p - h) - r(t - h, p + h) + r(t - h, p - h)) / (4 * h * h);
      const Vec3 n = normalized(cross(rt, rp));
      const double E = dot(rt, rt), F = dot(rt, rp), G = dot(rp, rp);
      const double L = dot(rtt, n), M = dot(rtp, n), N = dot(rpp, n);
      const double det = E * G - F * F;
      const double H = (E * N - 2 * F * M + G * L) / (2 * det);
      const double K = (L * N - M * M) / det;
      const double disc = std::sqrt(std::max(0.0, H * H - K));
      best = std::max({best, std::abs(H + disc), std::abs(H - disc)});
    }
  }
  return best;
}

TEST(Sampling, GridPointCount) {
  EXPECT_EQ(gridPointCount(makeSphere({}, 1), 105), 6u * 105u * 105u);
  std::size_t visited = 0;
  forEachGridPoint(makeTorus(2, 1), 7, [&](std::size_t, ParamPoint) { ++visited; });
  EXPECT_EQ(visited, 4u * 49u);
}

TEST(Sampling, PerturbedSphereMaxCurvatureMatchesDenseOracle) {
  const RadialPerturbation f = RadialPerturbation::cos3Theta();
  const double oracle = oracleMaxCurvature(f, 0.05, 400, 16);
  const SurfaceCurvatureMaximum m = maxAbsNormalCurvature(makePerturbedSphere(f, 0.05), 64);
  EXPECT_NEAR(m.value, oracle, 1e-4 * oracle);
  EXPECT_GT(m.value, 1.0);
}

TEST(Sampling, AsymmetricPerturbationMatchesDenseOracle) {
  const RadialPerturbation f = RadialPerturbation::monomials({0.2, -0.1, 0.0, 0.5, 0.3, 0.0, -0.4, 0.2});
  const double oracle = oracleMaxCurvature(f, 0.05, 300, 600);
  const SurfaceCurvatureMaximum m = maxAbsNormalCurvature(makePerturbedSphere(f, 0.05), 64);
  // The refined lattice maximum can only exceed the coarser oracle grid by
  // the oracle's own discretization error.
  EXPECT_NEAR(m.value, oracle, 1e-4 * oracle);
}

TEST(Sampling, FarthestPointMatchesDenseOracle) {
  const RadialPerturbation f = RadialPerturbation::monomials({0.3, 0.1, -0.2, 0.4});
  const Vec3 c{0.2, -0.1, 0.05};
  const Surface s = makePerturbedSphere(f, 0.05, c);
  double oracle = 0.0;
  const int n = 1500;
  for (int i = 0; i <= n; ++i) {
    for (int k = 0; k < 2 * n; ++k) {
      oracle = std::max(oracle, norm(c + radialGraph(f, 0.05, M_PI * i / n, M_PI * k / n)));
    }
  }
  const SurfacePoint far = farthestPointFromOrigin(s, 64);
  EXPECT_NEAR(norm(far.position), oracle, 1e-6);
  EXPECT_GE(norm(far.position), oracle - 1e-12);
}

TEST(Sampling, FarthestPointOfOffsetSphere) {
  Gen g(51);
  for (int i = 0; i < 20; ++i) {
    const Vec3 c = g.uniform(0.0, 0.8) * g.unitVector();
    const double r = g.uniform(0.5, 1.5);
    const SurfacePoint far = farthestPointFromOrigin(makeSphere(c, r), 32);
    EXPECT_NEAR(norm(far.position), norm(c) + r, 1e-12);
  }
}

TEST(Sampling, NearestPointOnSphereProperty) {
  Gen g(52);
  const Vec3 c{0.3, 0.2, -0.1};
  const Surface s = makeSphere(c, 1.2);
  for (int i = 0; i < 30; ++i) {
    const Vec3 q = c + g.uniform(0.1, 2.5) * g.unitVector();
    const SurfacePoint p = nearestSurfacePoint(s, q, 16);
    EXPECT_NEAR(distance(p.position, q), std::abs(distance(q, c) - 1.2), 1e-10);
  }
}

TEST(Sampling, CompassSearchFindsMaximum) {
  const SurfacePatch plane = makeAnalyticPatch(
      [](auto u, auto v) { return BasicVec3<decltype(u)>{u, v, u * 0.0}; }, ParamDomain{-1, 1, -1, 1});
  const ParamPoint p =
      compassSearchMax(plane, {0, 0}, 0.1, 1e-12, [](const Vec3& x) { return -std::hypot(x.x - 0.3, x.y + 0.45); });
  EXPECT_NEAR(p.u, 0.3, 1e-10);
  EXPECT_NEAR(p.v, -0.45, 1e-10);
}

}  // namespace
}  // namespace curvball
