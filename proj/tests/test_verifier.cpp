#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "curvball/catalog.hpp"
#include "curvball/errors.hpp"
#include "curvball/verifier.hpp"
#include "support.hpp"

namespace curvball {
namespace {

using testing::Gen;

VerifierOptions quick() {
  VerifierOptions o;
  o.grid = 33;
  o.meshDensity = 48;
  o.distanceSeedGrid = 24;
  return o;
}

Vec3 sigma(const Vec3& x) { return (2.0 / norm(x)) * x; }

TEST(Verifier, RadialExpansionMatchesFiniteDifferenceProperty) {
  Gen g(71);
  for (int i = 0; i < 500; ++i) {
    const Vec3 x = g.uniform(0.2, 1.9) * g.unitVector();
    const Vec3 v = g.unitVector();
    const double h = 1e-6;
    const double fd = norm(sigma(x + h * v) - sigma(x - h * v)) / (2 * h);
    EXPECT_NEAR(radialExpansion(x, v), fd, 1e-6 * (1 + fd));
  }
}

TEST(Verifier, ExpansionOnUnitSphereIsTwo) {
  VerifierOptions o = quick();
  const ProjectionShortness p = checkProjectionShort(makeSphere({}, 1.0), o);
  EXPECT_NEAR(p.minExpansion, 2.0, 1e-9);
  EXPECT_NEAR(p.maxExpansion, 2.0, 1e-9);
  EXPECT_EQ(p.directions, p.samples * 8);
  EXPECT_TRUE(p.check.passed());
}

TEST(Verifier, ExpansionBoundedByAngleFormula) {
  // The minimum over tangent directions is 2 cos(alpha) / |x|; with 8
  // directions the sampled minimum can only be larger.
  const Vec3 c{0.3, -0.2, 0.1};
  const double r = 1.4;
  const ProjectionShortness p = checkProjectionShort(makeSphere(c, r), quick());
  double exact = 1e300;
  Gen g(72);
  for (int i = 0; i < 200000; ++i) {
    const Vec3 n = g.unitVector();
    const Vec3 x = c + r * n;
    exact = std::min(exact, 2.0 * dot(x, n) / (norm(x) * norm(x)));
  }
  EXPECT_GE(p.minExpansion, exact - 1e-6);
  EXPECT_LT(p.minExpansion, exact + 5e-2);
}

// min over the sphere of 2 cos(alpha) - |x|, by dense sampling.
double starSlackOracle(const Vec3& c, double r) {
  Gen g(73);
  double best = 1e300;
  for (int i = 0; i < 200000; ++i) {
    const Vec3 n = g.unitVector();
    const Vec3 x = c + r * n;
    best = std::min(best, 2.0 * dot(x, n) / norm(x) - norm(x));
  }
  return best;
}

TEST(Verifier, StarShapeSlackMatchesOracle) {
  for (const auto& [c, r] : {std::pair{Vec3{0.3, 0, 0}, 1.5}, std::pair{Vec3{0.2, 0.4, -0.1}, 1.2},
                             std::pair{Vec3{0.0, 0.0, 0.7}, 1.0}}) {
    const StarShape s = checkStarShape(makeSphere(c, r), quick());
    EXPECT_TRUE(s.check.passed());
    EXPECT_EQ(s.origin, Containment::kInside);
    EXPECT_NEAR(s.minSlack, starSlackOracle(c, r), 1e-3);
    EXPECT_NEAR(s.minNorm, r - norm(c), 1e-3);
  }
}

TEST(Verifier, StarShapeFailsPastRadiusTwo) {
  // |c| + r = 2.1: the radial inequality fails near the far side.
  const StarShape s = checkStarShape(makeSphere({0.6, 0, 0}, 1.5), quick());
  EXPECT_FALSE(s.check.passed());
  EXPECT_LT(s.minSlack, 0.0);
  EXPECT_GT(s.slackWitness.x, 0.0);
}

TEST(Verifier, OriginOutsideFailsStarShape) {
  const StarShape s = checkStarShape(makeSphere({1.5, 0, 0}, 1.0), quick());
  EXPECT_EQ(s.origin, Containment::kOutside);
  EXPECT_FALSE(s.check.passed());
}

TEST(Verifier, OriginOnSurfaceThrows) {
  EXPECT_THROW(checkStarShape(makeSphere({1.0, 0, 0}, 1.0), quick()), OriginOnSurface);
}

TEST(Verifier, SampleAtOriginThrowsForProjection) {
  // Odd grid: the center of the -x face lands exactly on the origin.
  EXPECT_THROW(checkProjectionShort(makeSphere({1.0, 0, 0}, 1.0), quick()), ProjectionUndefined);
}

TEST(Verifier, CurvatureHypothesis) {
  VerifierOptions o = quick();
  EXPECT_TRUE(checkCurvatureHypothesis(makeSphere({0.2, 0, 0}, 1.0), o).check.passed());
  EXPECT_TRUE(checkCurvatureHypothesis(makeEllipsoid({}, 1.2, 1.25, 1.3), o).check.passed());
  const CurvatureHypothesis bad = checkCurvatureHypothesis(makeSphere({}, 0.9), o);
  EXPECT_FALSE(bad.check.passed());
  EXPECT_NEAR(bad.maximum.value, 1.0 / 0.9, 1e-12);
  EXPECT_FALSE(checkCurvatureHypothesis(makePerturbedSphere(RadialPerturbation::cos3Theta(), 0.05), o).check.passed());
  o.derivatives = DerivativeMode::kFiniteDifference;
  EXPECT_DOUBLE_EQ(o.curvatureSlack(), 1e-4);
  EXPECT_TRUE(checkCurvatureHypothesis(makeSphere({}, 1.0), o).check.passed());
}

TEST(Verifier, BoundingBall) {
  const BoundingBall in = checkBoundingBall(makeSphere({0.4, 0, 0}, 1.5), quick());
  EXPECT_TRUE(in.check.passed());
  EXPECT_NEAR(in.maxNorm, 1.9, 1e-12);
  EXPECT_FALSE(checkBoundingBall(makeSphere({1.05, 0, 0}, 1.0), quick()).check.passed());
  // Touching the radius-2 sphere is not inside the open ball.
  EXPECT_FALSE(checkBoundingBall(makeSphere({1.0, 0, 0}, 1.0), quick()).check.passed());
}

TEST(Verifier, EnclosedBallTangency) {
  // Farthest point x = (1.95, 0, 0); the ball with diameter O-x is internally
  // tangent to the sphere at x, so the margin is 0 by construction.
  const EnclosedBall b = checkEnclosedBallLemma(makeSphere({0.55, 0, 0}, 1.4), quick());
  EXPECT_NEAR(b.ball.radius, 0.975, 1e-12);
  EXPECT_NEAR(b.ball.center.x, 0.975, 1e-12);
  EXPECT_GE(b.margin, -1e-6);
  EXPECT_LE(b.margin, 1e-3);
  EXPECT_EQ(b.center, Containment::kInside);
  EXPECT_TRUE(b.check.passed());
  // The tessellation cuts inside the sphere, so its margin is slightly negative.
  EXPECT_LT(b.meshMargin, 0.0);
}

TEST(Verifier, EnclosedBallPreconditions) {
  EXPECT_THROW(checkEnclosedBallLemma(makeSphere({}, 0.9), quick()), PreconditionFailed);
  EXPECT_THROW(checkEnclosedBallLemma(makeSphere({1.2, 0, 0}, 1.0), quick()), PreconditionFailed);
}

TEST(Verifier, TheoremOnAdmissibleSpheres) {
  for (const auto& [c, r] : {std::pair{Vec3{}, 1.0}, std::pair{Vec3{0.4, 0, 0}, 1.5},
                             std::pair{Vec3{0.0, 0.3, -0.2}, 1.2}}) {
    const VerificationReport rep = verifyTheorem(makeSphere(c, r), quick());
    EXPECT_TRUE(rep.hypothesesHold());
    EXPECT_TRUE(rep.conclusion.passed()) << rep.conclusion.note;
    EXPECT_NEAR(rep.conclusion.value, 1.0 - 0.5e-4, 1e-9);
    ASSERT_TRUE(rep.finalBall.has_value());
    EXPECT_NEAR(rep.finalBall->margin, 0.0, 1e-6);
    EXPECT_NEAR(norm(rep.maxDistance.point.position), norm(c) + r, 1e-12);
  }
}

TEST(Verifier, TheoremSkipsConclusionWhenHypothesesFail) {
  const VerificationReport rep = verifyTheorem(makeSphere({1.05, 0, 0}, 1.0), quick());
  EXPECT_FALSE(rep.hypothesesHold());
  EXPECT_EQ(rep.conclusion.verdict, Verdict::kSkipped);
  const VerificationReport small = verifyTheorem(makeSphere({}, 0.8), quick());
  EXPECT_FALSE(small.curvature.check.passed());
  EXPECT_EQ(small.conclusion.verdict, Verdict::kSkipped);
}

TEST(Verifier, ReportCheckOrder) {
  const VerificationReport rep = verifyTheorem(makeSphere({}, 1.0), quick());
  std::vector<std::string> names;
  for (const CheckResult& c : rep.checks()) names.push_back(c.name);
  const std::vector<std::string> expected{"curvature-bound",  "bounding-ball",         "origin-inside",
                                          "star-shape",       "projection-short",      "max-distance-point",
                                          "enclosed-ball",    "translated-star-shape", "final-ball",
                                          "theorem-conclusion"};
  EXPECT_EQ(names, expected);
}

TEST(Verifier, BowLemmaOnSphereAndEllipsoid) {
  const BowCheck sphere = checkBowEndpointDistance(makeSphere({}, 1.0), 6, 3);
  EXPECT_TRUE(sphere.check.passed());
  EXPECT_NEAR(sphere.minChord, 2.0, 1e-4);
  // All normal curvatures <= 1, so every length-pi geodesic has chord >= 2.
  const BowCheck ell = checkBowEndpointDistance(makeEllipsoid({}, 1.2, 1.25, 1.3), 6, 4);
  EXPECT_TRUE(ell.check.passed());
  EXPECT_GT(ell.minChord, 2.0);
}

}  // namespace
}  // namespace curvball
