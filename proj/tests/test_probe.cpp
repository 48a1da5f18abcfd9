#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "curvball/catalog.hpp"
#include "curvball/errors.hpp"
#include "curvball/probe.hpp"

namespace curvball {
namespace {

constexpr double kUnitBall = 4.0 * M_PI / 3.0;

VerifierOptions quick() {
  VerifierOptions o;
  o.grid = 33;
  o.meshDensity = 48;
  return o;
}

TEST(Probe, ExtrapolatedVolumeOfSphere) {
  const double v = extrapolatedVolume(makeSphere({0.1, 0, 0}, 1.3), 24);
  EXPECT_NEAR(v, 4.0 * M_PI / 3.0 * 1.3 * 1.3 * 1.3, 1e-5);
}

// Volume of a radial graph: (1/3) integral of r^3 over the unit sphere, by a
// product midpoint rule in (cos theta, phi).
double radialVolumeOracle(const RadialPerturbation& f, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = -1.0 + (i + 0.5) * 2.0 / n;
    const double s = std::sqrt(1.0 - z * z);
    for (int k = 0; k < 2 * n; ++k) {
      const double phi = (k + 0.5) * M_PI / n;
      const double r = 1.0 + f.evaluate(s * std::cos(phi), s * std::sin(phi), z);
      sum += r * r * r;
    }
  }
  return sum * (2.0 / n) * (M_PI / n) / 3.0;
}

TEST(Probe, ExtrapolatedVolumeMatchesRadialIntegral) {
  const RadialPerturbation f = RadialPerturbation::monomials({0.02, -0.01, 0.03, 0.01, 0.0, 0.02, -0.01, 0.01});
  const double v = extrapolatedVolume(makePerturbedSphere(f, 1.0), 32);
  EXPECT_NEAR(v, radialVolumeOracle(f, 800), 1e-5);
}

TEST(Probe, ZeroDimensionalFamily) {
  ProbeConfig c;
  c.dimension = 0;
  const ProbeResult r = probeMinVolume(c, quick());
  EXPECT_NEAR(r.bestVolume, kUnitBall, 1e-5);
  EXPECT_TRUE(r.bestCoefficients.empty());
  EXPECT_EQ(r.evaluations, 0);
  EXPECT_TRUE(r.report.conclusion.passed());
}

TEST(Probe, ZeroBudgetReturnsStart) {
  ProbeConfig c;
  c.budget = 0;
  const ProbeResult r = probeMinVolume(c, quick());
  EXPECT_EQ(r.evaluations, 0);
  ASSERT_EQ(r.trajectory.size(), 1u);
  EXPECT_EQ(r.bestCoefficients, std::vector<double>(8, 0.0));
  EXPECT_NEAR(r.bestVolume, kUnitBall, 1e-5);
  EXPECT_TRUE(r.recheckPassed);
}

TEST(Probe, SmallRunIsDeterministicAndFeasible) {
  ProbeConfig c;
  c.dimension = 4;
  c.budget = 60;
  c.seed = 3;
  const ProbeResult a = probeMinVolume(c, quick());
  const ProbeResult b = probeMinVolume(c, quick());
  std::ostringstream ca;
  std::ostringstream cb;
  writeTrajectoryCsv(ca, a);
  writeTrajectoryCsv(cb, b);
  EXPECT_EQ(ca.str(), cb.str());
  EXPECT_EQ(a.evaluations, 60);
  EXPECT_EQ(a.trajectory.size(), 61u);
  EXPECT_GE(a.bestVolume, kUnitBall - 1e-3);
  EXPECT_TRUE(a.recheckPassed);
  for (const ProbeRecord& r : a.trajectory) {
    if (r.feasible) {
      EXPECT_LE(r.maxCurvature, 1.0 + 1e-9);
      EXPECT_LT(r.maxNorm, 2.0);
    } else {
      EXPECT_TRUE(std::isnan(r.volume));
      EXPECT_GT(r.violation, 0.0);
    }
  }
}

TEST(Probe, CsvLayout) {
  ProbeConfig c;
  c.dimension = 2;
  c.budget = 3;
  const ProbeResult r = probeMinVolume(c, quick());
  std::ostringstream out;
  writeTrajectoryCsv(out, r);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "evaluation,feasible,volume,max_curvature,max_norm,violation,c0,c1");
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first.rfind("0,1,", 0), 0u) << first;
}

TEST(Probe, NoFeasibleStart) {
  ProbeConfig c;
  VerifierOptions strict = quick();
  strict.curvatureBound = 0.5;
  EXPECT_THROW(probeMinVolume(c, strict), NoFeasibleStart);
}

TEST(Probe, ConfigValidation) {
  ProbeConfig c;
  c.dimension = 33;
  EXPECT_THROW(c.validate(), InvalidParameter);
  c = {};
  c.curvatureWeight = 0.0;
  EXPECT_THROW(c.validate(), InvalidParameter);
  c = {};
  c.budget = -1;
  EXPECT_THROW(c.validate(), InvalidParameter);
}

}  // namespace
}  // namespace curvball
