#include <gtest/gtest.h>

#include <sstream>

#include "curvball/errors.hpp"
#include "curvball/sampling.hpp"
#include "curvball/surface_config.hpp"

namespace curvball {
namespace {

void expectConfigError(const std::function<void()>& f, int line, int column) {
  try {
    f();
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

TEST(Config, InlineSpec) {
  const SurfaceSpec s = parseInlineSpec("sphere:r=1.5,cx=0.4");
  EXPECT_EQ(s.type, "sphere");
  ASSERT_EQ(s.entries.size(), 2u);
  EXPECT_EQ(s.find("r")->value, "1.5");
  EXPECT_EQ(s.find("cx")->keyColumn, 14);
  EXPECT_EQ(s.find("cx")->column, 17);
  EXPECT_EQ(s.find("cz"), nullptr);
  const Surface surface = buildSurface(s);
  EXPECT_NEAR(norm(farthestPointFromOrigin(surface, 16).position), 1.9, 1e-12);
}

TEST(Config, BareType) {
  EXPECT_EQ(parseInlineSpec("fishbowl").type, "fishbowl");
  EXPECT_NEAR(maxAbsNormalCurvature(buildSurface(parseInlineSpec("sphere")), 8).value, 1.0, 1e-12);
}

TEST(Config, InlineErrorsCarryColumns) {
  expectConfigError([] { parseInlineSpec("sphere:r=1,cx"); }, 1, 12);
  expectConfigError([] { parseInlineSpec("sphere:radius=1"); }, 1, 8);
  expectConfigError([] { parseInlineSpec("cube:r=1"); }, 1, 1);
  expectConfigError([] { buildSurface(parseInlineSpec("sphere:r=1,cx=abc")); }, 1, 15);
  expectConfigError([] { parseInlineSpec("sphere:r=1,r=2"); }, 1, 12);
  expectConfigError([] { parseInlineSpec(":r=1"); }, 1, 1);
}

TEST(Config, PerturbedCoefficients) {
  const Surface s = buildSurface(parseInlineSpec("perturbed:amp=1,coeffs=0.01;0;0.02"));
  EXPECT_EQ(s.patchCount(), 6u);
  expectConfigError([] { buildSurface(parseInlineSpec("perturbed:coeffs=0.1;x")); }, 1, 22);
  expectConfigError([] { buildSurface(parseInlineSpec("perturbed:f=sin2phi")); }, 1, 13);
}

TEST(Config, SectionFile) {
  std::istringstream in(
      "# offset torus\n"
      "[torus]\n"
      "R = 2.5   ; axis radius\n"
      "  r = 1\n");
  const SurfaceSpec s = parseSpecFile(in);
  EXPECT_EQ(s.type, "torus");
  EXPECT_EQ(s.find("R")->line, 3);
  EXPECT_EQ(s.find("r")->value, "1");
  EXPECT_NEAR(maxAbsNormalCurvature(buildSurface(s), 32).value, 1.0, 1e-12);
}

TEST(Config, SectionFileErrors) {
  auto parse = [](const std::string& text) {
    return [text] {
      std::istringstream in(text);
      buildSurface(parseSpecFile(in));
    };
  };
  expectConfigError(parse("r = 1\n"), 1, 1);
  expectConfigError(parse("[sphere\n"), 1, 1);
  expectConfigError(parse("[sphere]\nr 1\n"), 2, 1);
  expectConfigError(parse("[sphere]\n\n  rr = 1\n"), 3, 3);
  expectConfigError(parse("[sphere]\nr = 1\n[torus]\n"), 3, 1);
  expectConfigError(parse("[sphere]\nr = 1x\n"), 2, 5);
  expectConfigError(parse("# nothing\n"), 2, 1);
}

TEST(Config, FishbowlParams) {
  const FishbowlParams p = fishbowlParams(parseInlineSpec("fishbowl:plateLength=10,plateGap=0.02"));
  EXPECT_DOUBLE_EQ(p.plateLength, 10.0);
  EXPECT_DOUBLE_EQ(p.plateGap, 0.02);
  EXPECT_DOUBLE_EQ(p.halfCircleRadius, 1.0);
}

TEST(Config, GeometryErrorsPropagate) {
  EXPECT_THROW(buildSurface(parseInlineSpec("sphere:r=-1")), InvalidRadius);
  EXPECT_THROW(buildSurface(parseInlineSpec("torus:R=1,r=2")), SelfIntersecting);
}

}  // namespace
}  // namespace curvball
