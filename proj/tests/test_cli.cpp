#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string output;
};

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("curvball-cli-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

Outcome run(const std::string& args, const fs::path& dir) {
  const fs::path log = dir / "stdout.txt";
  const std::string cmd = std::string(CURVBALL_EXE) + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  Outcome r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json readJson(const fs::path& p) { return nlohmann::json::parse(slurp(p)); }

TEST(Cli, AnalyzeReportsMaxCurvature) {
  const fs::path dir = scratch("analyze");
  const std::pair<const char*, double> cases[] = {
      {"sphere:r=1", 1.0}, {"torus:R=2,r=1", 1.0}, {"sphere:r=0.5", 2.0}};
  for (const auto& [spec, expected] : cases) {
    const Outcome r = run(std::string("analyze --density 32 --surface ") + spec + " --out " + dir.string(), dir);
    ASSERT_EQ(r.code, 0) << r.output;
    EXPECT_NEAR(readJson(dir / "curvature.json")["maxAbsCurvature"].get<double>(), expected, 1e-9) << spec;
  }
}

TEST(Cli, AnalyzeWritesObj) {
  const fs::path dir = scratch("obj");
  ASSERT_EQ(run("analyze --surface torus:R=2,r=1 --density 8 --obj 8 --out " + dir.string(), dir).code, 0);
  EXPECT_NE(slurp(dir / "surface.obj").find("\nf "), std::string::npos);
}

TEST(Cli, VerifyExitCodes) {
  const fs::path dir = scratch("verify");
  const std::string opts = " --density 33 --mesh-density 48 --out " + dir.string();
  EXPECT_EQ(run("verify --surface sphere:r=1" + opts, dir).code, 0);
  EXPECT_EQ(readJson(dir / "report.json")["conclusion"], "pass");
  EXPECT_EQ(run("verify --surface sphere:r=1,cx=1.05" + opts, dir).code, 2);
  EXPECT_EQ(readJson(dir / "report.json")["conclusion"], "skipped");
  EXPECT_EQ(run("verify --surface sphere:r=1.5,cx=0.4" + opts, dir).code, 0);
  const auto report = readJson(dir / "report.json");
  EXPECT_EQ(report["checks"].size(), 10u);
  EXPECT_EQ(report["checks"][0]["name"], "curvature-bound");
  EXPECT_NEAR(report["finalBall"]["radius"].get<double>(), 0.99995, 1e-9);
}

TEST(Cli, VerifyToleranceFlags) {
  const fs::path dir = scratch("tol");
  const Outcome r = run("verify --surface sphere:r=1 --density 17 --mesh-density 32 --tol-curvature 1e-6 "
                    "--tol-containment 1e-7 --out " + dir.string(), dir);
  ASSERT_EQ(r.code, 0) << r.output;
  const auto opts = readJson(dir / "report.json")["options"];
  EXPECT_DOUBLE_EQ(opts["curvatureSlack"].get<double>(), 1e-6);
  EXPECT_DOUBLE_EQ(opts["containmentSlack"].get<double>(), 1e-7);
}

TEST(Cli, VerifyIsByteDeterministic) {
  const fs::path a = scratch("det-a");
  const fs::path b = scratch("det-b");
  const std::string args = "verify --surface perturbed:amp=1,coeffs=0.02;0.01 --density 33 --mesh-density 48";
  run(args + " --out " + a.string(), a);
  run(args + " --out " + b.string(), b);
  EXPECT_EQ(slurp(a / "report.json"), slurp(b / "report.json"));
}

TEST(Cli, ConfigFileAndErrors) {
  const fs::path dir = scratch("config");
  {
    std::ofstream f(dir / "s.ini");
    f << "[sphere]\nr = 1.2\ncx = 0.3\n";
  }
  EXPECT_EQ(run("verify --density 17 --mesh-density 32 --config " + (dir / "s.ini").string() + " --out " +
                    dir.string(),
                dir)
                .code,
            0);
  const Outcome bad = run("analyze --surface sphere:r=1,cx=abc --out " + dir.string(), dir);
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.output.find("line 1, column 15"), std::string::npos) << bad.output;
  {
    std::ofstream f(dir / "bad.ini");
    f << "[sphere]\nradius = 1\n";
  }
  const Outcome badFile = run("analyze --config " + (dir / "bad.ini").string(), dir);
  EXPECT_EQ(badFile.code, 1);
  EXPECT_NE(badFile.output.find("line 2, column 1"), std::string::npos) << badFile.output;
}

TEST(Cli, FishbowlOutputs) {
  const fs::path dir = scratch("fishbowl");
  const Outcome r = run("fishbowl --density 16 --out " + dir.string(), dir);
  ASSERT_EQ(r.code, 0) << r.output;
  const auto j = readJson(dir / "fishbowl.json");
  EXPECT_NEAR(j["mainBody"]["closedForm"].get<double>(), 22 * M_PI / 3 - 2 * M_PI * M_PI, 1e-12);
  EXPECT_EQ(j["eulerCharacteristic"], -2);
  EXPECT_EQ(j["genus"], 2);
  EXPECT_TRUE(fs::exists(dir / "fishbowl.obj"));
  for (const char* c : {"tunnel", "collar", "plate-face", "plate-rim", "plate-corner", "hole-rim"}) {
    EXPECT_TRUE(fs::exists(dir / (std::string("fishbowl-") + c + ".obj"))) << c;
  }
  EXPECT_NE(r.output.find("main body volume"), std::string::npos);
}

TEST(Cli, ProbeRerunIsByteIdentical) {
  const fs::path a = scratch("probe-a");
  const fs::path b = scratch("probe-b");
  const std::string args = "probe --dim 3 --budget 20 --seed 5";
  ASSERT_EQ(run(args + " --out " + a.string(), a).code, 0);
  ASSERT_EQ(run(args + " --out " + b.string(), b).code, 0);
  EXPECT_EQ(slurp(a / "probe.csv"), slurp(b / "probe.csv"));
  EXPECT_EQ(slurp(a / "probe.json"), slurp(b / "probe.json"));
  EXPECT_EQ(readJson(a / "probe.json")["evaluations"], 20);
}

TEST(Cli, MissingSurfaceIsAnError) {
  const fs::path dir = scratch("missing");
  EXPECT_EQ(run("verify --out " + dir.string(), dir).code, 1);
  EXPECT_NE(run("bogus", dir).code, 0);
}

}  // namespace
